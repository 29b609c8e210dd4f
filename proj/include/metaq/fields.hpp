#pragma once

#include "metaq/numtheory.hpp"

namespace metaq {

// A subfield of Q(zeta_conductor): the fixed field of `kernel`, a subgroup of the
// units modulo the conductor.  Canonical: the conductor is minimal, so descriptor
// equality is field equality.
struct AbelianFieldDescriptor {
    Int conductor;
    std::vector<Int> kernel;  // all members, sorted (kernel = Gal(Q(zeta_f)/F))

    Int degree() const { return euler_phi(conductor) / Int(kernel.size()); }
    bool is_rationals() const { return conductor == 1; }
    bool is_totally_real() const;

    bool operator==(const AbelianFieldDescriptor&) const = default;
    bool operator<(const AbelianFieldDescriptor& o) const {
        return conductor < o.conductor || (conductor == o.conductor && kernel < o.kernel);
    }
    std::string str() const;
};

// subgroup of units mod n generated by the given residues (all coprime to n)
std::vector<Int> unit_subgroup(const Int& n, const std::vector<Int>& gens);

// The fixed field of <gens> inside Q(zeta_n), with the conductor minimized:
// the smallest f | n with ker(units(n) -> units(f)) inside the subgroup.
AbelianFieldDescriptor canonicalize_field(const Int& n, const std::vector<Int>& gens);

AbelianFieldDescriptor rationals_descriptor();
// Q(zeta_m + zeta_m^-1), the fixed field of -1
AbelianFieldDescriptor real_cyclotomic_descriptor(const Int& m);

}  // namespace metaq
