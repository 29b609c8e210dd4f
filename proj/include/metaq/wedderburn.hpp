#pragma once

#include "metaq/fields.hpp"
#include "metaq/group_algebra.hpp"

namespace metaq {

enum class DivisionFlag { Split, Division, Unknown };
std::string to_string(DivisionFlag f);

struct ShodaPair {
    Subgroup h, k;
};

// One Wedderburn component of QG:
//   M_{matrix_size}( Q(zeta_m)[u | zeta u = u zeta^x, u^k = zeta^y] )
// with center the fixed field of sigma_x in Q(zeta_m).
struct SimpleComponentDescriptor {
    Int matrix_size;  // [G : N_G(K)]
    Int m;            // [H : K]
    Int k;            // [N_G(K) : H]
    Int x, y;
    Int degree;  // [G : H] = matrix_size * k
    AbelianFieldDescriptor center;
    DivisionFlag flag = DivisionFlag::Unknown;

    // full key, used to order decompositions deterministically
    auto key() const {
        return std::tuple<const Int&, const Int&, const AbelianFieldDescriptor&, const Int&,
                          const Int&, const Int&, const Int&, int>(
            degree, matrix_size, center, m, k, x, y, int(flag));
    }
    bool operator<(const SimpleComponentDescriptor& o) const { return key() < o.key(); }
    bool operator==(const SimpleComponentDescriptor& o) const { return key() == o.key(); }
};

struct WedderburnComponent {
    SimpleComponentDescriptor desc;
    ShodaPair pair;  // the first generating pair, in enumeration order
    AlgebraElement idempotent;
};

struct DecompositionOptions {
    bool verify_ss3 = true;         // distinct conjugates of epsilon multiply to zero
    bool verify_idempotent = true;  // e^2 = e per component
    bool verify_core = true;        // {g : g e = e} = Core_G(K)
    bool verify_orthogonality = false;  // implied by the above; direct check is quadratic
};

struct WedderburnDecomposition {
    std::vector<WedderburnComponent> components;  // sorted by descriptor key
    size_t count() const { return components.size(); }
};

// Representative (H, K) pairs, one per primitive central idempotent, from a maximal
// abelian subgroup containing <a>.
std::vector<ShodaPair> strong_shoda_pairs(const DenseGroup& G);

// The full decomposition; asserts partition of unity, the Artin count, and the
// dimension identities.
WedderburnDecomposition wedderburn_decomposition(const DenseGroup& G,
                                                 const DecompositionOptions& opts = {});

// requires k = 2: Split when u^k = 1; Division by the totally-definite quaternion
// criterion (real center, imaginary top field, u^2 = -1); Unknown otherwise
DivisionFlag classify_degree2_division(const SimpleComponentDescriptor& c);

bool is_p_power(const Int& v, const Int& p);

// degree a power of p, center inside a p-power cyclotomic field, and the top
// conductor m with its p-part removed in {1, 2}; equivalent to the strong-Shoda-pair
// criterion ([G:H] a p-power and [H:K]_{p'} in {1,2})
bool p_component_predicate(const SimpleComponentDescriptor& c, const Int& p);

bool has_component_with(const WedderburnDecomposition& dec, const AbelianFieldDescriptor& center,
                        const Int& degree);

}  // namespace metaq
