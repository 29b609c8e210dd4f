#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "metaq/presentation.hpp"

namespace metaq {

// Subset of the elements of a DenseGroup, by element index.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(int universe) : universe_(universe), bits_((universe + 63) / 64, 0) {}

    bool test(int i) const { return bits_[i >> 6] >> (i & 63) & 1; }
    void set(int i) { bits_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { bits_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    int universe() const { return universe_; }
    int count() const;
    std::vector<int> members() const;
    bool contains(const ElementSet& other) const;  // superset (or equal)
    ElementSet intersect(const ElementSet& other) const;

    bool operator==(const ElementSet&) const = default;
    const std::vector<uint64_t>& words() const { return bits_; }

private:
    int universe_ = 0;
    std::vector<uint64_t> bits_;
};

struct Subgroup {
    ElementSet set;
    std::vector<int> gens;     // a generating list (small)
    std::vector<int> members;  // sorted element indices
    int order() const { return (int)members.size(); }
    bool operator==(const Subgroup& o) const { return set == o.set; }
};

struct PiSignature {
    std::vector<Int> pi;        // primes p with a normal Hall p'-subgroup
    std::vector<Int> pi_prime;  // the other primes of |G|
};

struct SubgroupPresentation {
    Subgroup sub;
    MetacyclicPresentation pres;
    GroupElement gen_a, gen_b;  // elements of the ambient group realizing the presentation
};

// A metacyclic group unrolled to its element list: index = j*m + i for b^j a^i.
// Everything here is the brute-force side of the library; the closed forms are
// checked against it.
class DenseGroup {
public:
    explicit DenseGroup(MetacyclicPresentation pres, long cap = 1 << 16);

    const MetacyclicPresentation& presentation() const { return pres_; }
    int size() const { return (int)(m_ * n_); }
    int idx_a() const { return m_ > 1 ? 1 : 0; }  // element (0,1)
    int idx_b() const { return n_ > 1 ? (int)m_ : 0; }

    int mul(int g, int h) const {
        long j1 = g / m_, i1 = g % m_, j2 = h / m_, i2 = h % m_;
        long j = j1 + j2, i = (i1 * rpow_[j2] + i2) % m_;
        if (j >= n_) { j -= n_; i = (i + s_) % m_; }
        return (int)(j * m_ + i);
    }
    int inv(int g) const { return inv_[g]; }
    int conj(int g, int h) const { return mul(mul(inv_[h], g), h); }  // h^-1 g h
    int pow(int g, long k) const;
    int order_of(int g) const { return order_[g]; }

    GroupElement element(int g) const { return GroupElement{Int(g / m_), Int(g % m_)}; }
    int index(const GroupElement& e) const {
        return (int)(e.j.get_si() * m_ + e.i.get_si());
    }

    std::map<long, long> order_histogram() const;

    // ---- subgroup machinery ----
    Subgroup closure(std::vector<int> gens) const;
    Subgroup trivial_subgroup() const { return closure({}); }
    Subgroup whole_group() const { return closure({idx_a(), idx_b()}); }
    ElementSet conjugate_set(const ElementSet& s, int g) const;
    bool normalizes(int g, const Subgroup& s) const;
    bool is_normal_in(const Subgroup& s, const Subgroup& ambient) const;
    bool is_normal(const Subgroup& s) const;
    Subgroup normalizer(const Subgroup& s) const;
    Subgroup core(const Subgroup& s) const;  // largest normal subgroup of G inside s
    Subgroup centralizer(int g) const;
    Subgroup center() const;
    bool is_abelian_subgroup(const Subgroup& s) const;
    bool is_cyclic_quotient(const Subgroup& h, const Subgroup& k) const;  // H/K cyclic, K normal in H

    // every subgroup of a metacyclic group is <a^d, b^e a^c>; enumerated and deduplicated,
    // sorted by (order, members)
    std::vector<Subgroup> all_subgroups() const;
    std::vector<Subgroup> cyclic_subgroups() const;  // one per distinct <g>

    Subgroup normal_closure(const Subgroup& ambient, std::vector<int> seed) const;
    // subgroups D with N <= D normal in ambient, D/N minimal normal in ambient/N
    std::vector<Subgroup> minimal_normal_over(const Subgroup& ambient, const Subgroup& n) const;

    Subgroup derived_subgroup(const Subgroup& s) const;
    Subgroup power_subgroup(const Subgroup& s, long k) const;  // <x^k : x in s>

    // conjugation orbits of elements, sorted by least member
    const std::vector<std::vector<int>>& conjugacy_classes() const;
    int class_count() const { return (int)conjugacy_classes().size(); }
    // orbit partition of the given subgroups under conjugation; returns orbits of
    // indices into the input list
    std::vector<std::vector<int>> subgroup_orbits(const std::vector<Subgroup>& subs) const;
    std::vector<std::vector<int>> cyclic_subgroup_orbit_classes() const;
    long cyclic_subgroup_class_count() const;

    // ---- pi machinery ----
    int pi_part_of(int g, const std::vector<Int>& pi) const;
    // both computations (brute force and the derived-quotient characterization);
    // disagreement is an internal error
    PiSignature pi_signature() const;
    bool has_normal_hall_p_prime_subgroup(const Int& p) const;
    SubgroupPresentation sylow_subgroup(const Int& p) const;
    SubgroupPresentation hall_subgroup(const std::vector<Int>& pi) const;
    SubgroupPresentation represent_subgroup(const Subgroup& s) const;

private:
    MetacyclicPresentation pres_;
    long m_, n_, s_, r_;
    std::vector<long> rpow_;
    std::vector<int> inv_;
    std::vector<int> order_;
    mutable std::vector<std::vector<int>> classes_;  // lazily computed
    mutable std::vector<int> class_of_;
};

// True iff some generator-image pair (a -> g, b -> h) respects all three relations
// of G's presentation and generates H.  Orders must agree.
bool brute_force_isomorphic(const DenseGroup& G, const DenseGroup& H);

}  // namespace metaq
