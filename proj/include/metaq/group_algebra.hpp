#pragma once

#include "metaq/dense_group.hpp"

namespace metaq {

// Element of the rational group algebra QG, as a dense coefficient vector
// indexed by group element.
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(int group_size) : coeff_(group_size) {}

    int group_size() const { return (int)coeff_.size(); }
    const Rat& operator[](int g) const { return coeff_[g]; }
    Rat& operator[](int g) { return coeff_[g]; }
    std::vector<int> support() const;
    bool is_zero() const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    bool operator==(const AlgebraElement&) const = default;

private:
    std::vector<Rat> coeff_;
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
AlgebraElement multiply(const DenseGroup& G, const AlgebraElement& a, const AlgebraElement& b);

AlgebraElement algebra_one(const DenseGroup& G);
// g^-1 x g applied to every basis element
AlgebraElement conjugate(const DenseGroup& G, const AlgebraElement& x, int g);
// left translation g * x
AlgebraElement left_translate(const DenseGroup& G, int g, const AlgebraElement& x);
bool is_central(const DenseGroup& G, const AlgebraElement& x);
bool is_idempotent(const DenseGroup& G, const AlgebraElement& x);

// |H|^-1 sum of the elements of H; idempotent, central iff H is normal
AlgebraElement hat(const DenseGroup& G, const Subgroup& H);

// epsilon(ambient, N) inside QG: hat(N) for N = ambient, otherwise the product of
// (hat(N) - hat(D)) over the minimal normal subgroups D/N of ambient/N
AlgebraElement epsilon_idempotent_in(const DenseGroup& G, const Subgroup& ambient,
                                     const Subgroup& N);
AlgebraElement epsilon_idempotent(const DenseGroup& G, const Subgroup& N);

struct EIdempotent {
    AlgebraElement e;
    std::vector<AlgebraElement> conjugates;  // the orbit of epsilon(H,K), epsilon first
    int orbit_size() const { return (int)conjugates.size(); }
};

// sum of the distinct conjugates of epsilon(H,K); with verify_ss3, checks that
// distinct conjugates multiply to zero and reports the violating conjugator
EIdempotent e_idempotent(const DenseGroup& G, const Subgroup& H, const Subgroup& K,
                         bool verify_ss3 = true);

}  // namespace metaq
