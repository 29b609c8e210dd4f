#include "metaq/group_algebra.hpp"

namespace metaq {

std::vector<int> AlgebraElement::support() const {
    std::vector<int> out;
    for (int g = 0; g < group_size(); ++g)
        if (coeff_[g] != 0) out.push_back(g);
    return out;
}

bool AlgebraElement::is_zero() const {
    for (const Rat& c : coeff_)
        if (c != 0) return false;
    return true;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    check(group_size() == o.group_size(), "algebra: size mismatch");
    for (int g = 0; g < group_size(); ++g) coeff_[g] += o.coeff_[g];
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    check(group_size() == o.group_size(), "algebra: size mismatch");
    for (int g = 0; g < group_size(); ++g) coeff_[g] -= o.coeff_[g];
    return *this;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

AlgebraElement multiply(const DenseGroup& G, const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out(G.size());
    std::vector<int> sa = a.support(), sb = b.support();
    for (int g : sa)
        for (int h : sb) out[G.mul(g, h)] += a[g] * b[h];
    return out;
}

AlgebraElement algebra_one(const DenseGroup& G) {
    AlgebraElement one(G.size());
    one[0] = 1;
    return one;
}

AlgebraElement conjugate(const DenseGroup& G, const AlgebraElement& x, int g) {
    AlgebraElement out(G.size());
    for (int e = 0; e < G.size(); ++e)
        if (x[e] != 0) out[G.conj(e, g)] = x[e];
    return out;
}

AlgebraElement left_translate(const DenseGroup& G, int g, const AlgebraElement& x) {
    AlgebraElement out(G.size());
    for (int e = 0; e < G.size(); ++e)
        if (x[e] != 0) out[G.mul(g, e)] = x[e];
    return out;
}

bool is_central(const DenseGroup& G, const AlgebraElement& x) {
    return conjugate(G, x, G.idx_a()) == x && conjugate(G, x, G.idx_b()) == x;
}

bool is_idempotent(const DenseGroup& G, const AlgebraElement& x) {
    return multiply(G, x, x) == x;
}

AlgebraElement hat(const DenseGroup& G, const Subgroup& H) {
    AlgebraElement out(G.size());
    Rat c(1, (unsigned long)H.order());
    c.canonicalize();
    for (int g : H.members) out[g] = c;
    return out;
}

AlgebraElement epsilon_idempotent_in(const DenseGroup& G, const Subgroup& ambient,
                                     const Subgroup& N) {
    require(ambient.set.contains(N.set), "epsilon: N not inside the ambient group");
    require(G.is_normal_in(N, ambient), "epsilon: N not normal in the ambient group");
    if (N.order() == ambient.order()) return hat(G, N);
    AlgebraElement hn = hat(G, N);
    AlgebraElement out = algebra_one(G);
    for (const Subgroup& d : G.minimal_normal_over(ambient, N))
        out = multiply(G, out, hn - hat(G, d));
    return out;
}

AlgebraElement epsilon_idempotent(const DenseGroup& G, const Subgroup& N) {
    return epsilon_idempotent_in(G, G.whole_group(), N);
}

EIdempotent e_idempotent(const DenseGroup& G, const Subgroup& H, const Subgroup& K,
                         bool verify_ss3) {
    AlgebraElement eps = epsilon_idempotent_in(G, H, K);
    EIdempotent out;
    out.conjugates.push_back(eps);
    // orbit under conjugation; generators suffice
    int gens[2] = {G.idx_a(), G.idx_b()};
    for (size_t head = 0; head < out.conjugates.size(); ++head) {
        AlgebraElement cur = out.conjugates[head];  // copy: the vector may reallocate
        for (int g : gens) {
            AlgebraElement c = conjugate(G, cur, g);
            bool fresh = true;
            for (const AlgebraElement& seen : out.conjugates)
                if (seen == c) { fresh = false; break; }
            if (fresh) out.conjugates.push_back(std::move(c));
        }
    }
    if (verify_ss3) {
        for (size_t i = 1; i < out.conjugates.size(); ++i) {
            if (!multiply(G, out.conjugates[i], out.conjugates[0]).is_zero()) {
                // find a conjugator outside the centralizer for the report
                for (int g = 0; g < G.size(); ++g)
                    if (conjugate(G, out.conjugates[0], g) == out.conjugates[i])
                        throw internal_error(
                            ("SS3 failed: epsilon^g epsilon != 0 for g = " +
                             G.presentation().str() + " element #" + std::to_string(g))
                                .c_str());
                throw internal_error("SS3 failed");
            }
        }
    }
    AlgebraElement e(G.size());
    for (const AlgebraElement& c : out.conjugates) e += c;
    out.e = std::move(e);
    return out;
}

}  // namespace metaq
