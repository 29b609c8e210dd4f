#pragma once

#include "metaq/presentation.hpp"

namespace metaq {

// The quantities attached to the cyclic subgroup <b^{p^d} a^i> of an eps=+1 group.
struct ConjugacyQuantities {
    Int l;  // p^sigma + i p^{nu-d}, with a twist for p = 2, i odd, mu = nu + rho
    Int k;  // min(mu, v_p(l))
    Int h;  // min(k, rho + d, rho + v_p(i))
};

// requires eps = +1, mu >= 1, 0 <= d < nu, 1 <= i <= p^mu
ConjugacyQuantities conjugacy_quantities(const CanonicalPParams& t, const Int& d, const Int& i);

// <b^{p^d} a^i> and <b^{p^d} a^j> are conjugate iff i = j mod p^{h_i}
bool cyclic_conjugate_predicate(const CanonicalPParams& t, const Int& d, const Int& i, const Int& j);

struct CountingTerms {
    Rat a_sigma;
    Rat a;
    Rat b_sigma;  // 2 p^{mu-rho} (p-1) a_sigma, denominators cleared
};

// requires eps = +1 (valid tuple); exact rational evaluation
CountingTerms counting_terms(const CanonicalPParams& t);

// number of conjugacy classes of cyclic subgroups, N = A_sigma + A (eps = +1)
Int count_cyclic_classes_eps1(const CanonicalPParams& t);

// number of conjugacy classes of elements (eps = -1):
// 3*2^{nu-1} + 2^{rho-1} (3*2^{nu-1} - 2^{nu+rho-mu})
Int count_conjugacy_classes_epsm1(const CanonicalPParams& t);

// the independent route: sum_j C_{R, d_j} with R = -1 + 2^rho and
// d_j = gcd(2^mu, R^j - 1), through the closed cyclotomic-class count
Int count_conjugacy_classes_epsm1_cyclotomic(const CanonicalPParams& t);

// -2 p^sigma + sigma p^{mu-1} (p-1) (2 + (p-1)(1 + 2 nu - sigma)); integral for
// every eps = +1 tuple, strictly monotone in sigma over {mu-1, mu}
Int b_sigma(const CanonicalPParams& t);

}  // namespace metaq
