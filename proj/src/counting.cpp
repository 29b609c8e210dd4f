#include "metaq/counting.hpp"

namespace metaq {

namespace {

Int min3(const Int& a, const Int& b, const Int& c) { return std::min(a, std::min(b, c)); }

void require_eps1(const CanonicalPParams& t) {
    require(t.eps == Epsilon::Plus, "requires an eps = +1 tuple");
    require(is_prime(t.p), "p must be prime");
}

void require_epsm1(const CanonicalPParams& t) {
    // the consistency-level constraints of condition (C); sigma = rho + nu is allowed
    // here because the class count does not depend on sigma
    require(t.eps == Epsilon::Minus && t.p == 2, "requires an eps = -1 tuple (p = 2)");
    require(t.rho >= 2 && t.rho <= t.mu && t.nu >= 1, "requires 2 <= rho <= mu and nu >= 1");
    require(t.sigma >= t.mu - 1 && t.sigma <= t.mu, "requires mu - 1 <= sigma <= mu");
    require(t.mu <= t.rho + t.nu, "requires mu <= rho + nu");
}

}  // namespace

ConjugacyQuantities conjugacy_quantities(const CanonicalPParams& t, const Int& d, const Int& i) {
    require_eps1(t);
    require(t.mu >= 1, "conjugacy_quantities: requires mu >= 1");
    require(d >= 0 && d < t.nu, "conjugacy_quantities: requires 0 <= d < nu");
    require(i >= 1 && i <= pow_int(t.p, t.mu), "conjugacy_quantities: requires 1 <= i <= p^mu");
    ConjugacyQuantities q;
    if (t.p == 2 && mod(i, 2) == 1 && t.mu == t.nu + t.rho)
        q.l = pow_int(t.p, t.sigma) + i * (pow_int(t.p, t.nu - d) + pow_int(t.p, t.mu - 1));
    else
        q.l = pow_int(t.p, t.sigma) + i * pow_int(t.p, t.nu - d);
    q.k = std::min(t.mu, vp(t.p, q.l).finite());
    q.h = min3(q.k, t.rho + d, t.rho + vp(t.p, i).finite());
    return q;
}

bool cyclic_conjugate_predicate(const CanonicalPParams& t, const Int& d, const Int& i,
                                const Int& j) {
    ConjugacyQuantities q = conjugacy_quantities(t, d, i);
    conjugacy_quantities(t, d, j);  // validates j's range
    return mod(i - j, pow_int(t.p, q.h)) == 0;
}

CountingTerms counting_terms(const CanonicalPParams& t) {
    require_eps1(t);
    const Int &p = t.p, &mu = t.mu, &nu = t.nu, &sigma = t.sigma, &rho = t.rho;
    Rat pr1 = pow_rat(p, rho - 1);
    Rat half(1, 2);
    CountingTerms out;
    out.a_sigma = pr1 * Rat(sigma) * (1 + Rat(p - 1) * Rat(1 + 2 * nu - sigma) * half) -
                  pow_rat(p, rho + sigma - mu) / Rat(p - 1);
    out.a = (3 * pr1 - 2) / Rat(p - 1) +
            pr1 * half *
                Rat(6 - rho + 2 * nu * rho - rho * rho +
                    p * (rho * rho + 2 * nu - 3 * rho - 2 * nu * rho + 2));
    out.b_sigma = 2 * pow_rat(p, mu - rho) * Rat(p - 1) * out.a_sigma;
    return out;
}

Int count_cyclic_classes_eps1(const CanonicalPParams& t) {
    require(validate_canonical(t), "count_cyclic_classes_eps1: invalid tuple");
    CountingTerms terms = counting_terms(t);
    Rat n = terms.a_sigma + terms.a;
    check(n.get_den() == 1, "count_cyclic_classes_eps1: non-integral A_sigma + A");
    check(n > 0, "count_cyclic_classes_eps1: non-positive count");
    return n.get_num();
}

Int count_conjugacy_classes_epsm1(const CanonicalPParams& t) {
    require_epsm1(t);
    Int two(2);
    Int n = 3 * pow_int(two, t.nu - 1) +
            pow_int(two, t.rho - 1) *
                (3 * pow_int(two, t.nu - 1) - pow_int(two, t.nu + t.rho - t.mu));
    check(n > 0, "count_conjugacy_classes_epsm1: non-positive count");
    return n;
}

Int count_conjugacy_classes_epsm1_cyclotomic(const CanonicalPParams& t) {
    require_epsm1(t);
    Int R = pow_int(Int(2), t.rho) - 1;  // -1 + 2^rho, as a positive representative
    Int two_mu = pow_int(Int(2), t.mu);
    Int total = 0;
    for (Int j = 1; j <= pow_int(Int(2), t.nu); ++j) {
        Int dj = gcd(two_mu, powmod(R, j, two_mu) - 1);  // gcd(x, 0) = x covers R^j = 1
        total += closed_cyclotomic_count(R, 2, vp(Int(2), dj).finite());
    }
    return total;
}

Int b_sigma(const CanonicalPParams& t) {
    require_eps1(t);
    const Int &p = t.p, &mu = t.mu, &nu = t.nu, &sigma = t.sigma;
    Rat b = -2 * pow_rat(p, sigma) +
            Rat(sigma) * pow_rat(p, mu - 1) * Rat(p - 1) *
                Rat(2 + (p - 1) * (1 + 2 * nu - sigma));
    check(b.get_den() == 1, "b_sigma: non-integral value");
    return b.get_num();
}

}  // namespace metaq
