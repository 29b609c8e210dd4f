#include "metaq/numtheory.hpp"

#include <algorithm>
#include <map>

namespace metaq {

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Int gcd(Int a, Int b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Int mod(const Int& a, const Int& m) {
    require(m >= 1, "mod: modulus must be positive");
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int powmod(Int base, Int exp, const Int& m) {
    require(exp >= 0, "powmod: negative exponent");
    require(m >= 1, "powmod: modulus must be positive");
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int pow_int(const Int& base, const Int& exp) {
    require(exp >= 0, "pow_int: negative exponent");
    require(exp.fits_ulong_p(), "pow_int: exponent too large");
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
    return r;
}

Rat pow_rat(const Int& base, const Int& exp) {
    if (exp >= 0) return Rat(pow_int(base, exp));
    require(base != 0, "pow_rat: zero base with negative exponent");
    Rat r(Int(1), pow_int(base, -exp));
    r.canonicalize();
    return r;
}

namespace {

std::map<Int, unsigned> factorize(Int n) {
    require(n >= 1, "factorize: argument must be positive");
    std::map<Int, unsigned> f;
    for (Int d = 2; d * d <= n; d += (d == 2 ? 1 : 2))
        while (n % d == 0) { ++f[d]; n /= d; }
    if (n > 1) ++f[n];
    return f;
}

}  // namespace

std::vector<Int> divisors(const Int& n) {
    auto f = factorize(n);
    std::vector<Int> ds{1};
    for (const auto& [p, e] : f) {
        size_t sz = ds.size();
        Int pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::vector<Int> prime_divisors(const Int& n) {
    std::vector<Int> ps;
    for (const auto& [p, e] : factorize(n)) ps.push_back(p);
    return ps;
}

Int euler_phi(const Int& n) {
    Int phi = 1;
    for (const auto& [p, e] : factorize(n)) {
        Int pk = pow_int(p, Int(e - 1));
        phi *= pk * (p - 1);
    }
    return phi;
}

Valuation vp(const Int& p, const Int& n) {
    require(is_prime(p), "vp: p must be prime");
    if (n == 0) return Valuation::infinity();
    Int m = n < 0 ? Int(-n) : n, v = 0;
    while (m % p == 0) { m /= p; ++v; }
    return Valuation(v);
}

Int n_part(const Int& p, const Int& n) {
    require(n != 0, "n_part: n must be nonzero");
    return pow_int(p, vp(p, n).finite());
}

Int n_part(const std::vector<Int>& pi, const Int& n) {
    Int r = 1;
    for (const Int& p : pi) r *= n_part(p, n);
    return r;
}

Int n_coprime_part(const std::vector<Int>& pi, const Int& n) {
    return n / n_part(pi, n);
}

Int multiplicative_order(const Int& m, const Int& n) {
    require(n >= 1, "multiplicative_order: modulus must be positive");
    require(gcd(mod(m, n), n) == 1, "multiplicative_order: gcd(m, n) != 1");
    if (n == 1) return 1;
    Int o = euler_phi(n);
    for (const Int& q : prime_divisors(o))
        while (o % q == 0 && powmod(m, o / q, n) == 1) o /= q;
    return o;
}

Int ese(const Int& x, const Int& n) {
    require(n >= 0, "ese: n must be non-negative");
    if (x == 1) return n;
    return (pow_int(x, n) - 1) / (x - 1);
}

namespace {

// returns (S(x, n) mod m, x^n mod m)
std::pair<Int, Int> ese_mod_rec(const Int& x, const Int& n, const Int& m) {
    if (n == 0) return {0, mod(1, m)};
    if (n % 2 == 0) {
        auto [s, pw] = ese_mod_rec(x, n / 2, m);
        return {mod(s * (1 + pw), m), mod(pw * pw, m)};
    }
    auto [s, pw] = ese_mod_rec(x, n - 1, m);
    return {mod(s + pw, m), mod(pw * x, m)};
}

}  // namespace

Int ese_mod(const Int& x, const Int& n, const Int& m) {
    require(n >= 0, "ese_mod: n must be non-negative");
    require(m >= 1, "ese_mod: modulus must be positive");
    return ese_mod_rec(mod(x, m), n, m).first;
}

namespace {

Valuation plus(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
    return Valuation(a.finite() + b.finite());
}

void require_lemma21(const Int& R, const Int& p) {
    require(is_prime(p), "lemma21: p must be prime");
    require(vp(p, R - 1) >= 1, "lemma21: requires v_p(R-1) >= 1");
}

}  // namespace

Valuation lemma21_vp_power(const Int& R, const Int& m, const Int& p) {
    require_lemma21(R, p);
    require(m >= 1, "lemma21_vp_power: m must be positive");
    Valuation a = vp(p, R - 1);
    if (p != 2 || a >= 2) return plus(a, vp(p, m));
    if (m % 2 == 0) return plus(vp(Int(2), R + 1), vp(Int(2), m));
    return Valuation(1);
}

Int lemma21_order(const Int& R, const Int& p, const Int& m) {
    require_lemma21(R, p);
    require(m >= 0, "lemma21_order: m must be non-negative");
    Valuation a = vp(p, R - 1);
    if (p != 2 || a >= 2) {
        if (a.is_infinite() || a.finite() >= m) return 1;  // exponent max(0, m-a) = 0
        return pow_int(p, m - a.finite());
    }
    if (m <= 1) return 1;
    Valuation b = vp(Int(2), R + 1);
    Int e = (b.is_infinite() || b.finite() >= m) ? Int(1) : Int(m - b.finite());
    if (e < 1) e = 1;
    return pow_int(Int(2), e);
}

std::vector<Int> lemma21_power_images(const Int& R, const Int& p, const Int& a, const Int& m) {
    require_lemma21(R, p);
    require(vp(p, R - 1) == Valuation(a), "lemma21_power_images: a != v_p(R-1)");
    require(a <= m, "lemma21_power_images: requires a <= m");
    require(p != 2 || a >= 2, "lemma21_power_images: requires a >= 2 for p = 2");
    Int pm = pow_int(p, m), pa = pow_int(p, a), count = pow_int(p, m - a);
    std::vector<Int> out;
    out.reserve(count.fits_ulong_p() ? count.get_ui() : 0);
    for (Int y = 0; y < count; ++y) out.push_back(mod(1 + y * pa, pm));
    std::sort(out.begin(), out.end());
    return out;
}

Int lemma21_ese_congruence(const Int& R, const Int& p, const Int& a, const Int& m,
                           const Int& n, const Int& k) {
    require_lemma21(R, p);
    require(vp(p, R - 1) == Valuation(a), "lemma21_ese_congruence: a != v_p(R-1)");
    require(a <= m, "lemma21_ese_congruence: requires a <= m");
    require(p != 2 || a >= 2, "lemma21_ese_congruence: requires a >= 2 for p = 2");
    require(n >= 0, "lemma21_ese_congruence: n must be non-negative");
    Int pm = pow_int(p, m);
    require(mod(n - k * pow_int(p, m - a), pm) == 0,
            "lemma21_ese_congruence: requires n = k p^{m-a} mod p^m");
    if (p == 2 && m > a) return mod(n + k * pow_int(Int(2), m - 1), pm);
    return mod(n, pm);
}

CyclotomicClassPartition cyclotomic_classes(const Int& R, const Int& n) {
    require(n >= 1, "cyclotomic_classes: modulus must be positive");
    require(gcd(mod(R, n), n) == 1, "cyclotomic_classes: gcd(R, n) != 1");
    require(n.fits_ulong_p(), "cyclotomic_classes: modulus too large");
    unsigned long nn = n.get_ui(), r = mod(R, n).get_ui();
    CyclotomicClassPartition part;
    part.modulus = n;
    std::vector<bool> seen(nn, false);
    for (unsigned long i = 0; i < nn; ++i) {
        if (seen[i]) continue;
        std::vector<Int> cls;
        unsigned long j = i;
        do {
            seen[j] = true;
            cls.emplace_back(j);
            j = (unsigned long)(((unsigned long long)j * r) % nn);
        } while (j != i);
        std::sort(cls.begin(), cls.end());
        part.classes.push_back(std::move(cls));
    }
    return part;
}

Int cyclotomic_class_count(const Int& R, const Int& n) {
    require(n >= 1, "cyclotomic_class_count: modulus must be positive");
    require(gcd(mod(R, n), n) == 1, "cyclotomic_class_count: gcd(R, n) != 1");
    Rat total = 0;
    for (const Int& d : divisors(n))
        total += Rat(euler_phi(d)) / Rat(multiplicative_order(R, d));
    check(total.get_den() == 1, "cyclotomic_class_count: non-integral sum");
    return total.get_num();
}

Int closed_cyclotomic_count(const Int& R, const Int& p, const Int& m) {
    require(is_prime(p), "closed_cyclotomic_count: p must be prime");
    require(m >= 0, "closed_cyclotomic_count: m must be non-negative");
    require(mod(R - 1, p) == 0, "closed_cyclotomic_count: requires R = 1 mod p");
    Valuation a = vp(p, R - 1);
    if (!(a < Valuation(m))) return pow_int(p, m);  // m <= v_p(R-1)
    if (p == 2 && m >= 2) {
        Valuation b = vp(Int(2), R + 1);
        if (Valuation(m) < b) return 1 + pow_int(Int(2), m - 1);
        if (b >= 2)  // 2 <= v_2(R+1) <= m
            return 1 + pow_int(Int(2), b.finite() - 1) * (1 + m - b.finite());
    }
    const Int& av = a.finite();
    return pow_int(p, av - 1) * (p + (p - 1) * (m - av));
}

Int sum_d_2d(const Int& n) {
    require(n >= 0, "sum_d_2d: n must be non-negative");
    return (n - 1) * pow_int(Int(2), n + 1) + 2;
}

}  // namespace metaq
