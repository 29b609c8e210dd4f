#pragma once

#include <gmpxx.h>

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace metaq {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when an operation's precondition is violated.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when an internal consistency assertion fails (a bug, never user input).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require(bool cond, const char* what) {
    if (!cond) throw domain_error(what);
}
inline void check(bool cond, const char* what) {
    if (!cond) throw internal_error(what);
}

// p-adic valuation value: a non-negative integer, or infinity (exactly for input 0).
class Valuation {
public:
    static Valuation infinity() { return Valuation(); }
    Valuation(Int v) : value_(std::move(v)) {}          // NOLINT: implicit by design
    Valuation(long v) : value_(Int(v)) {}               // NOLINT

    bool is_infinite() const { return !value_.has_value(); }
    const Int& finite() const {
        if (!value_) throw internal_error("Valuation: finite() on infinity");
        return *value_;
    }

    bool operator==(const Valuation& o) const { return value_ == o.value_; }
    bool operator==(long v) const { return value_ && *value_ == v; }
    // infinity compares greater than every finite value
    bool operator<(const Valuation& o) const {
        if (is_infinite()) return false;
        if (o.is_infinite()) return true;
        return *value_ < *o.value_;
    }
    bool operator>=(long v) const { return is_infinite() || *value_ >= v; }

private:
    Valuation() = default;
    std::optional<Int> value_;
};

bool is_prime(const Int& n);  // trial division; desk scale only

Int gcd(Int a, Int b);
Int lcm(const Int& a, const Int& b);
Int mod(const Int& a, const Int& m);           // representative in [0, m)
Int powmod(Int base, Int exp, const Int& m);   // exp >= 0
Int pow_int(const Int& base, const Int& exp);  // exp >= 0
Rat pow_rat(const Int& base, const Int& exp);  // exp may be negative; base != 0

std::vector<Int> divisors(const Int& n);                 // sorted ascending
std::vector<Int> prime_divisors(const Int& n);           // sorted ascending
Int euler_phi(const Int& n);

// v_p(n); requires p prime. v_p(0) = infinity.
Valuation vp(const Int& p, const Int& n);

// greatest power of p dividing n (n != 0)
Int n_part(const Int& p, const Int& n);
// product of n_p over p in pi (n != 0)
Int n_part(const std::vector<Int>& pi, const Int& n);
// complement part: n / n_pi
Int n_coprime_part(const std::vector<Int>& pi, const Int& n);

// o_n(m): least k >= 1 with m^k = 1 mod n; requires gcd(m, n) = 1.
Int multiplicative_order(const Int& m, const Int& n);

// S(x, n) = sum_{i=0}^{n-1} x^i; equals n when x = 1.
Int ese(const Int& x, const Int& n);
// S(x, n) mod m, without forming the full sum.
Int ese_mod(const Int& x, const Int& n, const Int& m);

// The closed forms of the geometric-sum lemma.  All require v_p(R-1) >= 1.
Valuation lemma21_vp_power(const Int& R, const Int& m, const Int& p);   // v_p(R^m - 1), m >= 1
Int lemma21_order(const Int& R, const Int& p, const Int& m);            // o_{p^m}(R), m >= 0
// {R^x mod p^m : x >= 0} = {1 + y p^a : 0 <= y < p^{m-a}}, for a = v_p(R-1) <= m (a >= 2 if p = 2)
std::vector<Int> lemma21_power_images(const Int& R, const Int& p, const Int& a, const Int& m);
// S(R, n) mod p^m for n = k p^{m-a} mod p^m, same hypotheses as above
Int lemma21_ese_congruence(const Int& R, const Int& p, const Int& a, const Int& m,
                           const Int& n, const Int& k);

// Orbit partition of {0..n-1} under multiplication by R, gcd(R, n) = 1.
// Classes are sorted by least representative; members of a class share gcd with n.
struct CyclotomicClassPartition {
    Int modulus;
    std::vector<std::vector<Int>> classes;  // each sorted, classes sorted by first element
    size_t count() const { return classes.size(); }
};

CyclotomicClassPartition cyclotomic_classes(const Int& R, const Int& n);

// C_{R,n} = sum_{d|n} phi(d) / o_d(R)  (class-count identity)
Int cyclotomic_class_count(const Int& R, const Int& n);

// Closed form of C_{R,p^m} for R = 1 mod p.
Int closed_cyclotomic_count(const Int& R, const Int& p, const Int& m);

// sum_{d=0}^{n} d 2^d = (n-1) 2^{n+1} + 2
Int sum_d_2d(const Int& n);

}  // namespace metaq
