#include "doctest.h"
#include "metaq/numtheory.hpp"

using namespace metaq;

namespace {

// independent oracles, kept free of the closed forms they check
Int naive_order(const Int& m, const Int& n) {
    Int x = mod(m, n), acc = x, k = 1;
    while (acc != mod(1, n)) { acc = mod(acc * x, n); ++k; }
    return k;
}

Int naive_ese(const Int& x, long n) {
    Int total = 0, pw = 1;
    for (long i = 0; i < n; ++i) { total += pw; pw *= x; }
    return total;
}

std::vector<Int> naive_power_residues(const Int& R, const Int& pm) {
    std::set<Int> seen;
    Int x = mod(1, pm);
    while (seen.insert(x).second) x = mod(x * R, pm);
    return std::vector<Int>(seen.begin(), seen.end());
}

long naive_orbit_count(long R, long n) {
    std::vector<bool> seen(n, false);
    long count = 0;
    for (long i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++count;
        long j = i;
        while (!seen[j]) { seen[j] = true; j = j * R % n; }
    }
    return count;
}

}  // namespace

TEST_CASE("p-adic valuation") {
    CHECK(vp(2, 12) == 2);
    CHECK(vp(5, 7) == 0);
    CHECK(vp(3, 0).is_infinite());
    CHECK(vp(2, -24) == 3);
    CHECK_THROWS_AS(vp(4, 12), domain_error);
    CHECK(n_part(2, 24) == 8);
    CHECK(n_part({Int(2), Int(3)}, 360) == 72);
    CHECK(n_coprime_part({Int(2)}, 360) == 45);
}

TEST_CASE("multiplicative order") {
    CHECK(multiplicative_order(3, 7) == naive_order(3, 7));
    CHECK(multiplicative_order(3, 7) == 6);
    CHECK(multiplicative_order(3, 8) == 2);
    CHECK(multiplicative_order(1, 35) == 1);
    CHECK(multiplicative_order(5, 1) == 1);
    CHECK_THROWS_AS(multiplicative_order(6, 8), domain_error);
    for (long n = 2; n <= 60; ++n)
        for (long x = 1; x < n; ++x)
            if (gcd(x, n) == 1) CHECK(multiplicative_order(x, n) == naive_order(x, n));
}

TEST_CASE("geometric sum S(x,n)") {
    CHECK(ese(1, 5) == 5);
    CHECK(ese(2, 4) == 15);
    CHECK(ese(-1, 2) == 0);
    CHECK(ese(3, 0) == 0);
    for (long x = -6; x <= 6; ++x)
        for (long n = 0; n <= 12; ++n) {
            CHECK(ese(x, n) == naive_ese(x, n));
            CHECK(ese_mod(x, n, 97) == mod(naive_ese(x, n), 97));
            CHECK(ese_mod(x, n, 64) == mod(naive_ese(x, n), 64));
        }
    // ese grows exponentially; exact arithmetic must keep up
    CHECK(ese(2, 200) == pow_int(2, 200) - 1);
}

TEST_CASE("lemma 2.1 (1): v_p(R^m - 1)") {
    CHECK(lemma21_vp_power(4, 3, 3) == 2);   // 63 = 9*7
    CHECK(lemma21_vp_power(3, 2, 2) == 3);   // 8
    CHECK(lemma21_vp_power(3, 1, 2) == 1);   // otherwise branch
    CHECK_THROWS_AS(lemma21_vp_power(5, 2, 3), domain_error);  // v_3(4) = 0
    for (long p : {2L, 3L, 5L, 7L})
        for (long R = -100; R <= 100; ++R) {
            if (!(vp(p, R - 1) >= 1)) continue;
            for (long m = 1; m <= 8; ++m)
                CHECK(lemma21_vp_power(R, m, p) == vp(p, pow_int(R, m) - 1));
        }
}

TEST_CASE("lemma 2.1 (2): order modulo p^m") {
    CHECK(lemma21_order(4, 3, 2) == 3);
    CHECK(lemma21_order(3, 2, 1) == 1);
    CHECK(lemma21_order(3, 2, 3) == 2);
    for (long p : {2L, 3L, 5L, 7L})
        for (long R = -100; R <= 100; ++R) {
            if (!(vp(p, R - 1) >= 1)) continue;
            for (long m = 0; m <= 6; ++m) {
                Int pm = pow_int(p, m);
                CHECK(lemma21_order(R, p, m) == multiplicative_order(R, pm));
            }
        }
}

TEST_CASE("lemma 2.1 (3a): the set of power residues") {
    CHECK(lemma21_power_images(4, 3, 1, 2) == std::vector<Int>{1, 4, 7});
    CHECK(lemma21_power_images(5, 2, 2, 2) == std::vector<Int>{1});
    CHECK(lemma21_power_images(5, 2, 2, 3) == std::vector<Int>{1, 5});
    CHECK_THROWS_AS(lemma21_power_images(3, 2, 1, 3), domain_error);  // p=2 needs a >= 2
    for (long p : {2L, 3L, 5L, 7L})
        for (long R = -100; R <= 100; ++R) {
            Valuation a = vp(p, R - 1);
            if (!(a >= 1) || a.is_infinite()) continue;
            if (p == 2 && !(a >= 2)) continue;
            long av = a.finite().get_si();
            for (long m = av; m <= 6; ++m)
                CHECK(lemma21_power_images(R, p, av, m) ==
                      naive_power_residues(R, pow_int(p, m)));
        }
}

TEST_CASE("lemma 2.1 (3b): S(R,n) modulo p^m") {
    CHECK(lemma21_ese_congruence(4, 3, 1, 2, 3, 1) == 3);   // S(4,3) = 21
    CHECK(lemma21_ese_congruence(5, 2, 2, 3, 2, 1) == 6);   // S(5,2) = 6
    CHECK(lemma21_ese_congruence(5, 2, 2, 3, 0, 0) == 0);
    for (long p : {2L, 3L, 5L, 7L})
        for (long R = -100; R <= 100; ++R) {
            Valuation a = vp(p, R - 1);
            if (!(a >= 1) || a.is_infinite()) continue;
            if (p == 2 && !(a >= 2)) continue;
            long av = a.finite().get_si();
            for (long m = av; m <= 5; ++m) {
                Int pm = pow_int(p, m), pma = pow_int(p, m - av);
                for (long k = 0; k < pow_int(p, av); ++k) {
                    Int n = k * pma;
                    CHECK(lemma21_ese_congruence(R, p, av, m, n, k) == ese_mod(R, n, pm));
                    CHECK(lemma21_ese_congruence(R, p, av, m, n + pm, k) ==
                          ese_mod(R, n + pm, pm));
                }
            }
        }
}

TEST_CASE("cyclotomic classes") {
    auto part = cyclotomic_classes(4, 9);
    CHECK(part.count() == 5);
    CHECK(part.classes == std::vector<std::vector<Int>>{
                              {0}, {1, 4, 7}, {2, 5, 8}, {3}, {6}});
    CHECK(cyclotomic_classes(7, 4).classes ==
          std::vector<std::vector<Int>>{{0}, {1, 3}, {2}});
    CHECK(cyclotomic_classes(1, 6).count() == 6);
    CHECK_THROWS_AS(cyclotomic_classes(3, 9), domain_error);

    // members of one class share their gcd with the modulus; classes partition
    for (long n : {12L, 16L, 45L})
        for (long R = 1; R < n; ++R) {
            if (gcd(R, n) != 1) continue;
            auto p = cyclotomic_classes(R, n);
            long total = 0;
            for (const auto& cls : p.classes) {
                total += (long)cls.size();
                Int g = gcd(cls[0], n);
                for (const Int& x : cls) CHECK(gcd(x, n) == g);
            }
            CHECK(total == n);
            CHECK(Int(p.count()) == cyclotomic_class_count(R, n));
        }
}

TEST_CASE("class-count identity over n <= 200") {
    for (long n = 1; n <= 200; ++n)
        for (long R : {2L, 3L, 5L, 10L, n - 1})
            if (R >= 1 && gcd(R, n) == 1)
                CHECK(cyclotomic_class_count(R, n) == naive_orbit_count(R % n, n));
}

TEST_CASE("lemma 2.3: closed class count modulo p^m") {
    CHECK(closed_cyclotomic_count(10, 3, 2) == 9);
    CHECK(closed_cyclotomic_count(4, 3, 2) == 5);
    CHECK(closed_cyclotomic_count(7, 2, 2) == 3);
    CHECK_THROWS_AS(closed_cyclotomic_count(5, 3, 2), domain_error);
    for (long p : {2L, 3L, 5L, 7L})
        for (long R = 1; R <= 200; ++R) {
            if ((R - 1) % p != 0) continue;
            for (long m = 0; m <= 6; ++m) {
                Int pm = pow_int(p, m);
                if (pm > 100000) break;
                CHECK(closed_cyclotomic_count(R, p, m) == Int(cyclotomic_classes(R, pm).count()));
            }
        }
}

TEST_CASE("sum of d 2^d") {
    CHECK(sum_d_2d(0) == 0);
    CHECK(sum_d_2d(2) == 10);
    CHECK(sum_d_2d(3) == 34);
    Int naive = 0, pw = 1;
    for (long d = 0; d <= 30; ++d) {
        naive += d * pw;
        pw *= 2;
        CHECK(sum_d_2d(d) == naive);
    }
}

TEST_CASE("rational powers") {
    CHECK(pow_rat(3, -1) == Rat(1, 3));
    CHECK(pow_rat(2, 5) == 32);
    CHECK(pow_rat(5, 0) == 1);
}
