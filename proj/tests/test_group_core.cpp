#include "doctest.h"
#include "metaq/dense_group.hpp"

using namespace metaq;

namespace {

const MetacyclicPresentation kQ8{4, 2, 2, 3};   // mcp(2,2,1,1,2,-1)
const MetacyclicPresentation kD8{4, 2, 0, 3};   // mcp(2,2,1,2,2,-1)
const MetacyclicPresentation kS3{3, 2, 0, 2};

GroupElement naive_power(const GroupElement& g, long k, const MetacyclicPresentation& G) {
    GroupElement acc = identity_element();
    GroupElement base = k < 0 ? inverse(g, G) : g;
    for (long i = 0; i < std::abs(k); ++i) acc = multiply(acc, base, G);
    return acc;
}

std::vector<MetacyclicPresentation> sample_groups() {
    std::vector<MetacyclicPresentation> out{kQ8, kD8, kS3};
    for (long order : {1L, 12L, 16L, 24L, 27L})
        for (const auto& P : consistent_presentations_of_order(order)) out.push_back(P);
    return out;
}

}  // namespace

TEST_CASE("presentation consistency") {
    CHECK(MetacyclicPresentation(3, 2, 0, 2).is_consistent());
    CHECK_FALSE(MetacyclicPresentation(4, 2, 1, 2).is_consistent());  // gcd(r,m) != 1
    CHECK_FALSE(MetacyclicPresentation(5, 2, 0, 2).is_consistent());  // r^n != 1
    CHECK_FALSE(MetacyclicPresentation(4, 2, 1, 3).is_consistent());  // s(r-1) != 0
    CHECK(MetacyclicPresentation(1, 6, 0, 0).is_consistent());
    CHECK(kQ8.is_consistent());
}

TEST_CASE("normal form multiplication") {
    GroupElement a{0, 1}, b{1, 0};
    CHECK(multiply(identity_element(), a, kQ8) == a);
    CHECK(multiply(a, b, kQ8) == GroupElement{1, 3});  // a b = b a^3
    CHECK(multiply(b, b, kQ8) == GroupElement{0, 2});  // b^2 = a^2
    CHECK(conjugate(a, b, kQ8) == GroupElement{0, 3});
    CHECK(element_order(a, kQ8) == 4);
    CHECK(element_order(b, kQ8) == 4);
    CHECK(element_order(b, kD8) == 2);
}

TEST_CASE("power law against repeated multiplication") {
    for (const auto& G : sample_groups()) {
        long N = G.order().get_si();
        for (long j = 0; j < G.n.get_si(); ++j)
            for (long i = 0; i < G.m.get_si(); ++i) {
                GroupElement g{j, i};
                GroupElement acc = identity_element();
                for (long k = 0; k <= N; ++k) {
                    CHECK(power(g, k, G) == acc);
                    acc = multiply(acc, g, G);
                }
                CHECK(power(g, -3, G) == naive_power(g, -3, G));
                CHECK(multiply(g, inverse(g, G), G) == identity_element());
                CHECK(multiply(inverse(g, G), g, G) == identity_element());
                CHECK(element_order(g, G) ==
                      [&] {
                          long k = 1;
                          GroupElement x = g;
                          while (!is_identity(x)) { x = multiply(x, g, G); ++k; }
                          return Int(k);
                      }());
            }
    }
}

TEST_CASE("exponent law (hg)^t = h^t g^{S(x,t)}") {
    for (const auto& G : sample_groups()) {
        if (G.order() > 40) continue;
        for (long j = 0; j < G.n.get_si(); ++j)
            for (long i = 0; i < G.m.get_si(); ++i) {
                GroupElement h{j, i}, g{0, 1};  // g in <a>, normalized by everything
                Int x = powmod(G.r, j, G.m);    // g^h = g^x
                CHECK(conjugate(g, h, G) == power(g, x, G));
                for (long t = 0; t <= 12; ++t) {
                    GroupElement lhs = naive_power(multiply(h, g, G), t, G);
                    GroupElement rhs = multiply(power(h, t, G), power(g, ese(x, t), G), G);
                    CHECK(lhs == rhs);
                }
            }
    }
}

TEST_CASE("dense group agrees with symbolic arithmetic") {
    for (const auto& G : sample_groups()) {
        DenseGroup D(G);
        long N = G.order().get_si();
        CHECK(D.size() == N);
        for (int g = 0; g < N; ++g) {
            GroupElement ge = D.element(g);
            CHECK(D.index(ge) == g);
            CHECK(D.mul(g, D.inv(g)) == 0);
            CHECK(Int(D.order_of(g)) == element_order(ge, G));
            for (int h = 0; h < N; ++h)
                CHECK(D.element(D.mul(g, h)) == multiply(ge, D.element(h), G));
            CHECK(D.pow(g, 7) == D.index(power(ge, 7, G)));
            CHECK(D.pow(g, -5) == D.index(power(ge, -5, G)));
        }
    }
}

TEST_CASE("conjugacy classes") {
    CHECK(DenseGroup(kQ8).class_count() == 5);
    CHECK(DenseGroup(kD8).class_count() == 5);
    DenseGroup c12(MetacyclicPresentation(3, 4, 0, 1));
    CHECK(c12.class_count() == 12);  // abelian: all classes singletons
    DenseGroup s3(kS3);
    for (const auto& cls : s3.conjugacy_classes())
        for (int x : cls) CHECK(s3.order_of(x) == s3.order_of(cls[0]));
}

TEST_CASE("cyclic subgroup classes") {
    CHECK(DenseGroup(MetacyclicPresentation(3, 3, 0, 1)).cyclic_subgroup_class_count() == 5);
    CHECK(DenseGroup(kQ8).cyclic_subgroup_class_count() == 5);
    CHECK(DenseGroup(MetacyclicPresentation(1, 1, 0, 0)).cyclic_subgroup_class_count() == 1);
}

TEST_CASE("subgroup enumeration") {
    CHECK(DenseGroup(kD8).all_subgroups().size() == 10);
    CHECK(DenseGroup(kQ8).all_subgroups().size() == 6);
    DenseGroup s3(kS3);
    auto subs = s3.all_subgroups();
    CHECK(subs.size() == 6);  // 1, three <reflections>, C3, S3
    for (const auto& s : subs) {
        CHECK(s3.size() % s.order() == 0);
        CHECK(s3.closure(s.gens).members == s.members);
    }
}

TEST_CASE("minimal normal subgroups") {
    DenseGroup q8(kQ8);
    auto mins = q8.minimal_normal_over(q8.whole_group(), q8.trivial_subgroup());
    REQUIRE(mins.size() == 1);
    CHECK(mins[0].order() == 2);
    CHECK(mins[0].set.test(q8.index(GroupElement{0, 2})));  // <a^2>

    DenseGroup c5(MetacyclicPresentation(1, 5, 0, 0));
    auto m5 = c5.minimal_normal_over(c5.whole_group(), c5.trivial_subgroup());
    REQUIRE(m5.size() == 1);
    CHECK(m5[0].order() == 5);

    DenseGroup s3(kS3);
    auto m3 = s3.minimal_normal_over(s3.whole_group(), s3.trivial_subgroup());
    REQUIRE(m3.size() == 1);  // only <a>; the order-2 subgroups are not normal
    CHECK(m3[0].order() == 3);
}

TEST_CASE("abelianization invariants") {
    CHECK(kQ8.abelianization_invariants() == std::vector<Int>{2, 2});
    CHECK(kD8.abelianization_invariants() == std::vector<Int>{2, 2});
    CHECK(kS3.abelianization_invariants() == std::vector<Int>{2});
    CHECK(MetacyclicPresentation(1, 6, 0, 0).abelianization_invariants() == std::vector<Int>{6});
    CHECK(MetacyclicPresentation(1, 1, 0, 0).abelianization_invariants().empty());

    // canonical eps=+1 tuples abelianize to C_{p^rho} x C_{p^nu}
    for (const CanonicalPParams& t :
         {CanonicalPParams{3, 2, 2, 2, 1, Epsilon::Plus},
          CanonicalPParams{3, 2, 1, 1, 1, Epsilon::Plus},
          CanonicalPParams{2, 3, 3, 3, 2, Epsilon::Plus}}) {
        REQUIRE(validate_canonical(t));
        std::vector<Int> expect;
        if (t.rho > 0) expect.push_back(pow_int(t.p, t.rho));
        if (t.nu > 0) expect.push_back(pow_int(t.p, t.nu));
        CHECK(t.to_presentation().abelianization_invariants() == expect);
    }
}

TEST_CASE("pi signature") {
    DenseGroup s3(kS3);
    PiSignature sig = s3.pi_signature();
    CHECK(sig.pi == std::vector<Int>{2});
    CHECK(sig.pi_prime == std::vector<Int>{3});

    // nilpotent: pi' empty
    CHECK(DenseGroup(kQ8).pi_signature().pi_prime.empty());
    CHECK(DenseGroup(MetacyclicPresentation(9, 3, 3, 4)).pi_signature().pi_prime.empty());

    // C3 x| C4, faithful-ish action: 3 in pi'
    DenseGroup g(MetacyclicPresentation(3, 4, 0, 2));
    PiSignature sig2 = g.pi_signature();
    CHECK(sig2.pi == std::vector<Int>{2});
    CHECK(sig2.pi_prime == std::vector<Int>{3});
}

TEST_CASE("sylow and hall subgroups") {
    DenseGroup s3(kS3);
    auto syl3 = s3.sylow_subgroup(3);
    CHECK(syl3.pres.order() == 3);
    CHECK(syl3.pres.is_consistent());
    auto syl2 = s3.sylow_subgroup(2);
    CHECK(syl2.pres.order() == 2);

    DenseGroup q8(kQ8);
    CHECK(q8.sylow_subgroup(2).pres.order() == 8);

    DenseGroup c6(MetacyclicPresentation(1, 6, 0, 0));
    CHECK(c6.hall_subgroup({Int(2), Int(3)}).pres.order() == 6);
    CHECK_THROWS_AS(s3.hall_subgroup({Int(3)}), domain_error);  // 3 not in pi_G

    // Sylow subgroup of a mixed group has the right presentation
    DenseGroup g24(MetacyclicPresentation(12, 2, 6, 5));
    auto p2 = g24.sylow_subgroup(2);
    CHECK(p2.pres.order() == 8);
    CHECK(DenseGroup(p2.pres).size() == 8);
}

TEST_CASE("brute force isomorphism") {
    DenseGroup q8(kQ8), d8(kD8), s3(kS3);
    CHECK(brute_force_isomorphic(q8, q8));
    CHECK_FALSE(brute_force_isomorphic(q8, d8));
    DenseGroup c6(MetacyclicPresentation(1, 6, 0, 0));
    CHECK_FALSE(brute_force_isomorphic(s3, c6));
    DenseGroup c4x2a(MetacyclicPresentation(4, 2, 0, 1)), c4x2b(MetacyclicPresentation(2, 4, 0, 1));
    CHECK(brute_force_isomorphic(c4x2a, c4x2b));
    DenseGroup c6b(MetacyclicPresentation(3, 2, 0, 1)), c6c(MetacyclicPresentation(2, 3, 0, 1));
    CHECK(brute_force_isomorphic(c6, c6b));
    CHECK(brute_force_isomorphic(c6b, c6c));
}

TEST_CASE("canonical tuple validation") {
    ConditionParse parse{};  // documented default
    CHECK(validate_canonical({2, 2, 1, 2, 2, Epsilon::Minus}, parse));  // dihedral of order 8
    CHECK(validate_canonical({2, 2, 1, 1, 2, Epsilon::Minus}, parse));  // quaternion of order 8
    CHECK(validate_canonical({3, 1, 1, 1, 1, Epsilon::Plus}, parse));
    CHECK_FALSE(validate_canonical({3, 2, 1, 0, 1, Epsilon::Plus}, parse));  // sigma < rho
    CHECK_FALSE(validate_canonical({3, 1, 1, 1, 1, Epsilon::Minus}, parse)); // eps=-1 needs p=2
    auto rep = canonical_clauses({3, 2, 1, 0, 1, Epsilon::Plus}, parse);
    CHECK(rep.base);
    CHECK(rep.a1);
    CHECK_FALSE(rep.b);

    // lowering matches the stated relations
    CanonicalPParams q8t{2, 2, 1, 1, 2, Epsilon::Minus};
    CHECK(q8t.to_presentation() == kQ8);
    CanonicalPParams d8t{2, 2, 1, 2, 2, Epsilon::Minus};
    CHECK(d8t.to_presentation() == kD8);
}

TEST_CASE("group literals") {
    GroupSpec spec = parse_group_spec("mcp(2,2,1,2,2,-1)");
    REQUIRE(spec.canonical.has_value());
    CHECK(spec.presentation == kD8);
    CHECK(spec.str() == "mcp(2,2,1,2,2,-1)");
    GroupSpec mc = parse_group_spec(" mc( 3, 2, 0, 2 ) ");
    CHECK(mc.presentation == kS3);
    CHECK_THROWS_AS(parse_group_spec("mc(3,2,0)"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("mcq(3,2,0,1)"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("mc(3,2,0,2)x"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("mcp(4,1,1,1,1,1)"), ParseError);
    try {
        parse_group_spec("mc(3,,2)");
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
    }
}

TEST_CASE("normal form element count") {
    for (const auto& G : sample_groups()) {
        DenseGroup D(G);
        std::set<std::pair<long, long>> seen;
        for (int g = 0; g < D.size(); ++g) {
            GroupElement e = D.element(g);
            seen.insert({e.j.get_si(), e.i.get_si()});
        }
        CHECK(Int(seen.size()) == G.order());
    }
}

TEST_CASE("represent subgroup") {
    DenseGroup q8(kQ8);
    // <b> inside the quaternion group is C4
    auto subs = q8.all_subgroups();
    for (const auto& s : subs) {
        auto rep = q8.represent_subgroup(s);
        CHECK(rep.pres.order() == s.order());
        CHECK(rep.pres.is_consistent());
        DenseGroup sub(rep.pres);
        CHECK(sub.order_histogram() == [&] {
            std::map<long, long> h;
            for (int x : s.members) ++h[q8.order_of(x)];
            return h;
        }());
    }
}
