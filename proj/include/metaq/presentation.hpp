#pragma once

#include <string>

#include "metaq/numtheory.hpp"

namespace metaq {

// <a, b | a^m = 1, b^n = a^s, a^b = a^r>, with the convention g^h = h^-1 g h.
// Consistency (the presentation defines a group of order m*n):
//   gcd(r, m) = 1,  r^n = 1 mod m,  s (r - 1) = 0 mod m.
struct MetacyclicPresentation {
    Int m, n, s, r;

    MetacyclicPresentation(Int m_, Int n_, Int s_, Int r_);

    bool is_consistent() const;
    void require_consistent() const;
    Int order() const { return m * n; }
    bool is_abelian() const { return mod(r - 1, m) == 0; }

    // G' = <a^{r-1}>
    Int derived_subgroup_order() const { return m / gcd(m, r - 1); }

    // invariant factors of G/G' (Smith form of [[gcd(m, r-1), 0], [-s, n]]), 1's dropped
    std::vector<Int> abelianization_invariants() const;

    std::string str() const;  // "mc(m,n,s,r)"

    bool operator==(const MetacyclicPresentation&) const = default;
};

// Normal form b^j a^i with 0 <= j < n, 0 <= i < m.
struct GroupElement {
    Int j, i;
    bool operator==(const GroupElement&) const = default;
    bool operator<(const GroupElement& o) const {
        return j < o.j || (j == o.j && i < o.i);
    }
};

GroupElement identity_element();
GroupElement make_element(const MetacyclicPresentation& G, const Int& j, const Int& i);
bool is_identity(const GroupElement& g);

GroupElement multiply(const GroupElement& g, const GroupElement& h, const MetacyclicPresentation& G);
GroupElement inverse(const GroupElement& g, const MetacyclicPresentation& G);
// powers use the geometric-sum law (hg)^t = h^t g^{S(x,t)}; k may be negative
GroupElement power(const GroupElement& g, const Int& k, const MetacyclicPresentation& G);
Int element_order(const GroupElement& g, const MetacyclicPresentation& G);
// g^h = h^-1 g h
GroupElement conjugate(const GroupElement& g, const GroupElement& h, const MetacyclicPresentation& G);

enum class Epsilon { Plus = 1, Minus = -1 };

// Canonical parameters of a metacyclic p-group:
//   P = <a, b | a^{p^mu} = 1, b^{p^nu} = a^{p^sigma}, a^b = a^{eps + p^rho}>.
struct CanonicalPParams {
    Int p;
    Int mu, nu, sigma, rho;
    Epsilon eps;

    Int order() const { return pow_int(p, mu + nu); }
    MetacyclicPresentation to_presentation() const;
    std::string str() const;  // "mcp(p,mu,nu,sigma,rho,eps)"

    bool operator==(const CanonicalPParams&) const = default;
    bool operator<(const CanonicalPParams& o) const;
};

// Two clauses of the classification conditions admit more than one reading;
// the bijection check in module invariants selects the right one empirically.
//   A3  -- "if p = 2 >= mu then rho >= 2"
//   Cb  -- "if 2 >= nu and 3 >= mu then rho <= sigma"
// Literal applies each clause exactly as printed; Flipped reverses the
// inequalities in the guard (p = 2 <= mu, resp. nu >= 2 and mu >= 3).
enum class ClauseParse { Literal, Flipped };

struct ConditionParse {
    ClauseParse a3 = ClauseParse::Flipped;
    ClauseParse cb = ClauseParse::Flipped;
};

// Per-clause results, for diagnosis.
struct CanonicalClauseReport {
    bool base;  // p prime, parameters non-negative
    bool a1;    // rho <= mu
    bool a2;    // mu >= 1  ->  rho >= 1
    bool a3;    // parse-dependent (p = 2 only)
    bool b;     // eps = +1 chain
    bool ca;    // eps = -1 chain
    bool cb;    // parse-dependent (eps = -1 only)
    bool all() const { return base && a1 && a2 && a3 && b && ca && cb; }
};

CanonicalClauseReport canonical_clauses(const CanonicalPParams& t, const ConditionParse& parse = {});
bool validate_canonical(const CanonicalPParams& t, const ConditionParse& parse = {});

// All valid tuples with p^{mu+nu} = order, in lexicographic (mu,nu,sigma,rho,eps) order.
std::vector<CanonicalPParams> valid_tuples_of_order(const Int& p, const Int& order,
                                                    const ConditionParse& parse = {});

// All consistent presentations with m*n = order, ordered by (m, r, s).
std::vector<MetacyclicPresentation> consistent_presentations_of_order(const Int& order);

// ---- group literals ----------------------------------------------------

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// One of the literals mc(m,n,s,r) / mcp(p,mu,nu,sigma,rho,eps).
struct GroupSpec {
    MetacyclicPresentation presentation;
    std::optional<CanonicalPParams> canonical;  // set when given as mcp(...)
    std::string str() const { return canonical ? canonical->str() : presentation.str(); }
};

GroupSpec parse_group_spec(const std::string& text);

}  // namespace metaq
