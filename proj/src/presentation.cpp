#include "metaq/presentation.hpp"

#include <algorithm>
#include <cctype>

namespace metaq {

MetacyclicPresentation::MetacyclicPresentation(Int m_, Int n_, Int s_, Int r_)
    : m(std::move(m_)), n(std::move(n_)) {
    require(m >= 1 && n >= 1, "presentation: m and n must be positive");
    s = mod(s_, m);
    r = mod(r_, m);
}

bool MetacyclicPresentation::is_consistent() const {
    return gcd(r, m) == 1 && powmod(r, n, m) == mod(1, m) && mod(s * (r - 1), m) == 0;
}

void MetacyclicPresentation::require_consistent() const {
    require(is_consistent(), "presentation is not consistent");
}

std::vector<Int> MetacyclicPresentation::abelianization_invariants() const {
    // Smith form of [[g, 0], [-s, n]] for g = gcd(m, r-1): d1 = gcd of entries,
    // d1 d2 = g n.
    Int g = gcd(m, r - 1);
    Int d1 = gcd(g, gcd(s, n));
    Int d2 = g * n / d1;
    std::vector<Int> inv;
    if (d1 > 1) inv.push_back(d1);
    if (d2 > 1) inv.push_back(d2);
    return inv;
}

std::string MetacyclicPresentation::str() const {
    return "mc(" + m.get_str() + "," + n.get_str() + "," + s.get_str() + "," + r.get_str() + ")";
}

GroupElement identity_element() { return GroupElement{0, 0}; }

bool is_identity(const GroupElement& g) { return g.j == 0 && g.i == 0; }

GroupElement make_element(const MetacyclicPresentation& G, const Int& j, const Int& i) {
    // b^{j+n} = b^j a^s, and a^s commutes with every power of b (s(r-1) = 0 mod m)
    Int jr = mod(j, G.n);
    Int wraps = (j - jr) / G.n;
    return GroupElement{jr, mod(i + G.s * wraps, G.m)};
}

GroupElement multiply(const GroupElement& g, const GroupElement& h, const MetacyclicPresentation& G) {
    // a^i b^{j'} = b^{j'} a^{i r^{j'}}
    Int ii = g.i * powmod(G.r, h.j, G.m) + h.i;
    return make_element(G, g.j + h.j, ii);
}

GroupElement inverse(const GroupElement& g, const MetacyclicPresentation& G) {
    if (g.j == 0) return GroupElement{0, mod(-g.i, G.m)};
    Int jj = G.n - g.j;
    return GroupElement{jj, mod(-G.s - g.i * powmod(G.r, jj, G.m), G.m)};
}

GroupElement power(const GroupElement& g, const Int& k, const MetacyclicPresentation& G) {
    if (k < 0) return power(inverse(g, G), -k, G);
    // (b^j a^i)^k = b^{jk} a^{i S(r^j, k)}
    Int x = powmod(G.r, g.j, G.m);
    return make_element(G, g.j * k, g.i * ese_mod(x, k, G.m));
}

Int element_order(const GroupElement& g, const MetacyclicPresentation& G) {
    Int t = G.n / gcd(g.j, G.n);
    GroupElement gt = power(g, t, G);
    check(gt.j == 0, "element_order: power did not land in <a>");
    return t * (G.m / gcd(gt.i, G.m));
}

GroupElement conjugate(const GroupElement& g, const GroupElement& h, const MetacyclicPresentation& G) {
    return multiply(multiply(inverse(h, G), g, G), h, G);
}

MetacyclicPresentation CanonicalPParams::to_presentation() const {
    Int m = pow_int(p, mu);
    Int eps_val = eps == Epsilon::Plus ? 1 : -1;
    return MetacyclicPresentation(m, pow_int(p, nu), mod(pow_int(p, sigma), m),
                                  mod(eps_val + pow_int(p, rho), m));
}

std::string CanonicalPParams::str() const {
    return "mcp(" + p.get_str() + "," + mu.get_str() + "," + nu.get_str() + "," +
           sigma.get_str() + "," + rho.get_str() + "," +
           (eps == Epsilon::Plus ? "1" : "-1") + ")";
}

bool CanonicalPParams::operator<(const CanonicalPParams& o) const {
    auto key = [](const CanonicalPParams& t) {
        return std::tuple<const Int&, const Int&, const Int&, const Int&, const Int&, int>(
            t.p, t.mu, t.nu, t.sigma, t.rho, int(t.eps));
    };
    return key(*this) < key(o);
}

CanonicalClauseReport canonical_clauses(const CanonicalPParams& t, const ConditionParse& parse) {
    CanonicalClauseReport rep{};
    rep.base = is_prime(t.p) && t.mu >= 0 && t.nu >= 0 && t.sigma >= 0 && t.rho >= 0;
    rep.a1 = t.rho <= t.mu;
    rep.a2 = t.mu < 1 || t.rho >= 1;
    if (t.p == 2) {
        bool guard = parse.a3 == ClauseParse::Literal ? t.mu <= 2 : t.mu >= 2;
        rep.a3 = !guard || t.rho >= 2;
    } else {
        rep.a3 = true;
    }
    rep.b = true;
    rep.ca = true;
    rep.cb = true;
    if (t.eps == Epsilon::Plus) {
        rep.b = t.rho <= t.sigma && t.sigma <= t.mu && t.mu <= t.rho + t.sigma && t.sigma <= t.nu;
    } else {
        rep.ca = t.p == 2 && t.rho >= 2 && t.rho <= t.mu && t.nu >= 1 &&
                 t.mu - 1 <= t.sigma && t.sigma <= t.mu && t.mu <= t.rho + t.nu &&
                 t.rho + t.nu != t.sigma;
        bool guard = parse.cb == ClauseParse::Literal ? (t.nu <= 2 && t.mu <= 3)
                                                      : (t.nu >= 2 && t.mu >= 3);
        rep.cb = !guard || t.rho <= t.sigma;
    }
    return rep;
}

bool validate_canonical(const CanonicalPParams& t, const ConditionParse& parse) {
    return canonical_clauses(t, parse).all();
}

std::vector<CanonicalPParams> valid_tuples_of_order(const Int& p, const Int& order,
                                                    const ConditionParse& parse) {
    require(is_prime(p), "valid_tuples_of_order: p must be prime");
    Int k = 0, q = 1;
    while (q < order) { q *= p; ++k; }
    require(q == order, "valid_tuples_of_order: order is not a power of p");
    std::vector<CanonicalPParams> out;
    for (Int mu = 0; mu <= k; ++mu)
        for (Int sigma = 0; sigma <= mu; ++sigma)
            for (Int rho = 0; rho <= mu; ++rho)
                for (Epsilon eps : {Epsilon::Plus, Epsilon::Minus}) {
                    CanonicalPParams t{p, mu, k - mu, sigma, rho, eps};
                    if (validate_canonical(t, parse)) out.push_back(t);
                }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MetacyclicPresentation> consistent_presentations_of_order(const Int& order) {
    require(order >= 1, "consistent_presentations_of_order: order must be positive");
    std::vector<MetacyclicPresentation> out;
    for (const Int& m : divisors(order)) {
        Int n = order / m;
        for (Int r = 0; r < m; ++r) {
            if (gcd(r, m) != 1 || powmod(r, n, m) != mod(1, m)) continue;
            for (Int s = 0; s < m; ++s)
                if (mod(s * (r - 1), m) == 0) out.emplace_back(m, n, s, r);
        }
    }
    return out;
}

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() { while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos; }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) { ++pos; return true; }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }
    Int integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (pos == digits) throw ParseError("expected integer", start);
        return Int(text.substr(start, pos - start));
    }
};

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
    Cursor c{text};
    c.skip_ws();
    bool mcp = false;
    if (text.compare(c.pos, 4, "mcp(") == 0) {
        mcp = true;
        c.pos += 3;
    } else if (text.compare(c.pos, 3, "mc(") == 0) {
        c.pos += 2;
    } else {
        throw ParseError("expected 'mc(' or 'mcp('", c.pos);
    }
    c.expect('(');
    std::vector<Int> vals;
    vals.push_back(c.integer());
    while (c.eat(',')) vals.push_back(c.integer());
    c.expect(')');
    c.skip_ws();
    if (c.pos != text.size()) throw ParseError("trailing input", c.pos);

    if (mcp) {
        if (vals.size() != 6) throw ParseError("mcp(...) takes 6 arguments", c.pos);
        if (!is_prime(vals[0])) throw ParseError("mcp: p must be prime", 4);
        for (int i = 1; i <= 4; ++i)
            if (vals[i] < 0) throw ParseError("mcp: exponents must be non-negative", 4);
        if (vals[5] != 1 && vals[5] != -1) throw ParseError("mcp: epsilon must be 1 or -1", 4);
        CanonicalPParams t{vals[0], vals[1], vals[2], vals[3], vals[4],
                           vals[5] == 1 ? Epsilon::Plus : Epsilon::Minus};
        return GroupSpec{t.to_presentation(), t};
    }
    if (vals.size() != 4) throw ParseError("mc(...) takes 4 arguments", c.pos);
    if (vals[0] < 1 || vals[1] < 1) throw ParseError("mc: m and n must be positive", 3);
    return GroupSpec{MetacyclicPresentation(vals[0], vals[1], vals[2], vals[3]), std::nullopt};
}

}  // namespace metaq
