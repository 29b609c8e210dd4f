#include "metaq/dense_group.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace metaq {

int ElementSet::count() const {
    int c = 0;
    for (uint64_t w : bits_) c += std::popcount(w);
    return c;
}

std::vector<int> ElementSet::members() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = 0; i < universe_; ++i)
        if (test(i)) out.push_back(i);
    return out;
}

bool ElementSet::contains(const ElementSet& other) const {
    for (size_t w = 0; w < bits_.size(); ++w)
        if (other.bits_[w] & ~bits_[w]) return false;
    return true;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
    ElementSet out(universe_);
    for (size_t w = 0; w < bits_.size(); ++w) out.bits_[w] = bits_[w] & other.bits_[w];
    return out;
}

namespace {

long to_long(const Int& v, const char* what) {
    require(v.fits_slong_p(), what);
    return v.get_si();
}

long gcd_l(long a, long b) { return std::gcd(a, b); }

}  // namespace

DenseGroup::DenseGroup(MetacyclicPresentation pres, long cap) : pres_(std::move(pres)) {
    pres_.require_consistent();
    require(pres_.order() <= cap, "dense group: cap exceeded");
    m_ = to_long(pres_.m, "dense group: m too large");
    n_ = to_long(pres_.n, "dense group: n too large");
    s_ = to_long(pres_.s, "dense group: s too large");
    r_ = to_long(pres_.r, "dense group: r too large");
    rpow_.resize(n_);
    rpow_[0] = m_ > 1 ? 1 : 0;
    for (long j = 1; j < n_; ++j) rpow_[j] = rpow_[j - 1] * r_ % m_;

    int N = size();
    inv_.resize(N);
    order_.resize(N);
    for (int g = 0; g < N; ++g) {
        long j = g / m_, i = g % m_;
        if (j == 0) {
            inv_[g] = (int)((m_ - i) % m_);
        } else {
            long jj = n_ - j;
            long ii = (-s_ - i * rpow_[jj]) % m_;
            if (ii < 0) ii += m_;
            inv_[g] = (int)(jj * m_ + ii);
        }
    }
    for (int g = 0; g < N; ++g) {
        long j = g / m_;
        long t = n_ / gcd_l(j, n_);
        int gt = pow(g, t);
        order_[g] = (int)(t * (m_ / gcd_l(gt % m_, m_)));
    }
}

int DenseGroup::pow(int g, long k) const {
    if (k < 0) return pow(inv_[g], -k);
    long j = g / m_, i = g % m_;
    long x = rpow_[j];
    // S(x, k) mod m by binary splitting
    long sum = 0, pw = m_ > 1 ? 1 : 0, kk = k;
    std::vector<bool> bitsrev;
    while (kk > 0) { bitsrev.push_back(kk & 1); kk >>= 1; }
    for (auto it = bitsrev.rbegin(); it != bitsrev.rend(); ++it) {
        sum = sum * (1 + pw) % m_;
        pw = pw * pw % m_;
        if (*it) { sum = (sum + pw) % m_; pw = pw * x % m_; }
    }
    long jk = j * k;
    long jr = jk % n_, wraps = jk / n_;
    long ii = (i % m_ * sum + s_ % m_ * (wraps % m_)) % m_;
    return (int)(jr * m_ + ii);
}

std::map<long, long> DenseGroup::order_histogram() const {
    std::map<long, long> h;
    for (int g = 0; g < size(); ++g) ++h[order_[g]];
    return h;
}

Subgroup DenseGroup::closure(std::vector<int> gens) const {
    Subgroup s;
    s.set = ElementSet(size());
    std::vector<int> list;
    auto add = [&](int x) {
        if (!s.set.test(x)) { s.set.set(x); list.push_back(x); }
    };
    add(0);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (int g : gens) add(g);
    for (size_t head = 0; head < list.size(); ++head)
        for (int g : gens) add(mul(list[head], g));
    s.gens = std::move(gens);
    std::sort(list.begin(), list.end());
    s.members = std::move(list);
    return s;
}

namespace {

// greedy small generating list for a known subgroup
Subgroup from_member_set(const DenseGroup& G, const ElementSet& set) {
    std::vector<int> members = set.members();
    std::vector<int> by_order = members;
    std::sort(by_order.begin(), by_order.end(), [&](int x, int y) {
        return G.order_of(x) > G.order_of(y) || (G.order_of(x) == G.order_of(y) && x < y);
    });
    std::vector<int> gens;
    Subgroup cur = G.closure({});
    for (int x : by_order) {
        if ((int)members.size() == cur.order()) break;
        if (cur.set.test(x)) continue;
        gens.push_back(x);
        cur = G.closure(gens);
    }
    check(cur.order() == (int)members.size(), "from_member_set: set is not a subgroup");
    return cur;
}

}  // namespace

ElementSet DenseGroup::conjugate_set(const ElementSet& s, int g) const {
    ElementSet out(size());
    int gi = inv_[g];
    for (int x = 0; x < s.universe(); ++x)
        if (s.test(x)) out.set(mul(mul(gi, x), g));
    return out;
}

bool DenseGroup::normalizes(int g, const Subgroup& s) const {
    for (int x : s.gens)
        if (!s.set.test(conj(x, g))) return false;
    return true;
}

bool DenseGroup::is_normal_in(const Subgroup& s, const Subgroup& ambient) const {
    for (int g : ambient.gens)
        if (!normalizes(g, s)) return false;
    return true;
}

bool DenseGroup::is_normal(const Subgroup& s) const {
    return normalizes(idx_a(), s) && normalizes(idx_b(), s);
}

Subgroup DenseGroup::normalizer(const Subgroup& s) const {
    ElementSet out(size());
    for (int g = 0; g < size(); ++g)
        if (normalizes(g, s)) out.set(g);
    return from_member_set(*this, out);
}

Subgroup DenseGroup::core(const Subgroup& s) const {
    // the union of the conjugacy classes contained in s
    conjugacy_classes();
    ElementSet out(size());
    for (const auto& cls : classes_) {
        bool inside = true;
        for (int x : cls)
            if (!s.set.test(x)) { inside = false; break; }
        if (inside)
            for (int x : cls) out.set(x);
    }
    return from_member_set(*this, out);
}

Subgroup DenseGroup::centralizer(int g) const {
    ElementSet out(size());
    for (int x = 0; x < size(); ++x)
        if (mul(x, g) == mul(g, x)) out.set(x);
    return from_member_set(*this, out);
}

Subgroup DenseGroup::center() const {
    int a = idx_a(), b = idx_b();
    ElementSet out(size());
    for (int x = 0; x < size(); ++x)
        if (mul(x, a) == mul(a, x) && mul(x, b) == mul(b, x)) out.set(x);
    return from_member_set(*this, out);
}

bool DenseGroup::is_abelian_subgroup(const Subgroup& s) const {
    for (int x : s.gens)
        for (int y : s.gens)
            if (mul(x, y) != mul(y, x)) return false;
    return true;
}

bool DenseGroup::is_cyclic_quotient(const Subgroup& h, const Subgroup& k) const {
    check(h.set.contains(k.set), "is_cyclic_quotient: K not inside H");
    int index = h.order() / k.order();
    for (int x : h.members) {
        int y = x, t = 1;
        while (!k.set.test(y)) { y = mul(y, x); ++t; }
        if (t == index) return true;
    }
    return index == 1;
}

std::vector<Subgroup> DenseGroup::all_subgroups() const {
    std::map<std::vector<uint64_t>, Subgroup> seen;
    std::vector<Int> mds = divisors(pres_.m), nds = divisors(pres_.n);
    for (const Int& dI : mds) {
        long d = dI.get_si();
        int ad = (int)(d % m_);
        for (const Int& eI : nds) {
            long e = eI.get_si();
            for (long c = 0; c < d; ++c) {
                GroupElement be = make_element(pres_, Int(e), Int(c));
                Subgroup s = closure({ad, index(be)});
                seen.emplace(s.set.words(), std::move(s));
            }
        }
    }
    std::vector<Subgroup> out;
    out.reserve(seen.size());
    for (auto& [w, s] : seen) out.push_back(std::move(s));
    std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
        return x.order() < y.order() || (x.order() == y.order() && x.members < y.members);
    });
    return out;
}

std::vector<Subgroup> DenseGroup::cyclic_subgroups() const {
    std::map<std::vector<uint64_t>, Subgroup> seen;
    for (int g = 0; g < size(); ++g) {
        ElementSet set(size());
        int x = g;
        do { set.set(x); x = mul(x, g); } while (x != g);
        if (seen.count(set.words())) continue;
        Subgroup s;
        s.set = set;
        s.members = set.members();
        s.gens = g == 0 ? std::vector<int>{} : std::vector<int>{g};
        seen.emplace(s.set.words(), std::move(s));
    }
    std::vector<Subgroup> out;
    for (auto& [w, s] : seen) out.push_back(std::move(s));
    std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
        return x.order() < y.order() || (x.order() == y.order() && x.members < y.members);
    });
    return out;
}

Subgroup DenseGroup::normal_closure(const Subgroup& ambient, std::vector<int> seed) const {
    Subgroup s = closure(seed);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x : s.members) {
            for (int h : ambient.gens) {
                int c = conj(x, h);
                if (!s.set.test(c)) { seed.push_back(c); changed = true; }
            }
        }
        if (changed) s = closure(seed);
    }
    return s;
}

std::vector<Subgroup> DenseGroup::minimal_normal_over(const Subgroup& ambient,
                                                      const Subgroup& n) const {
    require(ambient.set.contains(n.set), "minimal_normal_over: N not inside ambient");
    require(is_normal_in(n, ambient), "minimal_normal_over: N not normal");
    std::map<std::vector<uint64_t>, Subgroup> seen;
    for (int g : ambient.members) {
        if (n.set.test(g)) continue;
        std::vector<int> seed = n.gens;
        seed.push_back(g);
        Subgroup d = normal_closure(ambient, std::move(seed));
        seen.emplace(d.set.words(), std::move(d));
    }
    std::vector<Subgroup> out;
    for (auto& [w, d] : seen) {
        bool minimal = true;
        for (auto& [w2, d2] : seen)
            if (!(w2 == w) && d.set.contains(d2.set)) { minimal = false; break; }
        if (minimal) out.push_back(d);
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
        return x.order() < y.order() || (x.order() == y.order() && x.members < y.members);
    });
    return out;
}

Subgroup DenseGroup::derived_subgroup(const Subgroup& s) const {
    std::vector<int> seeds;
    for (int x : s.gens)
        for (int y : s.gens) seeds.push_back(mul(inv_[x], conj(x, y)));
    return normal_closure(s, std::move(seeds));
}

Subgroup DenseGroup::power_subgroup(const Subgroup& s, long k) const {
    std::vector<int> seeds;
    seeds.reserve(s.members.size());
    for (int x : s.members) seeds.push_back(pow(x, k));
    return closure(std::move(seeds));
}

const std::vector<std::vector<int>>& DenseGroup::conjugacy_classes() const {
    if (!classes_.empty() || size() == 0) return classes_;
    class_of_.assign(size(), -1);
    int a = idx_a(), b = idx_b();
    for (int g = 0; g < size(); ++g) {
        if (class_of_[g] >= 0) continue;
        std::vector<int> orbit{g};
        class_of_[g] = (int)classes_.size();
        for (size_t head = 0; head < orbit.size(); ++head) {
            for (int h : {a, b}) {
                int c = conj(orbit[head], h);
                if (class_of_[c] < 0) {
                    class_of_[c] = (int)classes_.size();
                    orbit.push_back(c);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes_.push_back(std::move(orbit));
    }
    return classes_;
}

std::vector<std::vector<int>> DenseGroup::subgroup_orbits(const std::vector<Subgroup>& subs) const {
    std::map<std::vector<uint64_t>, int> id;
    for (int i = 0; i < (int)subs.size(); ++i) id.emplace(subs[i].set.words(), i);
    std::vector<bool> done(subs.size(), false);
    std::vector<std::vector<int>> orbits;
    int a = idx_a(), b = idx_b();
    for (int i = 0; i < (int)subs.size(); ++i) {
        if (done[i]) continue;
        std::vector<int> orbit{i};
        done[i] = true;
        for (size_t head = 0; head < orbit.size(); ++head) {
            for (int h : {a, b}) {
                ElementSet cs = conjugate_set(subs[orbit[head]].set, h);
                auto it = id.find(cs.words());
                check(it != id.end(), "subgroup_orbits: list not closed under conjugation");
                if (!done[it->second]) {
                    done[it->second] = true;
                    orbit.push_back(it->second);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

std::vector<std::vector<int>> DenseGroup::cyclic_subgroup_orbit_classes() const {
    return subgroup_orbits(cyclic_subgroups());
}

long DenseGroup::cyclic_subgroup_class_count() const {
    return (long)cyclic_subgroup_orbit_classes().size();
}

int DenseGroup::pi_part_of(int g, const std::vector<Int>& pi) const {
    Int o(order_[g]);
    Int opi = n_part(pi, o);
    if (opi == 1) return 0;
    Int rest = o / opi;
    if (rest == 1) return g;
    // exponent c = rest * (rest^-1 mod opi): c = 1 mod opi, c = 0 mod rest
    Int invr;
    mpz_invert(invr.get_mpz_t(), rest.get_mpz_t(), opi.get_mpz_t());
    Int c = rest * invr;
    return pow(g, c.get_si());
}

bool DenseGroup::has_normal_hall_p_prime_subgroup(const Int& p) const {
    Int target = n_coprime_part({p}, pres_.order());
    std::vector<int> seeds;
    long pl = p.get_si();
    for (int g = 0; g < size(); ++g)
        if (order_[g] % pl != 0) seeds.push_back(g);
    Subgroup s = closure(std::move(seeds));
    // generated by all p'-elements; characteristic, hence normal
    return Int(s.order()) == target;
}

PiSignature DenseGroup::pi_signature() const {
    std::vector<Int> primes = prime_divisors(pres_.order());
    PiSignature sig;
    for (const Int& p : primes)
        (has_normal_hall_p_prime_subgroup(p) ? sig.pi : sig.pi_prime).push_back(p);

    // independent characterization: pi' = { p in pi(G') : (G/G')_p cyclic }
    std::vector<Int> pi_prime_b;
    Int dord = pres_.derived_subgroup_order();
    std::vector<Int> invf = pres_.abelianization_invariants();
    for (const Int& p : prime_divisors(dord))
        if (invf.size() < 2 || mod(invf[0], p) != 0) pi_prime_b.push_back(p);
    check(pi_prime_b == sig.pi_prime,
          "pi_signature: brute force and derived-quotient characterization disagree");
    return sig;
}

SubgroupPresentation DenseGroup::represent_subgroup(const Subgroup& s) const {
    long t = 0, j0 = n_;
    for (int x : s.members) {
        long j = x / m_;
        if (j == 0) ++t;
        j0 = gcd_l(j0, j);
    }
    long nS = n_ / j0;
    check(t * nS == s.order(), "represent_subgroup: size mismatch");
    // a-part: S intersect <a> is the subgroup of order t, generated by a^{m/t}
    long ma = m_ / t;
    int u = 0;
    if (j0 < n_) {
        for (int x : s.members)
            if (x / m_ == j0) { u = x; break; }
    }
    int upow = pow(u, nS);
    check(upow / m_ == 0 && (upow % m_) % ma == 0, "represent_subgroup: u^nS not in a-part");
    long sS = (upow % m_) / ma % t;
    long rS = t == 1 ? 0 : powmod(Int(r_), Int(j0), Int(t)).get_si();
    MetacyclicPresentation sub{Int(t), Int(nS), Int(sS), Int(rS)};
    sub.require_consistent();
    check(sub.order() == s.order(), "represent_subgroup: order mismatch");
    return SubgroupPresentation{s, sub, element(t > 1 ? (int)ma : 0), element(u)};
}

SubgroupPresentation DenseGroup::sylow_subgroup(const Int& p) const {
    require(is_prime(p), "sylow_subgroup: p must be prime");
    Subgroup s = closure({pi_part_of(idx_a(), {p}), pi_part_of(idx_b(), {p})});
    check(Int(s.order()) == n_part(p, pres_.order()), "sylow_subgroup: wrong order");
    return represent_subgroup(s);
}

SubgroupPresentation DenseGroup::hall_subgroup(const std::vector<Int>& pi) const {
    PiSignature sig = pi_signature();
    for (const Int& p : pi) {
        bool in_pi = std::find(sig.pi.begin(), sig.pi.end(), p) != sig.pi.end();
        require(in_pi, "hall_subgroup: pi is not a subset of pi_G");
    }
    Subgroup s = closure({pi_part_of(idx_a(), pi), pi_part_of(idx_b(), pi)});
    check(Int(s.order()) == n_part(pi, pres_.order()), "hall_subgroup: wrong order");
    return represent_subgroup(s);
}

bool brute_force_isomorphic(const DenseGroup& G, const DenseGroup& H) {
    require(G.size() == H.size(), "brute_force_isomorphic: orders differ");
    if (G.order_histogram() != H.order_histogram()) return false;
    const auto& P = G.presentation();
    long m = P.m.get_si(), n = P.n.get_si(), s = P.s.get_si(), r = P.r.get_si();
    int oa = G.order_of(G.idx_a()), ob = G.order_of(G.idx_b());
    for (int g = 0; g < H.size(); ++g) {
        if (H.order_of(g) != oa) continue;
        int gs = H.pow(g, s), gr = H.pow(g, r);
        for (int h = 0; h < H.size(); ++h) {
            if (H.order_of(h) != ob) continue;
            if (H.conj(g, h) != gr) continue;
            if (H.pow(h, n) != gs) continue;
            if (G.size() == H.closure({g, h}).order()) return true;
        }
        if (m == 1) break;  // g is the identity either way
    }
    return false;
}

}  // namespace metaq
