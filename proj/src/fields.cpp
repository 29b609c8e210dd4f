#include "metaq/fields.hpp"

#include <algorithm>
#include <set>

namespace metaq {

bool AbelianFieldDescriptor::is_totally_real() const {
    Int c = mod(-1, conductor);
    return std::binary_search(kernel.begin(), kernel.end(), c);
}

std::string AbelianFieldDescriptor::str() const {
    std::string s = "Q(zeta_" + conductor.get_str() + ")^{";
    for (size_t i = 0; i < kernel.size(); ++i)
        s += (i ? "," : "") + kernel[i].get_str();
    return s + "}";
}

std::vector<Int> unit_subgroup(const Int& n, const std::vector<Int>& gens) {
    require(n >= 1, "unit_subgroup: modulus must be positive");
    std::set<Int> sub{mod(1, n)};
    for (const Int& g : gens) {
        Int gm = mod(g, n);
        require(gcd(gm, n) == 1, "unit_subgroup: generator not coprime to modulus");
        std::vector<Int> frontier(sub.begin(), sub.end());
        for (size_t head = 0; head < frontier.size(); ++head) {
            Int next = mod(frontier[head] * gm, n);
            if (sub.insert(next).second) frontier.push_back(next);
        }
    }
    return std::vector<Int>(sub.begin(), sub.end());
}

AbelianFieldDescriptor canonicalize_field(const Int& n, const std::vector<Int>& gens) {
    std::vector<Int> gamma = unit_subgroup(n, gens);
    std::set<Int> in_gamma(gamma.begin(), gamma.end());
    for (const Int& f : divisors(n)) {
        // ker(units(n) -> units(f)) = units congruent to 1 mod f
        bool contained = true;
        for (Int v = mod(1, n); v < n; v += f) {
            if (gcd(v, n) != 1) continue;
            if (!in_gamma.count(v)) { contained = false; break; }
        }
        if (!contained) continue;
        std::set<Int> image;
        for (const Int& u : gamma) image.insert(mod(u, f));
        return AbelianFieldDescriptor{f, std::vector<Int>(image.begin(), image.end())};
    }
    throw internal_error("canonicalize_field: no conductor found");
}

AbelianFieldDescriptor rationals_descriptor() { return AbelianFieldDescriptor{1, {0}}; }

AbelianFieldDescriptor real_cyclotomic_descriptor(const Int& m) {
    return canonicalize_field(m, {m - 1});
}

}  // namespace metaq
