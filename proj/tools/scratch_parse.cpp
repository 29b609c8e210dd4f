// scratch: select the Theorem-2.2 condition parse by the tuple/class bijection
#include <cstdio>
#include <map>

#include "metaq/dense_group.hpp"

using namespace metaq;

namespace {

struct ClassifiedOrder {
    std::vector<MetacyclicPresentation> reps;  // one presentation per iso class
};

ClassifiedOrder classify(const Int& order) {
    auto pres = consistent_presentations_of_order(order);
    std::vector<DenseGroup> dense;
    dense.reserve(pres.size());
    for (const auto& P : pres) dense.emplace_back(P);

    // cheap fingerprint buckets, then brute-force within buckets
    std::map<std::string, std::vector<int>> buckets;
    for (int i = 0; i < (int)pres.size(); ++i) {
        std::string key;
        for (auto& [o, c] : dense[i].order_histogram())
            key += std::to_string(o) + ":" + std::to_string(c) + ",";
        key += "|";
        for (auto& f : pres[i].abelianization_invariants()) key += f.get_str() + ",";
        key += "|" + std::to_string(dense[i].class_count());
        buckets[key].push_back(i);
    }
    ClassifiedOrder out;
    for (auto& [key, idxs] : buckets) {
        std::vector<int> reps;
        for (int i : idxs) {
            bool matched = false;
            for (int r : reps)
                if (brute_force_isomorphic(dense[r], dense[i])) { matched = true; break; }
            if (!matched) reps.push_back(i);
        }
        for (int r : reps) out.reps.push_back(pres[r]);
    }
    return out;
}

}  // namespace

int main() {
    for (auto [pl, bound] : {std::pair<long, long>{2, 64}, {3, 81}}) {
        Int p(pl);
        for (Int q = p; q <= bound; q *= p) {
            ClassifiedOrder cls = classify(q);
            std::printf("p=%ld order=%s: %zu iso classes;", pl, q.get_str().c_str(),
                        cls.reps.size());
            for (ClauseParse a3 : {ClauseParse::Literal, ClauseParse::Flipped})
                for (ClauseParse cb : {ClauseParse::Literal, ClauseParse::Flipped}) {
                    ConditionParse parse{a3, cb};
                    auto tuples = valid_tuples_of_order(p, q, parse);
                    // map each tuple to an iso class; bijection = counts equal and injective
                    std::vector<DenseGroup> reps;
                    for (const auto& r : cls.reps) reps.emplace_back(r);
                    std::vector<int> hit(reps.size(), 0);
                    bool injective = true;
                    for (const auto& t : tuples) {
                        DenseGroup g(t.to_presentation());
                        int found = -1;
                        for (int i = 0; i < (int)reps.size(); ++i)
                            if (brute_force_isomorphic(reps[i], g)) { found = i; break; }
                        if (found < 0 || hit[found]++) injective = false;
                    }
                    bool bij = injective && tuples.size() == cls.reps.size();
                    std::printf("  [a3=%c cb=%c: %zu %s]", a3 == ClauseParse::Literal ? 'L' : 'F',
                                cb == ClauseParse::Literal ? 'L' : 'F', tuples.size(),
                                bij ? "BIJ" : "no");
                }
            std::printf("\n");
        }
    }
    return 0;
}
