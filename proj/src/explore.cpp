#include "qm/explore.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "qm/iso.hpp"

namespace qm {

namespace {

IntMatrix positive_part(const SkewMatrix& m) {
    IntMatrix p(m.size(), m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) p.at(i, j) = std::max<long long>(m.at(i, j), 0);
    return p;
}

}  // namespace

ExploreResult explore_mutation_class(const Quiver& q, int max_depth) {
    for (const std::string& v : q.vertices())
        if (q.has_loop_at(v) || q.has_two_cycle_at(v))
            throw unsupported_mutation("explore needs a loop-free, 2-cycle-free quiver");

    ExploreResult res;
    std::unordered_map<std::string, int> id_of;
    std::vector<std::pair<SkewMatrix, int>> frontier;  // (matrix, class id)
    std::set<std::pair<int, int>> edge_set;

    SkewMatrix m0 = skew_matrix(q);
    id_of[canonical_labeling(positive_part(m0)).code] = 0;
    res.representatives.push_back(m0);
    res.new_classes_per_depth.push_back(1);
    frontier.push_back({m0, 0});

    const int n = static_cast<int>(q.vertices().size());
    for (int depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
        std::vector<std::pair<SkewMatrix, int>> next;
        int fresh = 0;
        for (const auto& [m, cid] : frontier) {
            for (int v = 0; v < n; ++v) {
                SkewMatrix child = fz_mutate_matrix(m, v);
                std::string key = canonical_labeling(positive_part(child)).code;
                auto it = id_of.find(key);
                int child_id;
                if (it == id_of.end()) {
                    child_id = static_cast<int>(id_of.size());
                    id_of[key] = child_id;
                    res.representatives.push_back(child);
                    next.push_back({std::move(child), child_id});
                    ++fresh;
                } else {
                    child_id = it->second;
                }
                if (child_id != cid) edge_set.insert({std::min(cid, child_id), std::max(cid, child_id)});
            }
        }
        res.new_classes_per_depth.push_back(fresh);
        frontier = std::move(next);
    }
    while (!res.new_classes_per_depth.empty() && res.new_classes_per_depth.back() == 0)
        res.new_classes_per_depth.pop_back();
    res.total_classes = static_cast<int>(id_of.size());
    res.edges.assign(edge_set.begin(), edge_set.end());
    return res;
}

}  // namespace qm
