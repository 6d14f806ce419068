#pragma once

#include <map>
#include <string>
#include <vector>

#include "qm/quiver.hpp"

namespace qm {

struct ExploreResult {
    std::vector<int> new_classes_per_depth;  // index 0 = the start class
    int total_classes = 0;
    // exchange graph on class ids: edges between classes one mutation apart
    std::vector<std::pair<int, int>> edges;
    std::vector<SkewMatrix> representatives;
};

// BFS over FZ mutations up to isomorphism. The input must be loop-free and
// 2-cycle-free.
ExploreResult explore_mutation_class(const Quiver& q, int max_depth);

}  // namespace qm
