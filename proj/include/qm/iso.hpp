#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qm/matrix.hpp"
#include "qm/quiver.hpp"

namespace qm {

struct CanonicalLabeling {
    std::vector<int> order;  // order[k] = input vertex index placed at canonical position k
    std::string code;        // equal codes <=> isomorphic multigraphs
};

// Canonical labeling of a directed multigraph given by its arrow-count matrix
// (loops on the diagonal). Color refinement plus ordered backtracking with
// prefix pruning; fine for n <= 20.
CanonicalLabeling canonical_labeling(const IntMatrix& counts);

std::string canonical_form(const Quiver& q);

// Vertex bijection preserving arrow multiplicities in both directions, if one exists.
std::optional<std::map<std::string, std::string>> is_isomorphic(const Quiver& a, const Quiver& b);

}  // namespace qm
