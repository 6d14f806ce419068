#pragma once

#include <string>
#include <vector>

#include "qm/quiver.hpp"

namespace qm::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Exact matrix identities behind the cycle mutation rule, per fixture.
std::vector<CheckResult> appendix_suite(const std::string& fixture);  // "a9", "ppA6", "d6-cover"

// skew_matrix(mutate_cycle(Q)) against the congruence S M S^t, per fixture.
std::vector<CheckResult> palu_suite(const std::string& fixture);

// Mutates every orientation variant of every E82 item at every vertex and
// compares the induced adjacency with the expected 11-edge graph.
std::vector<CheckResult> e82_closure_suite();

// triangulation_to_quiver(flip(t,d)) vs FZ mutation, exhaustively over n-gons.
std::vector<CheckResult> flip_suite(int max_ngon);

std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& name, int max_ngon = 8);

}  // namespace qm::verify
