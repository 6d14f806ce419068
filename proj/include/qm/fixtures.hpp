#pragma once

#include "qm/covering.hpp"
#include "qm/cycle_mutation.hpp"
#include "qm/quiver.hpp"

namespace qm::fixtures {

// 9-vertex quiver: oriented 3-cycle on the 1-vertices plus one triangle
// 1_j -> 2_j -> 3_j -> 1_j per fiber index. Potential: sum of minimal cycles.
QuiverWithPotential a9();
// The designated cycle {1_1,1_2,1_3} with C_0 = B_0 empty, C_1 = deltas, B_1 = betas.
CycleSpec a9_spec();
// Expected mutation result: alpha-cycle unchanged, triangles 1_j -> 3_{j+1} -> 2_{j+2} -> 1_j.
Quiver a9_mutated();

// 15-vertex quiver of the canonical cluster-tilting object over the
// preprojective algebra of A6. Potential: sum of minimal cycles (all triangles).
QuiverWithPotential pp_a6();
// Cycle {5_1,5_2,5_3} with C_0 = {3->5}, C_1 = {4->5}, B_0 = {5->3}, B_1 = {5->2}.
CycleSpec pp_a6_spec();
Quiver pp_a6_mutated();

// 6-vertex cover: alpha-cycle on the 1-vertices, beta_j: 1_{j+1} -> 2_j,
// gamma_j: 2_j -> 1_j.
QuiverWithPotential d6_cover();
CycleSpec d6_cover_spec();

// Base quivers with a loop: vertices {1,2,3} with loop alpha, beta: 1->2,
// gamma: 2->3, delta: 3->1 (a9-base); vertices {1,2} with loop alpha,
// beta: 1->2, gamma: 2->1 (d6-base).
QuiverWithPotential a9_base();
QuiverWithPotential d6_base();
// Expected base mutation at vertex 1: loop kept, triangle reversed.
Quiver a9_base_mutated();

}  // namespace qm::fixtures
