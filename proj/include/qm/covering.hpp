#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qm/quiver.hpp"

namespace qm::cover {

// Cyclic (order-ell) Galois covering of quivers: vertex/arrow projection plus a
// generator of the deck action.
struct CoveringMap {
    Quiver cover;
    Quiver base;
    int ell = 0;
    std::map<std::string, std::string> vertex_proj;
    std::map<std::string, std::string> arrow_proj;
    std::map<std::string, std::string> deck_vertex;  // (v,k) -> (v,k+1)
    std::map<std::string, std::string> deck_arrow;
};

// Voltage values in Z/ell per base arrow; missing entries default to 0.
using ShiftAssignment = std::map<std::string, int>;

// Voltage-graph construction: base arrow a: u -> v lifts to the ell arrows
// (u,k) -> (v, k+shift(a)). Loops must carry a nonzero shift so the cover has
// no loops upstairs.
CoveringMap build_cyclic_cover(const Quiver& base, int ell, const ShiftAssignment& shifts);

// Loops get shift 1, everything else 0. Enough for bases whose only obstruction
// is a loop; use solve_shifts when 2-cycles or potential terms constrain things.
ShiftAssignment default_shifts(const Quiver& base);

// Finds shifts such that every potential term lifts to a cycle (voltage 0),
// every 2-cycle pair breaks upstairs (pair voltage nonzero) and loops lift to
// honest cycles (nonzero shift). Returns nullopt when no assignment exists.
std::optional<ShiftAssignment> solve_shifts(const QuiverWithPotential& base, int ell);

// Term-wise lift along arrow lifts; each base term must have voltage 0.
Potential lift_potential(const CoveringMap& cm, const Potential& base_potential);

// One arrow per deck-orbit of q's arrows. q must live on cm's cover vertices and
// be deck-invariant; otherwise the upstream mutation was not orbit-symmetric.
Quiver project(const CoveringMap& cm, const Quiver& q);

// Orbit quotient of an arbitrary quiver under a free Z/ell vertex action.
// orbit_name maps each vertex to the name its orbit gets downstairs.
Quiver quotient_by_deck(const Quiver& q, const std::map<std::string, std::string>& deck_vertex, int ell,
                        const std::map<std::string, std::string>& orbit_name);

// Manually supplied C/B annotation for the fiber cycles, keyed by cover arrows.
struct CoverAnnotations {
    std::map<std::string, int> c_index;
    std::map<std::string, int> b_index;
};

// Mutation at a vertex with a loop or 2-cycles, through the ell-fold cover:
// fiber cycles of length >= 3 go through mutate_cycle, an isolated fiber goes
// through FZ mutation at every fiber vertex, and a vertex on neither a loop nor
// a 2-cycle delegates to plain FZ mutation on the base.
Quiver mutate_at_vertex_via_cover(const QuiverWithPotential& base, const std::string& v, int ell,
                                  const ShiftAssignment& shifts,
                                  const std::optional<CoverAnnotations>& annotations = std::nullopt);

struct CoverPreset {
    int ell = 0;
    ShiftAssignment shifts;
};

// Shipped presets for the bundled fixtures: "a9-3" and "d6-3".
std::optional<CoverPreset> shipped_preset(const std::string& name);

}  // namespace qm::cover
