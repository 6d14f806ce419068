#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qm/matrix.hpp"
#include "qm/quiver.hpp"

namespace qm {

// Arrows of q split by the (mutated, fixed) classes of their endpoints.
struct Bipartition {
    std::vector<Arrow> mm, mf, fm, ff;
};

Bipartition classify_bipartition(const Quiver& q, const std::vector<std::string>& cycle_vertices);

// A designated oriented cycle v0 -> v1 -> ... -> v_{l-1} -> v0 together with the
// index annotation of the incident arrows: c_index classifies arrows into the
// cycle by how many cycle steps compose with them before the composite factors
// through an outside (f,f) arrow, b_index dually for arrows leaving the cycle.
struct CycleSpec {
    std::vector<std::string> cycle;
    std::map<std::string, int> c_index;  // arrow of Q_{f,m} -> value in [0, l-2]
    std::map<std::string, int> b_index;  // arrow of Q_{m,f} -> value in [0, l-2]

    int length() const { return static_cast<int>(cycle.size()); }
};

// Checks the CycleSpec invariants against q: the induced subquiver on the cycle
// vertices is exactly one oriented l-cycle (l >= 3), the annotations cover
// exactly Q_{f,m} / Q_{m,f} with values in range, and C_i^t = A^{i+1} B_i holds
// for 0 <= i <= l-3. Throws input_error on violation.
void validate_cycle_spec(const Quiver& q, const CycleSpec& spec);

// Derives the annotation from the potential by bounded path rewriting: a
// composite factors through an (f,f) arrow when the rewrite system generated by
// the cyclic derivatives can turn it into a combination of paths that each pass
// through an (f,f) arrow (a combination that vanishes outright counts).
// Throws undecidable_annotation when the search exceeds its bounds; the caller
// should then supply the CycleSpec manually.
CycleSpec derive_cb_indices(const QuiverWithPotential& qp, const std::vector<std::string>& cycle_vertices);

// Mutation at the oriented cycle, steps (a)-(f):
//   (a) cycle arrows unchanged
//   (b) gamma with c_index = l-2 replaced by the reversed composite [gamma a^{l-1}]^t
//   (c) dually for b_index = l-2
//   (d) (f,f) arrows unchanged
//   (e) one new arrow [gamma a^i beta] whenever i <= min(c_index, b_index) and
//       at least one of the two indices equals l-2
//   (f) loops removed, then opposite arrow pairs cancelled maximally
Quiver mutate_cycle(const Quiver& q, const CycleSpec& spec);

// Cycle vertices first (in cycle order), then the remaining vertices in q's order.
std::vector<std::string> cycle_first_order(const Quiver& q, const CycleSpec& spec);

struct ExchangeMatrixS {
    IntMatrix untwisted;  // [[-1, 0], [sum_i C_i sum_{j<=i} A^j, 1]]
    IntMatrix twisted;    // top-left block replaced by -A^{-1}
    std::vector<std::string> vertex_order;
};

ExchangeMatrixS build_exchange_matrix(const Quiver& q, const CycleSpec& spec);

// M' = S M S^t.
SkewMatrix palu_mutate(const SkewMatrix& m, const IntMatrix& s);

struct AppendixReport {
    bool mm_unchanged = false;      // M'_{m,m} = A - A^t
    bool cl2_bracket_zero = false;  // the C_{l-2} (...) C_{l-2}^t bracket vanishes
    bool low_index_sum_zero = false;  // the double sum over indices < l-2 vanishes
    bool fm_closed_form = false;    // M'_{f,m} matches its four-term closed form

    bool all() const { return mm_unchanged && cl2_bracket_zero && low_index_sum_zero && fm_closed_form; }
};

AppendixReport verify_appendix_identities(const Quiver& q, const CycleSpec& spec);

// BFS over FZ mutations with canonical-form dedup; returns a vertex sequence
// whose composite mutation lands in target's isomorphism class, if one exists
// within max_depth.
std::optional<std::vector<std::string>> find_fz_sequence(const Quiver& q, const Quiver& target, int max_depth);

}  // namespace qm
