#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qm/quiver.hpp"

namespace qm::cat {

enum class Family { A3n3, Dnll, E82 };

std::string family_name(Family f);

// Quiver of a cluster-tilted algebra of type A together with its designated
// connecting vertex (at most two incident arrows; on a 3-cycle if exactly two).
struct TypeAAttachment {
    Quiver quiver;
    std::string connecting_vertex;
};

struct CatalogEntry {
    Family family;
    int n = 0;                // A3n3 and Dnll subscript parameter
    int q = 0;                // Dnll central cycle length
    int ell = 0;              // Dnll covering order
    std::vector<int> stars;   // Dnll starred positions (1-based)
    char letter = 0;          // E82 item
    QuiverWithPotential qp;
};

bool is_connecting_vertex(const Quiver& type_a_quiver, const std::string& v);

// Recognition by exhaustive search over polygon triangulations (every
// cluster-tilted type-A quiver arises from one).
bool is_type_a_ct_quiver(const Quiver& q);

// Loop glued onto the attachment at its connecting vertex; potential is the
// loop cubed plus the attachment's minimal cycles.
CatalogEntry gen_a3n3(const TypeAAttachment& attachment);

// Central oriented q-cycle raised to the ell-th power in the potential, one
// triangle through a star vertex per starred position, type-A attachments glued
// at the stars. Requires ell >= 2, n*ell >= 4, and a star when q = 1.
CatalogEntry gen_dnll(int q, int ell, const std::set<int>& stars,
                      const std::map<int, TypeAAttachment>& attachments = {});

// The seven 4-vertex quivers with potential. Edges drawn without arrowheads in
// the source figure stand for either orientation; the generator emits one
// representative and e82_letter_variants lists the whole orientation family.
CatalogEntry gen_e82(char letter);

std::vector<Quiver> e82_letter_variants(char letter);

// Which letter's orientation family a quiver belongs to, if any.
std::optional<char> match_e82_letter(const Quiver& q);

// 7 nodes a..g, 11 edges.
std::vector<std::pair<char, char>> e82_mutation_graph();

struct Descriptor {
    Family family = Family::A3n3;
    int n = 0;
    int q = 0;
    int ell = 0;  // 0 when the input does not determine it
    int star_count = 0;
    char letter = 0;
};

// Structural matcher over the three families. The covering order of a Dnll
// member is a potential-level datum, so it is only reported when a potential is
// supplied; loop-free 2-cycle-free quivers (which could equally be
// cluster-tilted) are classified only when the potential pins them down.
std::optional<Descriptor> classify(const Quiver& q, const std::optional<Potential>& potential = std::nullopt);

}  // namespace qm::cat
