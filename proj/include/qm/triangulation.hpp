#pragma once

#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qm/quiver.hpp"

namespace qm::tri {

using Diagonal = std::pair<int, int>;  // endpoints, stored with first < second

// Triangulation of a convex ngon with vertices 0..ngon-1 labeled clockwise.
struct Triangulation {
    int ngon = 0;
    std::set<Diagonal> diagonals;

    friend bool operator==(const Triangulation& a, const Triangulation& b) {
        return a.ngon == b.ngon && a.diagonals == b.diagonals;
    }
    friend bool operator<(const Triangulation& a, const Triangulation& b) {
        return std::tie(a.ngon, a.diagonals) < std::tie(b.ngon, b.diagonals);
    }
};

Triangulation make_triangulation(int ngon, const std::vector<Diagonal>& diagonals);
bool diagonals_cross(int ngon, Diagonal a, Diagonal b);

// One quiver vertex per diagonal ("a-b"); an arrow d -> e whenever d and e bound
// a common triangle and e is the clockwise successor side of d within it.
Quiver triangulation_to_quiver(const Triangulation& t);

// Replace d by the other diagonal of its quadrilateral.
Triangulation flip(const Triangulation& t, Diagonal d);

std::vector<Triangulation> enumerate_triangulations(int ngon);

// Triangulations of the (3n+3)-gon fixed by the rotation k -> k + n + 1.
std::vector<Triangulation> g_invariant_triangulations(int n);

// Orbit quotient of a g-invariant triangulation's quiver: the central-triangle
// orbit becomes a loop at the connecting vertex, the potential is the loop cubed
// plus the minimal cycles of the rest.
QuiverWithPotential quotient_quiver(const Triangulation& t);

std::string diagonal_name(Diagonal d);
Diagonal parse_diagonal(const std::string& text);

}  // namespace qm::tri
