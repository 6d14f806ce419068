#include "qm/triangulation.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

#include "qm/covering.hpp"

namespace qm::tri {

namespace {

Diagonal norm_pair(int a, int b) { return a < b ? Diagonal{a, b} : Diagonal{b, a}; }

bool is_side(int ngon, int a, int b) {
    int d = (b - a + ngon) % ngon;
    return d == 1 || d == ngon - 1;
}

}  // namespace

bool diagonals_cross(int ngon, Diagonal a, Diagonal b) {
    auto strictly_between = [ngon](int lo, int hi, int x) {
        // x strictly inside the clockwise arc lo -> hi
        int span = (hi - lo + ngon) % ngon;
        int off = (x - lo + ngon) % ngon;
        return off > 0 && off < span;
    };
    if (a == b) return false;
    int inside = strictly_between(a.first, a.second, b.first) + strictly_between(a.first, a.second, b.second);
    bool share = a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second;
    return !share && inside == 1;
}

Triangulation make_triangulation(int ngon, const std::vector<Diagonal>& diagonals) {
    if (ngon < 3) throw input_error("polygon needs at least 3 vertices");
    Triangulation t;
    t.ngon = ngon;
    for (Diagonal d : diagonals) {
        d = norm_pair(d.first, d.second);
        if (d.first < 0 || d.second >= ngon || d.first == d.second)
            throw input_error("diagonal endpoints out of range");
        if (is_side(ngon, d.first, d.second)) throw input_error("boundary edge is not a diagonal");
        if (!t.diagonals.insert(d).second) throw input_error("repeated diagonal");
    }
    if (static_cast<int>(t.diagonals.size()) != ngon - 3)
        throw input_error("a triangulation of an " + std::to_string(ngon) + "-gon has " + std::to_string(ngon - 3) +
                          " diagonals");
    for (const Diagonal& a : t.diagonals)
        for (const Diagonal& b : t.diagonals)
            if (diagonals_cross(ngon, a, b)) throw input_error("diagonals cross");
    return t;
}

std::string diagonal_name(Diagonal d) { return std::to_string(d.first) + "-" + std::to_string(d.second); }

Diagonal parse_diagonal(const std::string& text) {
    auto dash = text.find('-');
    if (dash == std::string::npos) throw input_error("diagonal must look like \"0-2\"");
    try {
        return norm_pair(std::stoi(text.substr(0, dash)), std::stoi(text.substr(dash + 1)));
    } catch (const std::exception&) {
        throw input_error("diagonal must look like \"0-2\"");
    }
}

namespace {

// all triangles of the triangulation, as vertex triples in cyclic order
std::vector<std::array<int, 3>> triangles_of(const Triangulation& t) {
    auto present = [&t](int a, int b) {
        return is_side(t.ngon, a, b) || t.diagonals.count(norm_pair(a, b)) != 0;
    };
    std::vector<std::array<int, 3>> out;
    for (int p = 0; p < t.ngon; ++p)
        for (int q = p + 1; q < t.ngon; ++q)
            for (int r = q + 1; r < t.ngon; ++r)
                if (present(p, q) && present(q, r) && present(p, r)) out.push_back({p, q, r});
    return out;
}

}  // namespace

Quiver triangulation_to_quiver(const Triangulation& t) {
    std::vector<std::string> vertices;
    for (const Diagonal& d : t.diagonals) vertices.push_back(diagonal_name(d));
    std::vector<Arrow> arrows;
    for (const auto& tri : triangles_of(t)) {
        // clockwise boundary p -> q -> r -> p; each side's clockwise successor
        std::array<Diagonal, 3> sides{norm_pair(tri[0], tri[1]), norm_pair(tri[1], tri[2]),
                                      norm_pair(tri[2], tri[0])};
        for (int i = 0; i < 3; ++i) {
            const Diagonal &d = sides[i], &e = sides[(i + 1) % 3];
            if (t.diagonals.count(d) && t.diagonals.count(e))
                arrows.push_back({diagonal_name(d) + ">" + diagonal_name(e), diagonal_name(d), diagonal_name(e)});
        }
    }
    return Quiver(std::move(vertices), std::move(arrows));
}

Triangulation flip(const Triangulation& t, Diagonal d) {
    d = norm_pair(d.first, d.second);
    if (!t.diagonals.count(d)) throw input_error("diagonal " + diagonal_name(d) + " is not in the triangulation");
    std::vector<int> apexes;
    for (const auto& tri : triangles_of(t)) {
        bool has = false;
        int other = -1;
        for (int i = 0; i < 3; ++i) {
            if (norm_pair(tri[i], tri[(i + 1) % 3]) == d)
                has = true;
        }
        if (!has) continue;
        for (int v : tri)
            if (v != d.first && v != d.second) other = v;
        apexes.push_back(other);
    }
    if (apexes.size() != 2) throw input_error("diagonal is not interior to a quadrilateral");
    Triangulation out = t;
    out.diagonals.erase(d);
    out.diagonals.insert(norm_pair(apexes[0], apexes[1]));
    return out;
}

std::vector<Triangulation> enumerate_triangulations(int ngon) {
    if (ngon < 3) throw input_error("polygon needs at least 3 vertices");
    std::vector<Triangulation> out;
    std::vector<Diagonal> acc;
    // recursive ear choice over the base edge of each region [lo..hi]
    std::function<void(int, int, std::function<void()>)> rec;
    rec = [&](int lo, int hi, std::function<void()> cont) {
        if (hi - lo < 2) {
            cont();
            return;
        }
        for (int k = lo + 1; k < hi; ++k) {
            size_t mark = acc.size();
            if (k - lo > 1) acc.push_back(norm_pair(lo, k));
            if (hi - k > 1) acc.push_back(norm_pair(k, hi));
            rec(lo, k, [&] { rec(k, hi, cont); });
            acc.resize(mark);
        }
    };
    rec(0, ngon - 1, [&] {
        Triangulation t;
        t.ngon = ngon;
        t.diagonals.insert(acc.begin(), acc.end());
        out.push_back(std::move(t));
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Triangulation> g_invariant_triangulations(int n) {
    if (n < 1) throw input_error("n must be at least 1");
    const int ngon = 3 * n + 3;
    const int rot = n + 1;
    std::vector<Triangulation> out;
    for (const Triangulation& t : enumerate_triangulations(ngon)) {
        bool invariant = true;
        for (const Diagonal& d : t.diagonals) {
            Diagonal image = norm_pair((d.first + rot) % ngon, (d.second + rot) % ngon);
            if (!t.diagonals.count(image)) {
                invariant = false;
                break;
            }
        }
        if (invariant) out.push_back(t);
    }
    return out;
}

QuiverWithPotential quotient_quiver(const Triangulation& t) {
    const int n = (t.ngon - 3) / 3;
    if (t.ngon != 3 * n + 3) throw input_error("quotient needs a (3n+3)-gon");
    const int rot = n + 1;
    for (const Diagonal& d : t.diagonals)
        if (!t.diagonals.count(norm_pair((d.first + rot) % t.ngon, (d.second + rot) % t.ngon)))
            throw input_error("triangulation is not rotation-invariant");

    Quiver r = triangulation_to_quiver(t);
    std::map<std::string, std::string> deck;
    std::map<std::string, std::string> orbit_name;
    for (const Diagonal& d : t.diagonals) {
        Diagonal image = norm_pair((d.first + rot) % t.ngon, (d.second + rot) % t.ngon);
        deck[diagonal_name(d)] = diagonal_name(image);
    }
    for (const Diagonal& d : t.diagonals) {
        // orbit representative: lexicographically smallest member name
        std::string best = diagonal_name(d), cur = diagonal_name(d);
        for (int k = 1; k < 3; ++k) {
            cur = deck.at(cur);
            best = std::min(best, cur);
        }
        orbit_name[diagonal_name(d)] = best;
    }
    Quiver base = cover::quotient_by_deck(r, deck, 3, orbit_name);

    // the central-triangle orbit is the unique loop vertex
    std::string loop_vertex, loop_arrow;
    int loops = 0;
    for (const Arrow& a : base.arrows())
        if (a.source == a.target) {
            ++loops;
            loop_vertex = a.source;
            loop_arrow = a.id;
        }
    if (loops != 1) throw input_error("quotient does not have exactly one loop");

    std::vector<Arrow> rest;
    for (const Arrow& a : base.arrows())
        if (a.source != a.target) rest.push_back(a);
    Quiver attachment(base.vertices(), rest);
    std::vector<PotentialTerm> terms{{1, {loop_arrow, loop_arrow, loop_arrow}}};
    for (const Path& c : minimal_cycles(attachment)) terms.push_back({1, c});
    return {base, Potential(std::move(terms))};
}

}  // namespace qm::tri
