#include "qm/quiver.hpp"

#include <algorithm>
#include <sstream>

namespace qm {

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        os << "[";
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    for (size_t i = 0; i < vertices_.size(); ++i) {
        if (!vertex_index_.emplace(vertices_[i], static_cast<int>(i)).second)
            throw input_error("duplicate vertex id: " + vertices_[i]);
    }
    for (size_t i = 0; i < arrows_.size(); ++i) {
        const Arrow& a = arrows_[i];
        if (!arrow_index_.emplace(a.id, static_cast<int>(i)).second)
            throw input_error("duplicate arrow id: " + a.id);
        if (!has_vertex(a.source)) throw input_error("arrow " + a.id + " has unknown source " + a.source);
        if (!has_vertex(a.target)) throw input_error("arrow " + a.id + " has unknown target " + a.target);
    }
}

int Quiver::vertex_index(const std::string& v) const {
    auto it = vertex_index_.find(v);
    if (it == vertex_index_.end()) throw input_error("unknown vertex: " + v);
    return it->second;
}

const Arrow& Quiver::arrow(const std::string& id) const {
    auto it = arrow_index_.find(id);
    if (it == arrow_index_.end()) throw input_error("unknown arrow: " + id);
    return arrows_[it->second];
}

int Quiver::count_arrows(const std::string& from, const std::string& to) const {
    int n = 0;
    for (const Arrow& a : arrows_)
        if (a.source == from && a.target == to) ++n;
    return n;
}

bool Quiver::has_two_cycle_at(const std::string& v) const {
    for (const Arrow& a : arrows_)
        if (a.source == v && a.target != v && count_arrows(a.target, v) > 0) return true;
    return false;
}

std::vector<const Arrow*> Quiver::arrows_from(const std::string& v) const {
    std::vector<const Arrow*> out;
    for (const Arrow& a : arrows_)
        if (a.source == v) out.push_back(&a);
    return out;
}

std::vector<const Arrow*> Quiver::arrows_into(const std::string& v) const {
    std::vector<const Arrow*> out;
    for (const Arrow& a : arrows_)
        if (a.target == v) out.push_back(&a);
    return out;
}

IntMatrix Quiver::adjacency(const std::vector<std::string>& order) const {
    if (order.size() != vertices_.size()) throw input_error("vertex order is not a permutation of the vertex set");
    std::map<std::string, int> pos;
    for (size_t i = 0; i < order.size(); ++i) {
        if (!has_vertex(order[i]) || !pos.emplace(order[i], static_cast<int>(i)).second)
            throw input_error("vertex order is not a permutation of the vertex set");
    }
    IntMatrix m(static_cast<int>(order.size()), static_cast<int>(order.size()));
    for (const Arrow& a : arrows_) m.at(pos[a.source], pos[a.target]) += 1;
    return m;
}

Path Potential::rotate_min(const Path& cycle) {
    if (cycle.empty()) return cycle;
    Path best = cycle;
    Path cur = cycle;
    for (size_t i = 1; i < cycle.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

Potential::Potential(std::vector<PotentialTerm> terms) {
    std::map<Path, long long> acc;
    for (auto& t : terms) {
        if (t.cycle.empty()) throw input_error("potential term with empty cycle");
        acc[rotate_min(t.cycle)] += t.coeff;
    }
    for (auto& [cyc, c] : acc)
        if (c != 0) terms_.push_back({c, cyc});
}

void QuiverWithPotential::validate() const {
    for (const auto& t : potential.terms()) {
        for (const auto& id : t.cycle)
            if (!quiver.has_arrow_id(id)) throw input_error("potential references unknown arrow: " + id);
        if (path_target(quiver, t.cycle) != path_source(quiver, t.cycle))
            throw input_error("potential term is not a cycle");
    }
}

SkewMatrix::SkewMatrix(IntMatrix m) : m_(std::move(m)) {
    if (!m_.is_skew_symmetric()) throw input_error("matrix is not skew-symmetric");
}

SkewMatrix skew_matrix(const Quiver& q, const std::vector<std::string>& vertex_order) {
    IntMatrix adj = q.adjacency(vertex_order);
    return SkewMatrix(adj - adj.transpose());
}

SkewMatrix skew_matrix(const Quiver& q) { return skew_matrix(q, q.vertices()); }

SkewMatrix fz_mutate_matrix(const SkewMatrix& m, int ell) {
    const int n = m.size();
    if (ell < 0 || ell >= n) throw input_error("mutation index out of range");
    IntMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == ell || j == ell) {
                r.at(i, j) = -m.at(i, j);
            } else {
                long long qil = m.at(i, ell), qlj = m.at(ell, j);
                r.at(i, j) = m.at(i, j) + (std::llabs(qil) * qlj + qil * std::llabs(qlj)) / 2;
            }
        }
    return SkewMatrix(std::move(r));
}

namespace {

std::string fresh_id(const Quiver& q, const std::set<std::string>& taken, std::string base) {
    std::string id = base;
    int k = 2;
    while (q.has_arrow_id(id) || taken.count(id)) id = base + "#" + std::to_string(k++);
    return id;
}

}  // namespace

Quiver fz_mutate_quiver(const Quiver& q, const std::string& v) {
    if (!q.has_vertex(v)) throw input_error("unknown vertex: " + v);
    if (q.has_loop_at(v))
        throw unsupported_mutation("vertex " + v + " lies on a loop; use the covering module (mutate-covered)");
    if (q.has_two_cycle_at(v))
        throw unsupported_mutation("vertex " + v + " lies on a 2-cycle; use the covering module (mutate-covered)");

    std::vector<Arrow> kept;
    std::vector<Arrow> composites;
    std::set<std::string> taken;

    for (const Arrow& a : q.arrows()) {
        if (a.source == v || a.target == v) continue;
        kept.push_back(a);
    }
    // Composite arrows i -> j for every path i -> v -> j.
    for (const Arrow* in : q.arrows_into(v))
        for (const Arrow* out : q.arrows_from(v)) {
            std::string id = fresh_id(q, taken, "[" + in->id + "*" + out->id + "]");
            taken.insert(id);
            composites.push_back({id, in->source, out->target});
        }
    // Arrows at v get reversed.
    std::vector<Arrow> reversed;
    for (const Arrow& a : q.arrows()) {
        if (a.source != v && a.target != v) continue;
        std::string id = fresh_id(q, taken, a.id + "^t");
        taken.insert(id);
        reversed.push_back({id, a.target, a.source});
    }

    // Cancel 2-cycles created by the composites. Pairs of preexisting arrows away
    // from v are left alone: they were part of the input, not of this mutation.
    auto lex_sort = [](std::vector<Arrow>& v_) {
        std::sort(v_.begin(), v_.end(), [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
    };
    lex_sort(composites);
    std::set<std::string> removed;
    for (const Arrow& c : composites) {
        if (removed.count(c.id)) continue;
        // candidate opposites: first unused composites, then kept arrows, lex order
        std::vector<const Arrow*> opposite;
        for (const Arrow& d : composites)
            if (!removed.count(d.id) && d.id != c.id && d.source == c.target && d.target == c.source)
                opposite.push_back(&d);
        std::vector<const Arrow*> old_opposite;
        for (const Arrow& d : kept)
            if (!removed.count(d.id) && d.source == c.target && d.target == c.source) old_opposite.push_back(&d);
        std::sort(old_opposite.begin(), old_opposite.end(),
                  [](const Arrow* a, const Arrow* b) { return a->id < b->id; });
        for (const Arrow* o : old_opposite) opposite.push_back(o);
        if (!opposite.empty()) {
            removed.insert(c.id);
            removed.insert(opposite.front()->id);
        }
    }

    std::vector<Arrow> out_arrows;
    for (const Arrow& a : kept)
        if (!removed.count(a.id)) out_arrows.push_back(a);
    for (const Arrow& a : composites)
        if (!removed.count(a.id)) out_arrows.push_back(a);
    for (const Arrow& a : reversed) out_arrows.push_back(a);
    return Quiver(q.vertices(), std::move(out_arrows));
}

namespace {

// DFS over simple cycles; each cycle is reported once, rooted at its smallest vertex index.
void cycle_search(const Quiver& q, int root, std::vector<int>& vertex_stack, std::vector<std::string>& arrow_stack,
                  std::vector<Path>& out) {
    int cur = vertex_stack.back();
    const std::string& cur_name = q.vertices()[cur];
    for (const Arrow* a : q.arrows_from(cur_name)) {
        int tgt = q.vertex_index(a->target);
        if (tgt == root) {
            arrow_stack.push_back(a->id);
            out.push_back(arrow_stack);
            arrow_stack.pop_back();
            continue;
        }
        if (tgt < root) continue;  // cycles are rooted at their minimal vertex
        if (std::find(vertex_stack.begin(), vertex_stack.end(), tgt) != vertex_stack.end()) continue;
        vertex_stack.push_back(tgt);
        arrow_stack.push_back(a->id);
        cycle_search(q, root, vertex_stack, arrow_stack, out);
        arrow_stack.pop_back();
        vertex_stack.pop_back();
    }
}

}  // namespace

std::vector<Path> minimal_cycles(const Quiver& q) {
    std::vector<Path> cycles;
    for (int root = 0; root < static_cast<int>(q.vertices().size()); ++root) {
        std::vector<int> vs{root};
        std::vector<std::string> as;
        cycle_search(q, root, vs, as, cycles);
    }
    std::vector<Path> out;
    for (const Path& c : cycles) {
        // chord test: any non-loop arrow between cycle vertices must be one of the
        // cycle's own arrows; loops at the vertices do not disqualify a longer cycle
        std::set<std::string> cycle_vertices;
        std::set<std::string> cycle_arrows(c.begin(), c.end());
        for (const auto& id : c) cycle_vertices.insert(q.arrow(id).source);
        bool minimal = true;
        for (const Arrow& a : q.arrows()) {
            if (cycle_arrows.count(a.id)) continue;
            if (!cycle_vertices.count(a.source) || !cycle_vertices.count(a.target)) continue;
            if (a.source == a.target && c.size() >= 2) continue;
            minimal = false;
            break;
        }
        if (minimal) out.push_back(Potential::rotate_min(c));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Potential sum_of_minimal_cycles_potential(const Quiver& q) {
    std::vector<PotentialTerm> terms;
    for (const Path& c : minimal_cycles(q)) terms.push_back({1, c});
    return Potential(std::move(terms));
}

std::vector<PathSumTerm> cyclic_derivative(const Potential& p, const std::string& arrow_id) {
    std::map<Path, long long> acc;
    for (const PotentialTerm& t : p.terms()) {
        for (size_t i = 0; i < t.cycle.size(); ++i) {
            if (t.cycle[i] != arrow_id) continue;
            // c = x p y with p at position i; contribute y x
            Path yx(t.cycle.begin() + i + 1, t.cycle.end());
            yx.insert(yx.end(), t.cycle.begin(), t.cycle.begin() + i);
            acc[yx] += t.coeff;
        }
    }
    std::vector<PathSumTerm> out;
    for (auto& [path, c] : acc)
        if (c != 0) out.push_back({c, path});
    return out;
}

void check_composable(const Quiver& q, const Path& p) {
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (q.arrow(p[i]).target != q.arrow(p[i + 1]).source)
            throw input_error("path is not composable at " + p[i] + " -> " + p[i + 1]);
}

std::string path_source(const Quiver& q, const Path& p) {
    if (p.empty()) throw input_error("empty path has no source");
    check_composable(q, p);
    return q.arrow(p.front()).source;
}

std::string path_target(const Quiver& q, const Path& p) {
    if (p.empty()) throw input_error("empty path has no target");
    check_composable(q, p);
    return q.arrow(p.back()).target;
}

}  // namespace qm
