#include "qm/iso.hpp"

#include <algorithm>
#include <cstdint>

namespace qm {

namespace {

// Ordered partition of vertex indices; cell order is part of the canonical data.
using Cells = std::vector<std::vector<int>>;

std::vector<int> cell_of(const Cells& cells, int n) {
    std::vector<int> c(n, -1);
    for (size_t k = 0; k < cells.size(); ++k)
        for (int v : cells[k]) c[v] = static_cast<int>(k);
    return c;
}

// Split every cell by the multiset of (cell, multiplicity) pairs of out- and
// in-neighbors; repeats until stable. Splitting keeps cell order, with new
// sub-cells ordered by their key, so the refinement is isomorphism-invariant.
void refine(const IntMatrix& g, Cells& cells) {
    const int n = g.rows();
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> cell = cell_of(cells, n);
        Cells next;
        for (auto& c : cells) {
            if (c.size() == 1) {
                next.push_back(c);
                continue;
            }
            using Key = std::pair<std::vector<std::pair<int, long long>>, std::vector<std::pair<int, long long>>>;
            std::vector<std::pair<Key, int>> keyed;
            for (int v : c) {
                Key key;
                for (int w = 0; w < n; ++w) {
                    if (g.at(v, w) != 0) key.first.push_back({cell[w], g.at(v, w)});
                    if (g.at(w, v) != 0) key.second.push_back({cell[w], g.at(w, v)});
                }
                std::sort(key.first.begin(), key.first.end());
                std::sort(key.second.begin(), key.second.end());
                keyed.push_back({std::move(key), v});
            }
            std::stable_sort(keyed.begin(), keyed.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            std::vector<int> cur;
            for (size_t i = 0; i < keyed.size(); ++i) {
                if (i > 0 && keyed[i].first != keyed[i - 1].first) {
                    next.push_back(cur);
                    cur.clear();
                    changed = true;
                }
                cur.push_back(keyed[i].second);
            }
            next.push_back(cur);
        }
        for (auto& c : next) std::sort(c.begin(), c.end());
        cells = std::move(next);
    }
}

// Code bytes in "growing square" shells so that the first m placed vertices
// determine a prefix; that is what makes prefix pruning sound.
void append_shell(std::string& code, const IntMatrix& g, const std::vector<int>& order, int k) {
    auto put = [&code](long long v) {
        if (v < 0 || v > 0xFF) throw input_error("arrow multiplicity too large to canonicalize");
        code.push_back(static_cast<char>(v));
    };
    for (int j = 0; j <= k; ++j) put(g.at(order[k], order[j]));
    for (int i = 0; i < k; ++i) put(g.at(order[i], order[k]));
}

struct Search {
    const IntMatrix& g;
    int n;
    std::string best;
    std::vector<int> best_order;
    bool have_best = false;

    void run(Cells cells) {
        refine(g, cells);
        // encode the leading singleton block and prune against the best code
        std::vector<int> prefix;
        for (const auto& c : cells) {
            if (c.size() != 1) break;
            prefix.push_back(c[0]);
        }
        std::string partial;
        for (size_t k = 0; k < prefix.size(); ++k) append_shell(partial, g, prefix, static_cast<int>(k));
        if (have_best) {
            std::string best_prefix = best.substr(0, partial.size());
            if (partial > best_prefix) return;
        }
        if (static_cast<int>(prefix.size()) == n) {
            if (!have_best || partial < best) {
                best = partial;
                best_order = prefix;
                have_best = true;
            }
            return;
        }
        size_t split = 0;
        while (cells[split].size() == 1) ++split;
        for (int v : cells[split]) {
            Cells child;
            for (size_t k = 0; k < split; ++k) child.push_back(cells[k]);
            child.push_back({v});
            std::vector<int> rest;
            for (int w : cells[split])
                if (w != v) rest.push_back(w);
            child.push_back(rest);
            for (size_t k = split + 1; k < cells.size(); ++k) child.push_back(cells[k]);
            run(std::move(child));
        }
    }
};

}  // namespace

CanonicalLabeling canonical_labeling(const IntMatrix& counts) {
    const int n = counts.rows();
    if (n == 0) return {{}, std::string()};
    // initial cells by (out-degree, in-degree, loop count)
    std::vector<std::pair<std::tuple<long long, long long, long long>, int>> keyed;
    for (int v = 0; v < n; ++v) {
        long long outd = 0, ind = 0;
        for (int w = 0; w < n; ++w) {
            outd += counts.at(v, w);
            ind += counts.at(w, v);
        }
        keyed.push_back({{outd, ind, counts.at(v, v)}, v});
    }
    std::sort(keyed.begin(), keyed.end());
    Cells cells;
    for (size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) cells.push_back({});
        cells.back().push_back(keyed[i].second);
    }
    Search s{counts, n, {}, {}, false};
    s.run(std::move(cells));
    std::string code = std::to_string(n);
    code.push_back(':');
    code += s.best;
    return {s.best_order, code};
}

std::string canonical_form(const Quiver& q) { return canonical_labeling(q.adjacency()).code; }

std::optional<std::map<std::string, std::string>> is_isomorphic(const Quiver& a, const Quiver& b) {
    if (a.vertices().size() != b.vertices().size() || a.arrows().size() != b.arrows().size()) return std::nullopt;
    CanonicalLabeling ca = canonical_labeling(a.adjacency());
    CanonicalLabeling cb = canonical_labeling(b.adjacency());
    if (ca.code != cb.code) return std::nullopt;
    std::map<std::string, std::string> phi;
    for (size_t k = 0; k < ca.order.size(); ++k) phi[a.vertices()[ca.order[k]]] = b.vertices()[cb.order[k]];
    return phi;
}

}  // namespace qm
