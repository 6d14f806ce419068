#include "qm/covering.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "qm/cycle_mutation.hpp"

namespace qm::cover {

namespace {

std::string fiber_name(const std::string& base, int k) { return base + "_" + std::to_string(k + 1); }

int shift_of(const ShiftAssignment& shifts, const std::string& id, int ell) {
    auto it = shifts.find(id);
    if (it == shifts.end()) return 0;
    if (it->second < 0 || it->second >= ell)
        throw input_error("shift for arrow " + id + " is outside Z/" + std::to_string(ell));
    return it->second;
}

}  // namespace

CoveringMap build_cyclic_cover(const Quiver& base, int ell, const ShiftAssignment& shifts) {
    if (ell < 2) throw input_error("covering order must be at least 2");
    for (const auto& [id, s] : shifts) {
        base.arrow(id);  // must exist
        if (s < 0 || s >= ell) throw input_error("shift for arrow " + id + " is outside Z/" + std::to_string(ell));
    }
    for (const Arrow& a : base.arrows())
        if (a.source == a.target && shift_of(shifts, a.id, ell) == 0)
            throw input_error("loop " + a.id + " needs a nonzero shift (the cover may not have loops)");

    CoveringMap cm;
    cm.base = base;
    cm.ell = ell;
    std::vector<std::string> vs;
    for (int k = 0; k < ell; ++k)
        for (const std::string& v : base.vertices()) {
            std::string name = fiber_name(v, k);
            vs.push_back(name);
            cm.vertex_proj[name] = v;
            cm.deck_vertex[name] = fiber_name(v, (k + 1) % ell);
        }
    std::vector<Arrow> as;
    for (int k = 0; k < ell; ++k)
        for (const Arrow& a : base.arrows()) {
            int s = shift_of(shifts, a.id, ell);
            std::string name = fiber_name(a.id, k);
            as.push_back({name, fiber_name(a.source, k), fiber_name(a.target, (k + s) % ell)});
            cm.arrow_proj[name] = a.id;
            cm.deck_arrow[name] = fiber_name(a.id, (k + 1) % ell);
        }
    cm.cover = Quiver(std::move(vs), std::move(as));
    return cm;
}

ShiftAssignment default_shifts(const Quiver& base) {
    ShiftAssignment s;
    for (const Arrow& a : base.arrows())
        if (a.source == a.target) s[a.id] = 1;
    return s;
}

std::optional<ShiftAssignment> solve_shifts(const QuiverWithPotential& base, int ell) {
    const Quiver& q = base.quiver;
    const int n_arrows = static_cast<int>(q.arrows().size());
    std::map<std::string, int> arrow_pos;
    for (int i = 0; i < n_arrows; ++i) arrow_pos[q.arrows()[i].id] = i;

    // gauge-fix a spanning forest of the underlying graph to shift 0 and
    // enumerate the remaining arrows
    std::map<std::string, int> comp;
    int ncomp = 0;
    for (const std::string& v : q.vertices()) comp[v] = ncomp++;
    std::vector<int> parent(ncomp);
    for (int i = 0; i < ncomp; ++i) parent[i] = i;
    std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    std::vector<int> free_arrows;
    for (int i = 0; i < n_arrows; ++i) {
        const Arrow& a = q.arrows()[i];
        int ra = root(comp[a.source]), rb = root(comp[a.target]);
        if (a.source != a.target && ra != rb)
            parent[ra] = rb;  // tree arrow, pinned to 0
        else
            free_arrows.push_back(i);
    }

    // 2-cycle pair fingerprints and potential-term incidence vectors
    std::vector<std::vector<int>> constraints_zero;  // sum of shifts == 0 (mod ell)
    for (const PotentialTerm& t : base.potential.terms()) {
        std::vector<int> inc(n_arrows, 0);
        for (const auto& id : t.cycle) inc[arrow_pos[id]] += 1;
        constraints_zero.push_back(std::move(inc));
    }
    std::vector<std::vector<int>> constraints_nonzero;  // sum of shifts != 0
    for (int i = 0; i < n_arrows; ++i) {
        const Arrow& a = q.arrows()[i];
        if (a.source == a.target) {
            std::vector<int> inc(n_arrows, 0);
            inc[i] = 1;
            constraints_nonzero.push_back(std::move(inc));
            continue;
        }
        for (int j = i + 1; j < n_arrows; ++j) {
            const Arrow& b = q.arrows()[j];
            if (b.source == a.target && b.target == a.source) {
                std::vector<int> inc(n_arrows, 0);
                inc[i] = 1;
                inc[j] = 1;
                constraints_nonzero.push_back(std::move(inc));
            }
        }
    }

    std::vector<int> shift(n_arrows, 0);
    const int nfree = static_cast<int>(free_arrows.size());
    if (nfree > 16) throw input_error("shift solving only supports up to 16 independent cycles");
    long long total = 1;
    for (int i = 0; i < nfree; ++i) total *= ell;
    for (long long mask = 0; mask < total; ++mask) {
        long long m = mask;
        for (int i = 0; i < nfree; ++i) {
            shift[free_arrows[i]] = static_cast<int>(m % ell);
            m /= ell;
        }
        bool ok = true;
        for (const auto& inc : constraints_zero) {
            int s = 0;
            for (int i = 0; i < n_arrows; ++i) s += inc[i] * shift[i];
            if (s % ell != 0) {
                ok = false;
                break;
            }
        }
        for (const auto& inc : constraints_nonzero) {
            if (!ok) break;
            int s = 0;
            for (int i = 0; i < n_arrows; ++i) s += inc[i] * shift[i];
            if (s % ell == 0) ok = false;
        }
        if (ok) {
            ShiftAssignment out;
            for (int i = 0; i < n_arrows; ++i)
                if (shift[i] != 0) out[q.arrows()[i].id] = shift[i];
            return out;
        }
    }
    return std::nullopt;
}

Potential lift_potential(const CoveringMap& cm, const Potential& base_potential) {
    // fiber coordinates: walking the deck generator from the first lift
    std::map<std::string, int> vcoord;
    for (const auto& [cv, bv] : cm.vertex_proj)
        if (!vcoord.count(cv)) {
            std::string cur = cv;
            // normalize so that each orbit is numbered from its lexicographically
            // smallest member; only relative coordinates matter below
            std::string start = cv;
            for (int k = 1; k < cm.ell; ++k) {
                cur = cm.deck_vertex.at(cur);
                if (cur < start) start = cur;
            }
            cur = start;
            for (int k = 0; k < cm.ell; ++k) {
                vcoord[cur] = k;
                cur = cm.deck_vertex.at(cur);
            }
        }
    std::map<std::string, std::map<int, std::string>> lifts;  // base arrow -> source coordinate -> cover arrow
    for (const auto& [cid, bid] : cm.arrow_proj) lifts[bid][vcoord.at(cm.cover.arrow(cid).source)] = cid;

    // a term lifts once per starting fiber; coinciding lifts (a term that winds
    // a short cycle) collapse to a single upstairs term
    std::set<Path> seen;
    std::vector<PotentialTerm> terms;
    for (const PotentialTerm& t : base_potential.terms()) {
        for (int k0 = 0; k0 < cm.ell; ++k0) {
            Path lifted;
            int k = k0;
            for (const auto& bid : t.cycle) {
                std::string cid = lifts.at(bid).at(k);
                lifted.push_back(cid);
                k = vcoord.at(cm.cover.arrow(cid).target);
            }
            if (k != k0)
                throw input_error("potential term does not lift to a cycle (nonzero voltage); fix the shifts");
            check_composable(cm.cover, lifted);
            Path norm = Potential::rotate_min(lifted);
            if (seen.insert(norm).second) terms.push_back({t.coeff, norm});
        }
    }
    return Potential(std::move(terms));
}

Quiver quotient_by_deck(const Quiver& q, const std::map<std::string, std::string>& deck_vertex, int ell,
                        const std::map<std::string, std::string>& orbit_name) {
    // fiber coordinates relative to the first orbit representative in vertex order
    std::map<std::string, int> coord;
    std::map<std::string, std::string> rep;
    for (const std::string& v : q.vertices()) {
        if (coord.count(v)) continue;
        std::string cur = v;
        for (int k = 0; k < ell; ++k) {
            if (coord.count(cur)) throw input_error("deck action is not free on vertices");
            coord[cur] = k;
            rep[cur] = v;
            cur = deck_vertex.at(cur);
        }
        if (cur != v) throw input_error("deck action does not have order " + std::to_string(ell));
    }

    // signature (orbit u, orbit w, displacement) -> per-coordinate arrow count
    std::map<std::tuple<std::string, std::string, int>, std::map<int, std::vector<std::string>>> sig;
    for (const Arrow& a : q.arrows()) {
        int d = (coord.at(a.target) - coord.at(a.source) + ell) % ell;
        sig[{rep.at(a.source), rep.at(a.target), d}][coord.at(a.source)].push_back(a.id);
    }
    std::vector<Arrow> base_arrows;
    std::set<std::string> taken;
    for (auto& [key, per_k] : sig) {
        size_t count = per_k.begin()->second.size();
        if (per_k.size() != static_cast<size_t>(ell)) throw input_error("quiver is not deck-invariant");
        for (auto& [k, ids] : per_k) {
            if (ids.size() != count) throw input_error("quiver is not deck-invariant");
            std::sort(ids.begin(), ids.end());
        }
        const auto& [ru, rw, displacement] = key;
        (void)displacement;
        for (size_t i = 0; i < count; ++i) {
            std::string id = per_k.begin()->second[i];
            std::string base_id = "p(" + id + ")";
            int suffix = 2;
            while (taken.count(base_id)) base_id = "p(" + id + ")#" + std::to_string(suffix++);
            taken.insert(base_id);
            base_arrows.push_back({base_id, orbit_name.at(ru), orbit_name.at(rw)});
        }
    }
    std::vector<std::string> base_vertices;
    std::set<std::string> seen_orbit;
    for (const std::string& v : q.vertices()) {
        const std::string& name = orbit_name.at(rep.at(v));
        if (seen_orbit.insert(name).second) base_vertices.push_back(name);
    }
    return Quiver(std::move(base_vertices), std::move(base_arrows));
}

Quiver project(const CoveringMap& cm, const Quiver& q) {
    std::set<std::string> cover_vs(cm.cover.vertices().begin(), cm.cover.vertices().end());
    std::set<std::string> q_vs(q.vertices().begin(), q.vertices().end());
    if (cover_vs != q_vs) throw input_error("projected quiver must live on the cover's vertices");
    return quotient_by_deck(q, cm.deck_vertex, cm.ell, cm.vertex_proj);
}

Quiver mutate_at_vertex_via_cover(const QuiverWithPotential& base, const std::string& v, int ell,
                                  const ShiftAssignment& shifts, const std::optional<CoverAnnotations>& annotations) {
    const Quiver& bq = base.quiver;
    if (!bq.has_vertex(v)) throw input_error("unknown vertex: " + v);
    if (!bq.has_loop_at(v) && !bq.has_two_cycle_at(v)) return fz_mutate_quiver(bq, v);

    CoveringMap cm = build_cyclic_cover(bq, ell, shifts);
    std::vector<std::string> fiber;
    for (const std::string& cv : cm.cover.vertices())
        if (cm.vertex_proj.at(cv) == v) fiber.push_back(cv);
    std::set<std::string> fiber_set(fiber.begin(), fiber.end());

    std::vector<Arrow> induced;
    for (const Arrow& a : cm.cover.arrows())
        if (fiber_set.count(a.source) && fiber_set.count(a.target)) induced.push_back(a);

    Quiver mutated = cm.cover;
    if (induced.empty()) {
        // pure 2-cycle case: the fiber is isolated, FZ at every fiber vertex in any order
        for (const std::string& fv : fiber) mutated = fz_mutate_quiver(mutated, fv);
    } else {
        // loop case: the fiber must decompose into oriented cycles of length >= 3
        std::map<std::string, std::string> next;
        std::map<std::string, int> indeg;
        for (const Arrow& a : induced) {
            if (next.count(a.source)) throw unsupported_mutation("fiber of " + v + " is not a union of cycles");
            next[a.source] = a.target;
            indeg[a.target] += 1;
        }
        for (const std::string& fv : fiber)
            if (!next.count(fv) || indeg[fv] != 1)
                throw unsupported_mutation("fiber of " + v + " is neither isolated nor a union of cycles");

        std::vector<std::vector<std::string>> cycles;
        std::set<std::string> used;
        for (const std::string& fv : fiber) {
            if (used.count(fv)) continue;
            std::vector<std::string> cyc;
            std::string cur = fv;
            do {
                cyc.push_back(cur);
                used.insert(cur);
                cur = next.at(cur);
            } while (cur != fv);
            if (cyc.size() < 3) throw unsupported_mutation("fiber cycle of length " + std::to_string(cyc.size()) +
                                                           " at " + v + " is unsupported");
            cycles.push_back(std::move(cyc));
        }

        Potential cover_pot =
            base.potential.empty() ? sum_of_minimal_cycles_potential(cm.cover) : lift_potential(cm, base.potential);
        std::vector<CycleSpec> specs;
        for (const auto& cyc : cycles) {
            if (annotations) {
                CycleSpec spec;
                spec.cycle = cyc;
                Bipartition bp = classify_bipartition(cm.cover, cyc);
                for (const Arrow& a : bp.fm) {
                    auto it = annotations->c_index.find(a.id);
                    if (it == annotations->c_index.end()) throw input_error("annotation misses arrow " + a.id);
                    spec.c_index[a.id] = it->second;
                }
                for (const Arrow& a : bp.mf) {
                    auto it = annotations->b_index.find(a.id);
                    if (it == annotations->b_index.end()) throw input_error("annotation misses arrow " + a.id);
                    spec.b_index[a.id] = it->second;
                }
                specs.push_back(std::move(spec));
            } else {
                specs.push_back(derive_cb_indices({cm.cover, cover_pot}, cyc));
            }
        }
        for (const CycleSpec& spec : specs) mutated = mutate_cycle(mutated, spec);
    }
    return project(cm, mutated);
}

std::optional<CoverPreset> shipped_preset(const std::string& name) {
    if (name == "a9-3") return CoverPreset{3, {{"alpha", 1}}};
    if (name == "d6-3") return CoverPreset{3, {{"alpha", 1}, {"beta", 2}}};
    return std::nullopt;
}

}  // namespace qm::cover
