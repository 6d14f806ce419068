#include "qm/catalog.hpp"

#include <algorithm>

#include "qm/iso.hpp"
#include "qm/triangulation.hpp"

namespace qm::cat {

std::string family_name(Family f) {
    switch (f) {
        case Family::A3n3: return "A3n3";
        case Family::Dnll: return "Dnll";
        case Family::E82: return "E82";
    }
    return "?";
}

bool is_connecting_vertex(const Quiver& q, const std::string& v) {
    int deg = 0;
    for (const Arrow& a : q.arrows()) deg += (a.source == v) + (a.target == v);
    if (deg > 2) return false;
    if (deg < 2) return true;
    // with two incident arrows the vertex must lie on a 3-cycle
    for (const Arrow& a : q.arrows()) {
        if (a.source != v) continue;
        for (const Arrow& b : q.arrows()) {
            if (b.source != a.target) continue;
            for (const Arrow& c : q.arrows())
                if (c.source == b.target && c.target == v) return true;
        }
    }
    return false;
}

bool is_type_a_ct_quiver(const Quiver& q) {
    static std::map<std::string, bool> memo;
    static std::map<int, std::vector<std::string>> forms_by_size;  // canonical forms per vertex count
    const int n = static_cast<int>(q.vertices().size());
    if (n == 0) return false;
    std::string code = canonical_form(q);
    auto it = memo.find(code);
    if (it != memo.end()) return it->second;
    if (!forms_by_size.count(n)) {
        std::vector<std::string> forms;
        for (const auto& t : tri::enumerate_triangulations(n + 3)) forms.push_back(canonical_form(tri::triangulation_to_quiver(t)));
        std::sort(forms.begin(), forms.end());
        forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
        forms_by_size[n] = std::move(forms);
    }
    const auto& forms = forms_by_size[n];
    bool ok = std::binary_search(forms.begin(), forms.end(), code);
    memo[code] = ok;
    return ok;
}

namespace {

void validate_attachment(const TypeAAttachment& att) {
    if (!att.quiver.has_vertex(att.connecting_vertex))
        throw input_error("connecting vertex " + att.connecting_vertex + " is not in the attachment");
    if (!is_connecting_vertex(att.quiver, att.connecting_vertex))
        throw input_error("vertex " + att.connecting_vertex + " is not a connecting vertex");
    if (!is_type_a_ct_quiver(att.quiver))
        throw input_error("attachment is not the quiver of a cluster-tilted algebra of type A");
}

}  // namespace

CatalogEntry gen_a3n3(const TypeAAttachment& attachment) {
    validate_attachment(attachment);
    std::vector<std::string> vs = attachment.quiver.vertices();
    std::vector<Arrow> as = attachment.quiver.arrows();
    std::string loop_id = "alpha";
    int k = 2;
    while (attachment.quiver.has_arrow_id(loop_id)) loop_id = "alpha#" + std::to_string(k++);
    as.push_back({loop_id, attachment.connecting_vertex, attachment.connecting_vertex});
    Quiver q(vs, as);

    std::vector<PotentialTerm> terms{{1, {loop_id, loop_id, loop_id}}};
    for (const Path& c : minimal_cycles(attachment.quiver)) terms.push_back({1, c});

    CatalogEntry e;
    e.family = Family::A3n3;
    e.n = static_cast<int>(vs.size());
    e.qp = {std::move(q), Potential(std::move(terms))};
    return e;
}

CatalogEntry gen_dnll(int q, int ell, const std::set<int>& stars, const std::map<int, TypeAAttachment>& attachments) {
    if (q < 1) throw input_error("central cycle length must be at least 1");
    if (ell < 2) throw input_error("covering order ell must be at least 2 (ell = 1 is a cluster category)");
    if (q == 1 && stars.empty()) throw input_error("q = 1 requires at least one connecting vertex");
    for (int s : stars)
        if (s < 1 || s > q) throw input_error("star index out of range");
    for (const auto& [s, att] : attachments) {
        if (!stars.count(s)) throw input_error("attachment at an un-starred position " + std::to_string(s));
        validate_attachment(att);
    }

    std::vector<std::string> vs;
    std::vector<Arrow> as;
    for (int i = 1; i <= q; ++i) vs.push_back("c" + std::to_string(i));
    std::vector<std::string> alpha_ids;
    for (int i = 1; i <= q; ++i) {
        std::string id = "alpha_" + std::to_string(i);
        alpha_ids.push_back(id);
        as.push_back({id, "c" + std::to_string(i), "c" + std::to_string(i % q + 1)});
    }
    int n = q;
    std::vector<PotentialTerm> terms;
    {
        Path power;
        for (int e = 0; e < ell; ++e) power.insert(power.end(), alpha_ids.begin(), alpha_ids.end());
        terms.push_back({1, power});
    }
    for (int s : stars) {
        // star triangle alpha_s beta_s gamma_s through the attachment's connecting vertex
        TypeAAttachment att;
        if (attachments.count(s)) {
            att = attachments.at(s);
        } else {
            att.quiver = Quiver({"x"}, {});
            att.connecting_vertex = "x";
        }
        std::string prefix = "s" + std::to_string(s) + ".";
        std::string star_vertex = prefix + att.connecting_vertex;
        for (const std::string& v : att.quiver.vertices()) vs.push_back(prefix + v);
        for (const Arrow& a : att.quiver.arrows()) as.push_back({prefix + a.id, prefix + a.source, prefix + a.target});
        std::string beta = "beta_" + std::to_string(s), gamma = "gamma_" + std::to_string(s);
        as.push_back({beta, "c" + std::to_string(s % q + 1), star_vertex});
        as.push_back({gamma, star_vertex, "c" + std::to_string(s)});
        terms.push_back({1, {alpha_ids[s - 1], beta, gamma}});
        for (const Path& c : minimal_cycles(att.quiver)) {
            Path pc;
            for (const auto& id : c) pc.push_back(prefix + id);
            terms.push_back({1, pc});
        }
        n += static_cast<int>(att.quiver.vertices().size());
    }
    if (n * ell < 4) throw input_error("family requires n*ell >= 4");

    CatalogEntry e;
    e.family = Family::Dnll;
    e.n = n;
    e.q = q;
    e.ell = ell;
    e.stars.assign(stars.begin(), stars.end());
    e.qp = {Quiver(std::move(vs), std::move(as)), Potential(std::move(terms))};
    return e;
}

// ---------------------------------------------------------------------------
// E_{8,2} items.

namespace {

struct PendantEdge {
    std::string id, a, b;  // representative orientation a -> b
};

struct LetterShape {
    std::vector<Arrow> fixed;
    std::vector<PendantEdge> pendants;
    std::vector<PotentialTerm> potential;  // in terms of the fixed arrows
};

LetterShape letter_shape(char letter) {
    // vertices "1".."4" throughout
    switch (letter) {
        case 'a':
            return {{{"alpha", "2", "3"}, {"beta", "3", "2"}},
                    {{"p", "1", "2"}, {"q", "3", "4"}},
                    {{1, {"alpha", "beta", "alpha", "beta"}}}};
        case 'b':
            return {{{"alpha", "2", "3"}, {"beta", "3", "2"}, {"gamma", "3", "4"}, {"delta", "4", "2"}},
                    {{"p", "1", "2"}},
                    {{1, {"alpha", "beta", "alpha", "beta"}}, {1, {"alpha", "gamma", "delta"}}}};
        case 'c':
            return {{{"alpha", "2", "3"}, {"gamma", "3", "4"}, {"delta", "4", "2"}},
                    {{"p", "1", "2"}},
                    {{1, {"alpha", "gamma", "delta", "alpha", "gamma", "delta"}}}};
        case 'd':
            return {{{"alpha", "2", "3"}, {"beta", "3", "2"}, {"gamma", "3", "4"}, {"delta", "4", "2"}},
                    {{"p", "1", "3"}},
                    {{1, {"alpha", "beta", "alpha", "beta"}}, {1, {"alpha", "gamma", "delta"}}}};
        case 'e':
            return {{{"alpha", "1", "2"},
                     {"beta", "2", "1"},
                     {"gamma", "3", "2"},
                     {"delta", "3", "4"},
                     {"rho", "1", "3"},
                     {"epsilon", "4", "1"}},
                    {},
                    {{1, {"alpha", "beta", "alpha", "beta"}},
                     {1, {"rho", "gamma", "beta"}},
                     {1, {"rho", "delta", "epsilon"}}}};
        case 'f':
            return {{{"alpha", "1", "2"},
                     {"beta", "2", "1"},
                     {"gamma", "2", "3"},
                     {"delta", "4", "3"},
                     {"rho", "3", "1"},
                     {"epsilon", "1", "4"}},
                    {},
                    {{1, {"rho", "alpha", "gamma"}},
                     {1, {"alpha", "beta", "alpha", "beta"}},
                     {1, {"rho", "epsilon", "delta"}}}};
        case 'g':
            return {{{"alpha", "1", "2"},
                     {"beta", "2", "1"},
                     {"gamma", "2", "3"},
                     {"delta", "3", "4"},
                     {"epsilon", "4", "1"}},
                    {},
                    {{1, {"alpha", "beta", "alpha", "beta"}}, {1, {"alpha", "gamma", "delta", "epsilon"}}}};
        default:
            throw input_error(std::string("unknown E82 item: ") + letter);
    }
}

Quiver letter_quiver(const LetterShape& shape, unsigned orientation_mask) {
    std::vector<Arrow> as = shape.fixed;
    for (size_t i = 0; i < shape.pendants.size(); ++i) {
        const PendantEdge& p = shape.pendants[i];
        if (orientation_mask & (1u << i))
            as.push_back({p.id, p.b, p.a});
        else
            as.push_back({p.id, p.a, p.b});
    }
    return Quiver({"1", "2", "3", "4"}, std::move(as));
}

}  // namespace

CatalogEntry gen_e82(char letter) {
    LetterShape shape = letter_shape(letter);
    CatalogEntry e;
    e.family = Family::E82;
    e.letter = letter;
    e.n = 4;
    e.qp = {letter_quiver(shape, 0), Potential(shape.potential)};
    e.qp.validate();
    return e;
}

std::vector<Quiver> e82_letter_variants(char letter) {
    LetterShape shape = letter_shape(letter);
    std::vector<Quiver> out;
    for (unsigned mask = 0; mask < (1u << shape.pendants.size()); ++mask) out.push_back(letter_quiver(shape, mask));
    return out;
}

std::optional<char> match_e82_letter(const Quiver& q) {
    if (q.vertices().size() != 4) return std::nullopt;
    static std::map<std::string, char> table;
    if (table.empty()) {
        for (char letter : {'a', 'b', 'c', 'd', 'e', 'f', 'g'})
            for (const Quiver& v : e82_letter_variants(letter)) table[canonical_form(v)] = letter;
    }
    auto it = table.find(canonical_form(q));
    if (it == table.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<char, char>> e82_mutation_graph() {
    return {{'a', 'b'}, {'a', 'd'}, {'b', 'c'}, {'c', 'd'}, {'f', 'g'}, {'g', 'e'},
            {'b', 'f'}, {'d', 'e'}, {'f', 'c'}, {'c', 'e'}, {'b', 'd'}};
}

// ---------------------------------------------------------------------------
// Structural classification.

namespace {

std::vector<std::string> loop_vertices(const Quiver& q) {
    std::vector<std::string> out;
    for (const std::string& v : q.vertices())
        if (q.has_loop_at(v)) out.push_back(v);
    return out;
}

// attachment component reachable from star (in the underlying graph) without
// passing through the given blocked vertices
std::optional<Quiver> hanging_component(const Quiver& q, const std::string& star,
                                        const std::set<std::string>& blocked,
                                        const std::set<std::string>& skip_arrows) {
    std::set<std::string> comp{star};
    std::vector<std::string> stack{star};
    while (!stack.empty()) {
        std::string v = stack.back();
        stack.pop_back();
        for (const Arrow& a : q.arrows()) {
            if (skip_arrows.count(a.id)) continue;
            std::string other;
            if (a.source == v)
                other = a.target;
            else if (a.target == v)
                other = a.source;
            else
                continue;
            if (blocked.count(other)) return std::nullopt;  // attachment touches the core
            if (comp.insert(other).second) stack.push_back(other);
        }
    }
    std::vector<std::string> vs;
    for (const std::string& v : q.vertices())
        if (comp.count(v)) vs.push_back(v);
    std::vector<Arrow> as;
    for (const Arrow& a : q.arrows())
        if (!skip_arrows.count(a.id) && comp.count(a.source) && comp.count(a.target)) as.push_back(a);
    return Quiver(std::move(vs), std::move(as));
}

// Try to read q as the Dnll member with the given central cycle. ell comes from
// the potential when available (exponent of the central term), else 0.
std::optional<Descriptor> match_dnll(const Quiver& q, const std::vector<std::string>& central,
                                     const std::optional<Potential>& potential) {
    const int qlen = static_cast<int>(central.size());
    std::map<std::string, int> pos;
    for (int i = 0; i < qlen; ++i) pos[central[i]] = i;

    // collect the cycle arrows and reject stray arrows among central vertices
    std::vector<std::string> alpha(qlen);
    std::set<std::string> core_arrows;
    for (const Arrow& a : q.arrows()) {
        bool sm = pos.count(a.source), tm = pos.count(a.target);
        if (!sm || !tm) continue;
        if ((pos[a.source] + 1) % qlen != pos[a.target] || !alpha[pos[a.source]].empty()) return std::nullopt;
        alpha[pos[a.source]] = a.id;
        core_arrows.insert(a.id);
    }
    for (int i = 0; i < qlen; ++i)
        if (alpha[i].empty()) return std::nullopt;

    // stars: for each cycle position, an optional triangle target(alpha_i) -> star -> source(alpha_i)
    std::set<std::string> star_vertices;
    std::vector<int> stars;
    std::set<std::string> used;
    for (int i = 0; i < qlen; ++i) {
        std::string from = central[(i + 1) % qlen], to = central[i];
        std::vector<const Arrow*> beta, gamma;
        for (const Arrow& a : q.arrows()) {
            if (pos.count(a.source) && !pos.count(a.target) && a.source == from) beta.push_back(&a);
            if (!pos.count(a.source) && pos.count(a.target) && a.target == to) gamma.push_back(&a);
        }
        // pick the (unique) star vertex w with beta: from -> w and gamma: w -> to
        std::string star;
        for (const Arrow* b : beta)
            for (const Arrow* g : gamma)
                if (b->target == g->source && !star_vertices.count(b->target)) {
                    if (!star.empty() && star != b->target) return std::nullopt;
                    star = b->target;
                    core_arrows.insert(b->id);
                    core_arrows.insert(g->id);
                }
        if (!star.empty()) {
            stars.push_back(i + 1);
            star_vertices.insert(star);
        }
    }
    (void)used;

    // every remaining arrow must belong to an attachment hanging at a star
    int n = qlen;
    std::set<std::string> blocked(central.begin(), central.end());
    std::set<std::string> claimed;
    for (const std::string& star : star_vertices) {
        auto comp = hanging_component(q, star, blocked, core_arrows);
        if (!comp) return std::nullopt;
        for (const std::string& v : comp->vertices()) {
            if (v != star && (star_vertices.count(v) || claimed.count(v))) return std::nullopt;
            claimed.insert(v);
        }
        if (!is_connecting_vertex(*comp, star) || !is_type_a_ct_quiver(*comp)) return std::nullopt;
        n += static_cast<int>(comp->vertices().size());
    }
    // no vertices outside central + attachments
    if (static_cast<size_t>(n) != q.vertices().size()) return std::nullopt;
    if (qlen == 1 && stars.empty()) return std::nullopt;

    int ell = 0;
    if (potential) {
        // central term: the cycle alpha_1..alpha_q repeated ell >= 2 times
        Path base(alpha.begin(), alpha.end());
        for (const PotentialTerm& t : potential->terms()) {
            if (t.cycle.size() % base.size() != 0 || t.cycle.size() < 2 * base.size()) continue;
            Path rep = Potential::rotate_min(t.cycle);
            Path expect;
            int reps = static_cast<int>(t.cycle.size() / base.size());
            for (int r = 0; r < reps; ++r) expect.insert(expect.end(), base.begin(), base.end());
            if (rep == Potential::rotate_min(expect)) {
                ell = reps;
                break;
            }
        }
        if (ell < 2) return std::nullopt;
        if (n * ell < 4) return std::nullopt;
    }

    Descriptor d;
    d.family = Family::Dnll;
    d.n = n;
    d.q = qlen;
    d.ell = ell;
    d.star_count = static_cast<int>(stars.size());
    return d;
}

}  // namespace

std::optional<Descriptor> classify(const Quiver& q, const std::optional<Potential>& potential) {
    std::vector<std::string> loops = loop_vertices(q);
    if (loops.size() > 1) return std::nullopt;

    if (loops.size() == 1) {
        const std::string& c = loops[0];
        if (q.count_arrows(c, c) != 1) return std::nullopt;
        if (q.has_two_cycle_at(c)) {
            // Dnll with q = 1: loop alpha at c, one star across the 2-cycle
            return match_dnll(q, {c}, potential);
        }
        // A3n3: the quiver minus the loop is a type-A attachment at c
        std::vector<Arrow> rest;
        std::string loop_id;
        for (const Arrow& a : q.arrows()) {
            if (a.source == c && a.target == c)
                loop_id = a.id;
            else
                rest.push_back(a);
        }
        Quiver att(q.vertices(), rest);
        if (!is_connecting_vertex(att, c) || !is_type_a_ct_quiver(att)) return std::nullopt;
        if (potential) {
            bool found = false;
            for (const PotentialTerm& t : potential->terms())
                if (t.cycle == Path{loop_id, loop_id, loop_id}) found = true;
            if (!found) return std::nullopt;
        }
        Descriptor d;
        d.family = Family::A3n3;
        d.n = static_cast<int>(q.vertices().size());
        return d;
    }

    if (auto letter = match_e82_letter(q)) {
        Descriptor d;
        d.family = Family::E82;
        d.letter = *letter;
        d.n = 4;
        return d;
    }

    // loop-free: Dnll needs a central cycle to hang onto
    std::vector<std::pair<std::string, std::string>> two_cycles;
    for (const std::string& u : q.vertices())
        for (const std::string& v : q.vertices())
            if (u < v && q.count_arrows(u, v) == 1 && q.count_arrows(v, u) == 1) two_cycles.push_back({u, v});
    if (two_cycles.size() == 1) {
        auto [u, v] = two_cycles[0];
        if (auto d = match_dnll(q, {u, v}, potential)) return d;
        return std::nullopt;
    }
    if (!two_cycles.empty()) return std::nullopt;

    // loop-free and 2-cycle-free: only a potential can distinguish the family
    // from a plain cluster-tilted algebra
    if (potential) {
        for (const PotentialTerm& t : potential->terms()) {
            // look for a repeated simple cycle (w)^ell
            for (size_t period = 1; period <= t.cycle.size() / 2; ++period) {
                if (t.cycle.size() % period != 0) continue;
                bool repeats = true;
                for (size_t i = period; i < t.cycle.size() && repeats; ++i)
                    repeats = t.cycle[i] == t.cycle[i % period];
                if (!repeats) continue;
                Path w(t.cycle.begin(), t.cycle.begin() + period);
                std::vector<std::string> central;
                for (const auto& id : w) central.push_back(q.arrow(id).source);
                if (auto d = match_dnll(q, central, potential)) return d;
            }
        }
    }
    return std::nullopt;
}

}  // namespace qm::cat
