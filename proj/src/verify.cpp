#include "qm/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qm/catalog.hpp"
#include "qm/covering.hpp"
#include "qm/cycle_mutation.hpp"
#include "qm/fixtures.hpp"
#include "qm/iso.hpp"
#include "qm/triangulation.hpp"

namespace qm::verify {

namespace {

struct Fixture {
    QuiverWithPotential qp;
    CycleSpec spec;
};

Fixture fixture_by_name(const std::string& name) {
    if (name == "a9") return {fixtures::a9(), fixtures::a9_spec()};
    if (name == "ppA6") return {fixtures::pp_a6(), fixtures::pp_a6_spec()};
    if (name == "d6-cover") return {fixtures::d6_cover(), fixtures::d6_cover_spec()};
    throw input_error("unknown fixture: " + name + " (expected a9, ppA6 or d6-cover)");
}

}  // namespace

std::vector<CheckResult> appendix_suite(const std::string& name) {
    Fixture f = fixture_by_name(name);
    AppendixReport rep = verify_appendix_identities(f.qp.quiver, f.spec);
    return {
        {name + ": cycle block M'_mm = A - A^t", rep.mm_unchanged, ""},
        {name + ": C_{l-2} bracket vanishes", rep.cl2_bracket_zero, ""},
        {name + ": low-index double sum vanishes", rep.low_index_sum_zero, ""},
        {name + ": M'_fm closed form", rep.fm_closed_form, ""},
    };
}

std::vector<CheckResult> palu_suite(const std::string& name) {
    Fixture f = fixture_by_name(name);
    ExchangeMatrixS s = build_exchange_matrix(f.qp.quiver, f.spec);
    SkewMatrix m = skew_matrix(f.qp.quiver, s.vertex_order);
    SkewMatrix via_palu = palu_mutate(m, s.twisted);
    Quiver mutated = mutate_cycle(f.qp.quiver, f.spec);
    SkewMatrix via_quiver = skew_matrix(mutated, s.vertex_order);
    bool ok = via_palu == via_quiver;
    std::string detail;
    if (!ok) detail = "congruence:\n" + via_palu.matrix().to_string() + "\nquiver:\n" + via_quiver.matrix().to_string();
    return {{name + ": skew(mutate_cycle) = S M S^t", ok, detail}};
}

std::vector<CheckResult> e82_closure_suite() {
    std::vector<CheckResult> out;
    std::set<std::pair<char, char>> found;
    bool all_matched = true;
    std::string unmatched;

    for (char letter : {'a', 'b', 'c', 'd', 'e', 'f', 'g'}) {
        for (const Quiver& variant : cat::e82_letter_variants(letter)) {
            QuiverWithPotential qp{variant, cat::gen_e82(letter).qp.potential};
            for (const std::string& v : variant.vertices()) {
                Quiver mutated;
                if (variant.has_two_cycle_at(v)) {
                    auto shifts = cover::solve_shifts(qp, 2);
                    if (!shifts) {
                        all_matched = false;
                        unmatched += std::string(1, letter) + "@" + v + " (no cover shifts) ";
                        continue;
                    }
                    mutated = cover::mutate_at_vertex_via_cover(qp, v, 2, *shifts);
                } else {
                    mutated = fz_mutate_quiver(variant, v);
                }
                auto target = cat::match_e82_letter(mutated);
                if (!target) {
                    all_matched = false;
                    unmatched += std::string(1, letter) + "@" + v + " ";
                    continue;
                }
                if (*target != letter)
                    found.insert({std::min(letter, *target), std::max(letter, *target)});
            }
        }
    }

    std::set<std::pair<char, char>> expected;
    for (auto [x, y] : cat::e82_mutation_graph()) expected.insert({std::min(x, y), std::max(x, y)});

    out.push_back({"every mutation lands on a catalog item", all_matched, unmatched});
    std::ostringstream diff;
    for (auto& e : found)
        if (!expected.count(e)) diff << "extra " << e.first << "-" << e.second << " ";
    for (auto& e : expected)
        if (!found.count(e)) diff << "missing " << e.first << "-" << e.second << " ";
    out.push_back({"mutation adjacency has the expected 11 edges", found == expected, diff.str()});
    return out;
}

std::vector<CheckResult> flip_suite(int max_ngon) {
    int checked = 0;
    for (int ngon = 4; ngon <= max_ngon; ++ngon) {
        for (const tri::Triangulation& t : tri::enumerate_triangulations(ngon)) {
            Quiver q = tri::triangulation_to_quiver(t);
            for (const tri::Diagonal& d : t.diagonals) {
                Quiver flipped = tri::triangulation_to_quiver(tri::flip(t, d));
                Quiver mutated = fz_mutate_quiver(q, tri::diagonal_name(d));
                if (!is_isomorphic(flipped, mutated))
                    return {{"flip/mutation compatibility", false,
                             "mismatch at " + std::to_string(ngon) + "-gon, diagonal " + tri::diagonal_name(d)}};
                ++checked;
            }
        }
    }
    return {{"flip/mutation compatibility (" + std::to_string(checked) + " flips, n <= " + std::to_string(max_ngon) +
                 ")",
             true, ""}};
}

std::vector<std::string> suite_names() { return {"appendix", "palu", "e82-closure", "flips"}; }

std::vector<CheckResult> run_suite(const std::string& name, int max_ngon) {
    std::vector<CheckResult> out;
    if (name == "appendix") {
        for (const char* f : {"a9", "ppA6", "d6-cover"})
            for (auto& r : appendix_suite(f)) out.push_back(std::move(r));
        return out;
    }
    if (name == "palu") {
        for (const char* f : {"a9", "ppA6", "d6-cover"})
            for (auto& r : palu_suite(f)) out.push_back(std::move(r));
        return out;
    }
    if (name == "e82-closure") return e82_closure_suite();
    if (name == "flips") return flip_suite(max_ngon);
    throw input_error("unknown suite: " + name);
}

}  // namespace qm::verify
