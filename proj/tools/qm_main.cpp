#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qm/catalog.hpp"
#include "qm/covering.hpp"
#include "qm/cycle_mutation.hpp"
#include "qm/explore.hpp"
#include "qm/fixtures.hpp"
#include "qm/iso.hpp"
#include "qm/json_io.hpp"
#include "qm/render.hpp"
#include "qm/triangulation.hpp"
#include "qm/verify.hpp"

namespace {

// exit codes: 0 success, 1 input error, 2 unsupported mutation configuration,
// 3 verification failure
constexpr int kExitInput = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitVerify = 3;

int default_depth() {
    if (const char* env = std::getenv("QM_MAX_DEPTH")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            throw qm::input_error("QM_MAX_DEPTH must be an integer");
        }
    }
    return 8;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw qm::input_error("cannot write file: " + path);
    out << text;
}

qm::CycleSpec load_cycle_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qm::input_error("cannot open file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw qm::input_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("cycle") || !j["cycle"].is_array())
        throw qm::input_error("cycle spec needs a \"cycle\" array");
    qm::CycleSpec spec;
    for (const auto& v : j["cycle"]) spec.cycle.push_back(v.get<std::string>());
    for (const char* key : {"c_index", "b_index"}) {
        if (!j.contains(key)) continue;
        if (!j[key].is_object()) throw qm::input_error(std::string(key) + " must be an object");
        for (auto it = j[key].begin(); it != j[key].end(); ++it) {
            if (std::string(key) == "c_index")
                spec.c_index[it.key()] = it.value().get<int>();
            else
                spec.b_index[it.key()] = it.value().get<int>();
        }
    }
    return spec;
}

qm::cover::CoverPreset load_preset(const std::string& name_or_path) {
    if (auto preset = qm::cover::shipped_preset(name_or_path)) return *preset;
    std::ifstream in(name_or_path);
    if (!in) throw qm::input_error("unknown preset and unreadable file: " + name_or_path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw qm::input_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("ell") || !j["ell"].is_number_integer())
        throw qm::input_error("cover preset needs an integer \"ell\"");
    qm::cover::CoverPreset p;
    p.ell = j["ell"].get<int>();
    if (j.contains("shifts")) {
        if (!j["shifts"].is_object()) throw qm::input_error("\"shifts\" must be an object");
        for (auto it = j["shifts"].begin(); it != j["shifts"].end(); ++it)
            p.shifts[it.key()] = it.value().get<int>();
    }
    return p;
}

qm::cat::TypeAAttachment load_attachment(const std::string& spec) {
    // FILE:VERTEX
    auto colon = spec.rfind(':');
    if (colon == std::string::npos) throw qm::input_error("attachment must look like file.json:vertex");
    qm::cat::TypeAAttachment att;
    att.quiver = qm::load_quiver_file(spec.substr(0, colon)).quiver;
    att.connecting_vertex = spec.substr(colon + 1);
    return att;
}

int run(int argc, char** argv) {
    CLI::App app{"quiver mutation for 2-CY tilted algebras"};
    app.require_subcommand(1);

    // mutate
    auto* mutate = app.add_subcommand("mutate", "FZ mutation at a vertex");
    std::string in_file, out_file, vertex;
    mutate->add_option("input", in_file, "quiver JSON file")->required();
    mutate->add_option("-v,--vertex", vertex, "vertex to mutate at")->required();
    mutate->add_option("-o,--output", out_file, "output file (default stdout)");

    // mutate-cycle
    auto* mcycle = app.add_subcommand("mutate-cycle", "mutation at an oriented cycle");
    std::string mc_in, mc_out, mc_spec, mc_cycle;
    mcycle->add_option("input", mc_in, "quiver JSON file")->required();
    mcycle->add_option("--spec", mc_spec, "CycleSpec JSON file");
    mcycle->add_option("--cycle", mc_cycle, "comma-separated cycle vertices (annotation derived from the potential)");
    mcycle->add_option("-o,--output", mc_out, "output file (default stdout)");

    // mutate-covered
    auto* mcov = app.add_subcommand("mutate-covered", "mutation at a loop or 2-cycle vertex via a cyclic cover");
    std::string cov_in, cov_out, cov_vertex, cov_preset;
    int cov_ell = 0;
    mcov->add_option("input", cov_in, "quiver JSON file")->required();
    mcov->add_option("-v,--vertex", cov_vertex, "vertex to mutate at")->required();
    mcov->add_option("--cover-preset", cov_preset, "shipped preset (a9-3, d6-3) or a preset JSON file");
    mcov->add_option("--ell", cov_ell, "covering order (shifts solved from the potential)");
    mcov->add_option("-o,--output", cov_out, "output file (default stdout)");

    // explore
    auto* explore = app.add_subcommand("explore", "BFS over the mutation class up to isomorphism");
    std::string ex_in, ex_dot;
    int ex_depth = -1;
    explore->add_option("input", ex_in, "quiver JSON file")->required();
    explore->add_option("--max-depth", ex_depth, "BFS depth (default QM_MAX_DEPTH or 8)");
    explore->add_option("--dot", ex_dot, "write the exchange graph as DOT");

    // catalog
    auto* catalog = app.add_subcommand("catalog", "finite-type catalog generators");
    auto* cat_list = catalog->add_subcommand("list", "list families and items");
    auto* cat_gen = catalog->add_subcommand("gen", "generate a catalog member");
    std::string gen_family, gen_letter, gen_att, gen_out;
    int gen_q = 0, gen_ell = 0;
    std::string gen_stars;
    std::vector<std::string> gen_attachments;
    cat_gen->add_option("family", gen_family, "a3n3 | dnll | e82")->required();
    cat_gen->add_option("letter", gen_letter, "e82 item letter (a..g)");
    cat_gen->add_option("--attachment", gen_att, "a3n3 attachment as file.json:vertex");
    cat_gen->add_option("--q", gen_q, "dnll central cycle length");
    cat_gen->add_option("--ell", gen_ell, "dnll covering order");
    cat_gen->add_option("--stars", gen_stars, "dnll star positions, e.g. 1,3");
    cat_gen->add_option("--attach", gen_attachments, "dnll attachment as POS=file.json:vertex");
    cat_gen->add_option("-o,--output", gen_out, "output file (default stdout)");
    auto* cat_classify = catalog->add_subcommand("classify", "identify a quiver's catalog family");
    std::string cls_in;
    cat_classify->add_option("input", cls_in, "quiver JSON file")->required();
    catalog->require_subcommand(1);

    // tri
    auto* tri_cmd = app.add_subcommand("tri", "polygon triangulations");
    auto* tri_quiver = tri_cmd->add_subcommand("quiver", "quiver of a triangulation");
    int tq_ngon = 0;
    std::string tq_diagonals, tq_format = "json", tq_out;
    tri_quiver->add_option("--ngon", tq_ngon, "polygon size")->required();
    tri_quiver->add_option("--diagonals", tq_diagonals, "comma-separated, e.g. 0-2,2-4")->required();
    tri_quiver->add_option("--format", tq_format, "json | dot");
    tri_quiver->add_option("-o,--output", tq_out, "output file (default stdout)");
    auto* tri_inv = tri_cmd->add_subcommand("invariant", "rotation-invariant triangulations of the (3n+3)-gon");
    int ti_n = 0;
    bool ti_quotient = false;
    tri_inv->add_option("--n", ti_n, "parameter n")->required();
    tri_inv->add_flag("--quotient", ti_quotient, "also print each orbit quotient quiver");
    tri_cmd->require_subcommand(1);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verification suites");
    std::string suite, fixture;
    int max_ngon = 8;
    verify_cmd->add_option("suite", suite, "appendix | palu | e82-closure | flips")->required();
    verify_cmd->add_option("--fixture", fixture, "restrict appendix/palu to one fixture (a9, ppA6, d6-cover)");
    verify_cmd->add_option("--max-ngon", max_ngon, "flips: largest polygon (default 8)");

    // render
    auto* render = app.add_subcommand("render", "render a quiver as DOT or normalized JSON");
    std::string r_in, r_format = "dot", r_out;
    bool r_canonical = false;
    render->add_option("input", r_in, "quiver JSON file")->required();
    render->add_option("--format", r_format, "dot | json");
    render->add_flag("--canonical", r_canonical, "stable canonical vertex naming");
    render->add_option("-o,--output", r_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    if (mutate->parsed()) {
        qm::QuiverWithPotential qp = qm::load_quiver_file(in_file);
        qm::Quiver mutated = qm::fz_mutate_quiver(qp.quiver, vertex);
        write_output(out_file, qm::to_json(mutated));
        return 0;
    }

    if (mcycle->parsed()) {
        qm::QuiverWithPotential qp = qm::load_quiver_file(mc_in);
        qm::CycleSpec spec;
        if (!mc_spec.empty()) {
            spec = load_cycle_spec(mc_spec);
        } else if (!mc_cycle.empty()) {
            std::vector<std::string> cycle;
            std::stringstream ss(mc_cycle);
            std::string item;
            while (std::getline(ss, item, ',')) cycle.push_back(item);
            qm::Potential pot =
                qp.potential.empty() ? qm::sum_of_minimal_cycles_potential(qp.quiver) : qp.potential;
            spec = qm::derive_cb_indices({qp.quiver, pot}, cycle);
        } else {
            throw qm::input_error("mutate-cycle needs --spec or --cycle");
        }
        write_output(mc_out, qm::to_json(qm::mutate_cycle(qp.quiver, spec)));
        return 0;
    }

    if (mcov->parsed()) {
        qm::QuiverWithPotential qp = qm::load_quiver_file(cov_in);
        qm::cover::CoverPreset preset;
        if (!cov_preset.empty()) {
            preset = load_preset(cov_preset);
        } else if (cov_ell >= 2) {
            preset.ell = cov_ell;
            qm::QuiverWithPotential solved = qp;
            if (solved.potential.empty()) solved.potential = qm::sum_of_minimal_cycles_potential(qp.quiver);
            auto shifts = qm::cover::solve_shifts(solved, cov_ell);
            if (!shifts)
                throw qm::unsupported_mutation("no voltage assignment fits the potential; supply --cover-preset");
            preset.shifts = *shifts;
        } else {
            throw qm::input_error("mutate-covered needs --cover-preset or --ell");
        }
        qm::Quiver mutated = qm::cover::mutate_at_vertex_via_cover(qp, cov_vertex, preset.ell, preset.shifts);
        write_output(cov_out, qm::to_json(mutated));
        return 0;
    }

    if (explore->parsed()) {
        qm::QuiverWithPotential qp = qm::load_quiver_file(ex_in);
        int depth = ex_depth > 0 ? ex_depth : default_depth();
        qm::ExploreResult res = qm::explore_mutation_class(qp.quiver, depth);
        for (size_t d = 0; d < res.new_classes_per_depth.size(); ++d)
            std::cout << "depth " << d << ": " << res.new_classes_per_depth[d] << " new class(es)\n";
        std::cout << "total: " << res.total_classes << " isomorphism class(es) within depth " << depth << "\n";
        if (!ex_dot.empty()) {
            std::ostringstream os;
            os << "graph exchange {\n";
            for (int i = 0; i < res.total_classes; ++i) os << "  c" << i << ";\n";
            for (auto [x, y] : res.edges) os << "  c" << x << " -- c" << y << ";\n";
            os << "}\n";
            write_output(ex_dot, os.str());
        }
        return 0;
    }

    if (catalog->parsed()) {
        if (cat_list->parsed()) {
            std::cout << "a3n3  loop on a type-A connecting vertex (parameter: attachment)\n";
            std::cout << "dnll  central q-cycle with ell-th power potential (parameters: q, ell, stars, attachments)\n";
            std::cout << "e82   items a b c d e f g\n";
            return 0;
        }
        if (cat_gen->parsed()) {
            qm::cat::CatalogEntry entry;
            if (gen_family == "e82") {
                if (gen_letter.size() != 1) throw qm::input_error("catalog gen e82 needs a letter a..g");
                entry = qm::cat::gen_e82(gen_letter[0]);
            } else if (gen_family == "a3n3") {
                qm::cat::TypeAAttachment att;
                if (gen_att.empty()) {
                    att.quiver = qm::Quiver({"x"}, {});
                    att.connecting_vertex = "x";
                } else {
                    att = load_attachment(gen_att);
                }
                entry = qm::cat::gen_a3n3(att);
            } else if (gen_family == "dnll") {
                if (gen_q < 1 || gen_ell < 2) throw qm::input_error("catalog gen dnll needs --q and --ell");
                std::set<int> stars;
                if (!gen_stars.empty()) {
                    std::stringstream ss(gen_stars);
                    std::string item;
                    while (std::getline(ss, item, ',')) stars.insert(std::stoi(item));
                }
                std::map<int, qm::cat::TypeAAttachment> atts;
                for (const std::string& spec : gen_attachments) {
                    auto eq = spec.find('=');
                    if (eq == std::string::npos) throw qm::input_error("--attach must look like POS=file.json:vertex");
                    atts[std::stoi(spec.substr(0, eq))] = load_attachment(spec.substr(eq + 1));
                }
                entry = qm::cat::gen_dnll(gen_q, gen_ell, stars, atts);
            } else {
                throw qm::input_error("unknown family: " + gen_family);
            }
            write_output(gen_out, qm::to_json(entry.qp));
            return 0;
        }
        if (cat_classify->parsed()) {
            qm::QuiverWithPotential qp = qm::load_quiver_file(cls_in);
            std::optional<qm::Potential> pot;
            if (!qp.potential.empty()) pot = qp.potential;
            auto d = qm::cat::classify(qp.quiver, pot);
            if (!d) {
                std::cout << "no catalog family matches\n";
                return 0;
            }
            std::cout << "family: " << qm::cat::family_name(d->family) << "\n";
            if (d->family == qm::cat::Family::E82) {
                std::cout << "letter: " << d->letter << "\n";
            } else {
                std::cout << "n: " << d->n << "\n";
                if (d->family == qm::cat::Family::Dnll) {
                    std::cout << "q: " << d->q << "\nstars: " << d->star_count << "\n";
                    if (d->ell) std::cout << "ell: " << d->ell << "\n";
                }
            }
            return 0;
        }
    }

    if (tri_cmd->parsed()) {
        if (tri_quiver->parsed()) {
            std::vector<qm::tri::Diagonal> ds;
            std::stringstream ss(tq_diagonals);
            std::string item;
            while (std::getline(ss, item, ',')) ds.push_back(qm::tri::parse_diagonal(item));
            qm::tri::Triangulation t = qm::tri::make_triangulation(tq_ngon, ds);
            qm::Quiver q = qm::tri::triangulation_to_quiver(t);
            if (tq_format == "dot")
                write_output(tq_out, qm::render_dot(q));
            else if (tq_format == "json")
                write_output(tq_out, qm::to_json(q));
            else
                throw qm::input_error("unknown format: " + tq_format);
            return 0;
        }
        if (tri_inv->parsed()) {
            auto ts = qm::tri::g_invariant_triangulations(ti_n);
            for (const auto& t : ts) {
                std::string line;
                for (const auto& d : t.diagonals) {
                    if (!line.empty()) line += ",";
                    line += qm::tri::diagonal_name(d);
                }
                std::cout << line << "\n";
                if (ti_quotient) std::cout << qm::to_json(qm::tri::quotient_quiver(t));
            }
            std::cout << ts.size() << " invariant triangulation(s)\n";
            return 0;
        }
    }

    if (verify_cmd->parsed()) {
        std::vector<qm::verify::CheckResult> results;
        if ((suite == "appendix" || suite == "palu") && !fixture.empty()) {
            results = suite == "appendix" ? qm::verify::appendix_suite(fixture) : qm::verify::palu_suite(fixture);
        } else {
            results = qm::verify::run_suite(suite, max_ngon);
        }
        bool ok = true;
        for (const auto& r : results) {
            std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
            if (!r.passed && !r.detail.empty()) std::cout << " -- " << r.detail;
            std::cout << "\n";
            ok = ok && r.passed;
        }
        return ok ? 0 : kExitVerify;
    }

    if (render->parsed()) {
        qm::QuiverWithPotential qp = qm::load_quiver_file(r_in);
        if (r_format == "dot")
            write_output(r_out, qm::render_dot(qp.quiver, r_canonical));
        else if (r_format == "json")
            write_output(r_out, qm::to_json(qp));
        else
            throw qm::input_error("unknown format: " + r_format);
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qm::unsupported_mutation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const qm::undecidable_annotation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const qm::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
