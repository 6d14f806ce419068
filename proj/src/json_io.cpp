#include "qm/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qm {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json quiver_to_ordered_json(const QuiverWithPotential& qp) {
    ordered_json j;
    std::vector<std::string> vs = qp.quiver.vertices();
    std::sort(vs.begin(), vs.end());
    j["vertices"] = vs;

    std::vector<Arrow> as = qp.quiver.arrows();
    std::sort(as.begin(), as.end(), [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
    ordered_json arrows = ordered_json::array();
    for (const Arrow& a : as) {
        ordered_json ja;
        ja["id"] = a.id;
        ja["source"] = a.source;
        ja["target"] = a.target;
        arrows.push_back(std::move(ja));
    }
    j["arrows"] = std::move(arrows);

    std::vector<PotentialTerm> terms = qp.potential.terms();
    std::sort(terms.begin(), terms.end(),
              [](const PotentialTerm& a, const PotentialTerm& b) { return a.cycle < b.cycle; });
    ordered_json pot = ordered_json::array();
    for (const PotentialTerm& t : terms) {
        ordered_json jt;
        jt["coeff"] = t.coeff;
        jt["cycle"] = t.cycle;
        pot.push_back(std::move(jt));
    }
    j["potential"] = std::move(pot);
    return j;
}

void require_keys(const ordered_json& j, const std::vector<std::string>& allowed) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            throw input_error("unexpected field in quiver document: " + it.key());
}

}  // namespace

std::string to_json(const QuiverWithPotential& qp) { return quiver_to_ordered_json(qp).dump(2) + "\n"; }

std::string to_json(const Quiver& q) { return to_json(QuiverWithPotential{q, Potential{}}); }

QuiverWithPotential quiver_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw input_error("quiver document must be a JSON object");
    require_keys(j, {"vertices", "arrows", "potential"});
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw input_error("quiver document needs a \"vertices\" array");
    if (!j.contains("arrows") || !j["arrows"].is_array())
        throw input_error("quiver document needs an \"arrows\" array");

    std::vector<std::string> vertices;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw input_error("vertex ids must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<Arrow> arrows;
    for (const auto& a : j["arrows"]) {
        if (!a.is_object() || !a.contains("id") || !a.contains("source") || !a.contains("target") ||
            !a["id"].is_string() || !a["source"].is_string() || !a["target"].is_string())
            throw input_error("each arrow needs string fields id, source, target");
        arrows.push_back({a["id"].get<std::string>(), a["source"].get<std::string>(), a["target"].get<std::string>()});
    }
    Quiver q(std::move(vertices), std::move(arrows));

    std::vector<PotentialTerm> terms;
    if (j.contains("potential")) {
        if (!j["potential"].is_array()) throw input_error("\"potential\" must be an array");
        for (const auto& t : j["potential"]) {
            if (!t.is_object() || !t.contains("coeff") || !t.contains("cycle") || !t["coeff"].is_number_integer() ||
                !t["cycle"].is_array())
                throw input_error("each potential term needs integer coeff and a cycle array");
            PotentialTerm term;
            term.coeff = t["coeff"].get<long long>();
            for (const auto& id : t["cycle"]) {
                if (!id.is_string()) throw input_error("potential cycles are arrays of arrow ids");
                term.cycle.push_back(id.get<std::string>());
            }
            terms.push_back(std::move(term));
        }
    }
    QuiverWithPotential qp{std::move(q), Potential(std::move(terms))};
    qp.validate();
    return qp;
}

QuiverWithPotential load_quiver_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return quiver_from_json(ss.str());
}

void save_quiver_file(const std::string& path, const QuiverWithPotential& qp) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write file: " + path);
    out << to_json(qp);
}

}  // namespace qm
