#include "qm/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qm/iso.hpp"

namespace qm {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out += "\"";
    return out;
}

}  // namespace

std::string render_dot(const Quiver& q, bool canonical) {
    std::map<std::string, std::string> name;
    std::vector<std::string> order = q.vertices();
    if (canonical) {
        CanonicalLabeling lab = canonical_labeling(q.adjacency());
        for (size_t k = 0; k < lab.order.size(); ++k) name[q.vertices()[lab.order[k]]] = "v" + std::to_string(k);
        order.clear();
        for (size_t k = 0; k < lab.order.size(); ++k) order.push_back(q.vertices()[lab.order[k]]);
    } else {
        for (const std::string& v : q.vertices()) name[v] = v;
        std::sort(order.begin(), order.end());
    }

    std::ostringstream os;
    os << "digraph quiver {\n";
    for (const std::string& v : order) os << "  " << quote(name[v]) << ";\n";
    std::vector<const Arrow*> arrows;
    for (const Arrow& a : q.arrows()) arrows.push_back(&a);
    std::sort(arrows.begin(), arrows.end(), [&](const Arrow* a, const Arrow* b) {
        return std::tie(name[a->source], name[a->target], a->id) < std::tie(name[b->source], name[b->target], b->id);
    });
    for (const Arrow* a : arrows)
        os << "  " << quote(name[a->source]) << " -> " << quote(name[a->target]) << " [label=" << quote(a->id)
           << "];\n";
    os << "}\n";
    return os.str();
}

}  // namespace qm
