#pragma once

#include <map>
#include <string>

#include "qm/quiver.hpp"

namespace qm {

// Quiver/potential document: {vertices:[...], arrows:[{id,source,target}...],
// potential:[{coeff,cycle:[...]}...]}. Field order is fixed and arrays are
// sorted by id, so serialization is byte-stable.
std::string to_json(const QuiverWithPotential& qp);
std::string to_json(const Quiver& q);

QuiverWithPotential quiver_from_json(const std::string& text);
QuiverWithPotential load_quiver_file(const std::string& path);
void save_quiver_file(const std::string& path, const QuiverWithPotential& qp);

}  // namespace qm
