#pragma once

#include <string>

#include "qm/quiver.hpp"

namespace qm {

// DOT digraph with arrow-id edge labels. With canonical = true, vertices are
// renamed v0..v{n-1} by canonical position so relabelings of the same quiver
// render byte-identically.
std::string render_dot(const Quiver& q, bool canonical = false);

}  // namespace qm
