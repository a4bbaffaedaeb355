#pragma once

#include <string>

#include <og/serialize.hpp>

namespace og {

// Graphviz rendering for kinds graph, cospan, two_cell, and rule; other
// kinds raise InvariantError. Cospans group the leg images into input and
// output clusters; cells stack the three apexes as top/middle/bottom
// clusters with dashed arrows for the structure maps. With role_coloring,
// nodes are tinted by boundary role: input, output, both, or internal.
std::string export_dot(const Document& d, bool role_coloring = false);

}  // namespace og
