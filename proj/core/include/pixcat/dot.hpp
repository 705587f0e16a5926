#pragma once

#include "pixcat/auslander.hpp"
#include "pixcat/skeleton.hpp"

#include <string>

namespace pixcat {

// Vertices labeled by their pixel intervals, solid edges for arrows,
// dotted edges for pruned superfluous arrows.
std::string skeleton_dot(const SkeletonQuiver& q);

// Vertex labels are the tuple coordinates; mesh diagonals dotted.
std::string aus_quiver_dot(const HigherAuslanderQuiver& q);

}  // namespace pixcat
