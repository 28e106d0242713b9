#pragma once

#include <string>

#include "planar_monoid/surface.hpp"

namespace pm {

// Claimed equality lhs = rhs in the mapping class monoid.
struct Relation {
  std::string label;
  BoundaryWord lhs;
  TwistWord rhs;
  std::string note;
};

}  // namespace pm
