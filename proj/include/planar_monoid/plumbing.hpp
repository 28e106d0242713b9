#pragma once

#include <string>
#include <utility>
#include <vector>

#include "planar_monoid/surface.hpp"

namespace pm {

struct PlumbingVertex {
  int id = 0;
  int weight = 0;  // self-intersection number
  friend bool operator==(const PlumbingVertex&, const PlumbingVertex&) = default;
};

struct PlumbingGraph {
  std::vector<PlumbingVertex> vertices;
  std::vector<std::pair<int, int>> edges;  // (smaller id, larger id), sorted
  friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;
};

// Star with centre -n and, for each a_i >= 2, a chain of a_i - 1 vertices of
// weight -2. The centre has id 0; chains follow in label order.
PlumbingGraph plumbing_of(const BoundaryWord& w);

// 2 - n + number of twists.
int euler_characteristic(const TwistWord& w);
int euler_characteristic(const BoundaryWord& w);

// Closed forms for the two sides of daisy(n, i).
std::pair<int, int> chi_formulas(int n, int i);

struct BoundsReport {
  int n = 0;
  int min_twists = 0;
  int max_twists = 0;
  int min_chi = 0;
  int max_chi = 0;
  friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

BoundsReport bounds(int n);

enum class GraphFormat { dot, json };

std::string emit(const PlumbingGraph& g, GraphFormat format);
PlumbingGraph parse_plumbing_json(const std::string& text);

}  // namespace pm
