#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "planar_monoid/relation.hpp"
#include "planar_monoid/surface.hpp"

namespace pm {

// A pair of points covered zero or several times by the blocks of a
// candidate design.
class PairCovered : public std::invalid_argument {
 public:
  PairCovered(int x, int y, int count);
  int x() const { return x_; }
  int y() const { return y_; }
  int count() const { return count_; }

 private:
  int x_, y_, count_;
};

// Linear space on points 1..m: every pair of points lies in exactly one
// block, and every block has 2..m-1 points. Blocks are kept sorted and in
// lexicographic order, so equal designs compare equal.
class Design {
 public:
  Design(int m, std::vector<std::vector<int>> blocks);

  int points() const { return m_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }

  friend bool operator==(const Design&, const Design&) = default;
  friend auto operator<=>(const Design&, const Design&) = default;

 private:
  int m_;
  std::vector<std::vector<int>> blocks_;
};

using ReplicationVector = std::vector<int>;

enum class SymmetryMode { labeled, dihedral, symmetric };

SymmetryMode parse_symmetry(const std::string& name);
const char* to_string(SymmetryMode mode);

Design from_rhs(const TwistWord& word);
ReplicationVector replication(const Design& d);
BoundaryWord exponents_from_design(const Design& d);

// Relabelings in the group: images[p-1] is the new label of point p.
std::vector<std::vector<int>> symmetry_group(int m, SymmetryMode mode);
Design relabel(const Design& d, const std::vector<int>& images);
Design canonical(const Design& d, SymmetryMode mode);

// Canonical representatives, sorted, of all linear spaces on m points.
std::vector<Design> enumerate(int m, SymmetryMode mode);

// Calls `visit` for every labeled linear space on m points.
void for_each_design(int m, const std::function<void(const Design&)>& visit);

bool feasible_replication(int m, const ReplicationVector& r);

// Written-order twist word for blocks taken in the given order.
TwistWord ordered_word(const Design& d, const std::vector<int>& order);

Relation daisy(int n, int i);

}  // namespace pm
