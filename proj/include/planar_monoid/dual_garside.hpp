#pragma once

#include <cstdint>
#include <vector>

#include "planar_monoid/braid.hpp"

namespace pm::dual {

// The dual (band generator) Garside structure on the braid group, used by
// the ordering search for its divisibility test.
//
// Atoms are the band generators
//   a_{t,s} = (sigma_{t-1}^{-1} ... sigma_{s+1}^{-1}) sigma_s (sigma_{s+1} ... sigma_{t-1}),
// the Garside element is sigma_1 sigma_2 ... sigma_{m-1}, and simple elements
// correspond to non-crossing partitions of the m punctures on a circle.
// A simple is stored as the strand permutation of its braid (function order,
// see pm::permutation), whose cycles are the blocks of the partition.

// Strand permutation of sigma_1 ... sigma_{m-1}.
Permutation garside_permutation(int m);

// Simple element whose only non-trivial block is `points` (1-based).
Permutation block_simple(int m, const std::vector<int>& points);

// Band generator word for a_{t,s}, s < t.
BraidWord band_generator(int m, int s, int t);

// Positive word for the simple element of `points`:
// a_{b2,b1} a_{b3,b2} ... a_{bk,b(k-1)}.
BraidWord block_word(int m, const std::vector<int>& points);

// Positive word for any simple element (product of its blocks).
BraidWord simple_word(const Permutation& simple);

// Partition of the punctures given by the cycles of a simple element, as a
// block label per point.
std::vector<int> block_labels(const Permutation& simple);

// Simple element of a non-crossing partition given by labels.
Permutation from_labels(int m, const std::vector<int>& labels);

// Left normal form of a positive element of the dual monoid, built by
// multiplying simple elements on the right.
class Accumulator {
 public:
  explicit Accumulator(int m);

  void multiply(const Permutation& simple);

  int strands() const { return m_; }
  int infimum() const;
  int supremum() const { return static_cast<int>(factors_.size()); }
  const std::vector<Permutation>& factors() const { return factors_; }

  // Compact byte key identifying the element.
  std::vector<std::uint8_t> key() const;
  // Word for the element, in Artin generators.
  BraidWord word() const;

 private:
  void make_left_weighted(Permutation& a, Permutation& b) const;

  int m_;
  Permutation garside_;
  Permutation identity_;
  std::vector<Permutation> factors_;  // leading Garside factors included
};

}  // namespace pm::dual
