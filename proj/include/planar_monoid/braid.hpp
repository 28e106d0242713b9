#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pm {

// Thrown when two operands live in different braid groups or on different
// surfaces.
class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A word in the Artin generators of the braid group on `strands` strands.
//
// Letters are written in function order: the rightmost letter acts first,
// exactly like a product of Dehn twists. A letter +i is the crossing
// sigma_i (sign +1) and -i its inverse (sign -1).
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<int> letters = {});

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // Appends `other` on the right (so it acts before the current word).
  BraidWord& operator*=(const BraidWord& other);

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

std::ostream& operator<<(std::ostream& os, const BraidWord& w);

// Bijection on strand positions, 0-based internally.
// images()[p] is where the strand starting at position p ends up.
class Permutation {
 public:
  static Permutation identity(int size);
  explicit Permutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  int operator()(int p) const { return images_[static_cast<std::size_t>(p)]; }
  bool is_identity() const;
  Permutation inverse() const;

  // Function composition: (a * b)(p) = a(b(p)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Symmetric matrix of pairwise linking numbers, stored doubled so that
// half-integers stay exact.
class LinkingMatrix {
 public:
  explicit LinkingMatrix(int strands);

  int strands() const { return strands_; }
  // Twice the linking number of the strands starting at positions x, y
  // (0-based).
  int doubled(int x, int y) const;
  void add_doubled(int x, int y, int delta);
  // Exact value when even; callers that need halves use doubled().
  bool is_integral() const;
  int value(int x, int y) const { return doubled(x, y) / 2; }

  LinkingMatrix& operator+=(const LinkingMatrix& other);
  friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;

 private:
  int strands_;
  std::vector<int> cells_;
};

// Left-greedy Garside normal form  Delta^infimum * A_1 * ... * A_k  with each
// A_i a permutation braid different from 1 and Delta.
struct NormalForm {
  int strands = 1;
  int infimum = 0;
  std::vector<Permutation> factors;

  int supremum() const { return infimum + static_cast<int>(factors.size()); }
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& w);
Permutation permutation(const BraidWord& w);
LinkingMatrix linking_matrix(const BraidWord& w);
NormalForm normal_form(const BraidWord& w);
// Expands a normal form back into a word representing the same element.
BraidWord to_word(const NormalForm& nf);
bool equals(const BraidWord& a, const BraidWord& b);
bool is_identity(const BraidWord& w);

// The central full twist on all m strands with every pair linking -1.
BraidWord full_twist(int m);
// Full twist on the adjacent block of strands first..first+count-1 (1-based).
BraidWord block_full_twist(int strands, int first, int count);

// Parses whitespace separated signed letters ("1 -2 1").
BraidWord parse_braid_word(int strands, const std::string& text);

namespace garside {

// Positive permutation braid, indexed by where each starting position ends
// when the braid is read from left to right.
Permutation delta(int m);
// The permutation braid of Delta * sigma_k^{-1} (k is 1-based).
Permutation delta_over(int m, int k);
Permutation atom(int m, int k);
Permutation flip(const Permutation& s);
// Decomposes a permutation braid into positive letters.
std::vector<int> simple_letters(const Permutation& s);

// Incremental left normal form of a product of simple elements.
class Accumulator {
 public:
  explicit Accumulator(int m);

  void multiply(const Permutation& simple);
  void shift_infimum(int by) { infimum_ += by; }
  NormalForm result() const;

 private:
  void make_left_weighted(Permutation& a, Permutation& b) const;

  int m_;
  int infimum_ = 0;
  std::vector<Permutation> factors_;
};

}  // namespace garside

}  // namespace pm
