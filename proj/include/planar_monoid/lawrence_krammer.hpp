#pragma once

#include <vector>

#include "planar_monoid/braid.hpp"
#include "planar_monoid/laurent.hpp"

namespace pm {

// Square matrix over Z[q^{+-1}, t^{+-1}] in the Lawrence-Krammer basis
// x_{i,j}, 1 <= i < j <= m (row-major, dimension m(m-1)/2).
class LkMatrix {
 public:
  static LkMatrix identity(int strands);

  int strands() const { return strands_; }
  int dim() const { return dim_; }
  const LaurentPoly2& at(int row, int col) const {
    return cells_[static_cast<std::size_t>(row * dim_ + col)];
  }
  LaurentPoly2& at(int row, int col) { return cells_[static_cast<std::size_t>(row * dim_ + col)]; }

  friend LkMatrix operator*(const LkMatrix& a, const LkMatrix& b);
  friend bool operator==(const LkMatrix&, const LkMatrix&) = default;

 private:
  LkMatrix(int strands, int dim);
  int strands_;
  int dim_;
  std::vector<LaurentPoly2> cells_;
};

// Index of basis vector x_{i,j} (1-based i < j).
int lk_index(int strands, int i, int j);

// Matrix of a single letter (+k or -k).
LkMatrix lk_generator(int strands, int letter);
LkMatrix lk_matrix(const BraidWord& w);
bool lk_equal(const BraidWord& a, const BraidWord& b);

}  // namespace pm
