#include "planar_monoid/lawrence_krammer.hpp"

#include <cstdlib>
#include <utility>

namespace pm {

namespace {

using Column = std::vector<std::pair<int, LaurentPoly2>>;

LaurentPoly2 mono(std::int64_t c, int q, int t = 0) { return LaurentPoly2::monomial(c, q, t); }

// (q - 1) * c q^a t^b
LaurentPoly2 times_q_minus_1(std::int64_t c, int a, int b) { return mono(c, a + 1, b) - mono(c, a, b); }

// (q - 1)^2 * c q^a t^b
LaurentPoly2 times_q_minus_1_sq(std::int64_t c, int a, int b) {
  return mono(c, a + 2, b) - mono(2 * c, a + 1, b) + mono(c, a, b);
}

// Column images of x_{i,j} under sigma_k (Krammer's formulas).
Column forward_column(int m, int k, int i, int j) {
  auto idx = [m](int a, int b) { return lk_index(m, a, b); };
  Column col;
  if (i == k && j == k + 1) {
    col.emplace_back(idx(k, k + 1), mono(1, 2, 1));
  } else if (j == k && i < k) {
    col.emplace_back(idx(i, k), mono(1, 0) - mono(1, 1));
    col.emplace_back(idx(i, k + 1), mono(1, 1));
  } else if (j == k + 1 && i < k) {
    col.emplace_back(idx(i, k), mono(1, 0));
    col.emplace_back(idx(k, k + 1), times_q_minus_1(1, k - i + 1, 1));
  } else if (i == k && k + 1 < j) {
    col.emplace_back(idx(k, k + 1), times_q_minus_1(1, 1, 1));
    col.emplace_back(idx(k + 1, j), mono(1, 1));
  } else if (i == k + 1) {
    col.emplace_back(idx(k, j), mono(1, 0));
    col.emplace_back(idx(k + 1, j), mono(1, 0) - mono(1, 1));
  } else if (i < k && k + 1 < j) {
    col.emplace_back(idx(i, j), mono(1, 0));
    col.emplace_back(idx(k, k + 1), times_q_minus_1_sq(1, k - i, 1));
  } else {
    col.emplace_back(idx(i, j), mono(1, 0));
  }
  return col;
}

// Column images of x_{i,j} under sigma_k^{-1}.
Column inverse_column(int m, int k, int i, int j) {
  auto idx = [m](int a, int b) { return lk_index(m, a, b); };
  Column col;
  if (i == k && j == k + 1) {
    col.emplace_back(idx(k, k + 1), mono(1, -2, -1));
  } else if (j == k && i < k) {
    col.emplace_back(idx(i, k + 1), mono(1, 0));
    col.emplace_back(idx(k, k + 1), times_q_minus_1(-1, k - i - 1, 0));
  } else if (j == k + 1 && i < k) {
    col.emplace_back(idx(i, k), mono(1, -1));
    col.emplace_back(idx(i, k + 1), mono(1, 0) - mono(1, -1));
    col.emplace_back(idx(k, k + 1), times_q_minus_1_sq(-1, k - i - 2, 0));
  } else if (i == k && k + 1 < j) {
    col.emplace_back(idx(k, k + 1), times_q_minus_1_sq(-1, -2, 0));
    col.emplace_back(idx(k, j), mono(1, 0) - mono(1, -1));
    col.emplace_back(idx(k + 1, j), mono(1, 0));
  } else if (i == k + 1) {
    col.emplace_back(idx(k, k + 1), times_q_minus_1(-1, -2, 0));
    col.emplace_back(idx(k, j), mono(1, -1));
  } else if (i < k && k + 1 < j) {
    col.emplace_back(idx(i, j), mono(1, 0));
    col.emplace_back(idx(k, k + 1), times_q_minus_1_sq(-1, k - i - 2, 0));
  } else {
    col.emplace_back(idx(i, j), mono(1, 0));
  }
  return col;
}

std::vector<Column> generator_columns(int m, int letter) {
  const int k = std::abs(letter);
  std::vector<Column> cols;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      cols.push_back(letter > 0 ? forward_column(m, k, i, j) : inverse_column(m, k, i, j));
    }
  }
  return cols;
}

}  // namespace

LkMatrix::LkMatrix(int strands, int dim)
    : strands_(strands), dim_(dim), cells_(static_cast<std::size_t>(dim * dim)) {}

LkMatrix LkMatrix::identity(int strands) {
  const int dim = strands * (strands - 1) / 2;
  LkMatrix out(strands, dim);
  for (int d = 0; d < dim; ++d) out.at(d, d) = LaurentPoly2::constant(1);
  return out;
}

LkMatrix operator*(const LkMatrix& a, const LkMatrix& b) {
  if (a.strands_ != b.strands_) throw ShapeMismatch("strand count mismatch");
  LkMatrix out(a.strands_, a.dim_);
  for (int r = 0; r < a.dim_; ++r) {
    for (int l = 0; l < a.dim_; ++l) {
      const auto& x = a.at(r, l);
      if (x.is_zero()) continue;
      for (int c = 0; c < a.dim_; ++c) out.at(r, c).add_product(x, b.at(l, c));
    }
  }
  return out;
}

int lk_index(int strands, int i, int j) {
  // Rows for i' < i contribute (strands - i') entries each.
  return (i - 1) * strands - (i - 1) * i / 2 + (j - i - 1);
}

LkMatrix lk_generator(int strands, int letter) {
  LkMatrix out = LkMatrix::identity(strands);
  const auto cols = generator_columns(strands, letter);
  for (int c = 0; c < out.dim(); ++c) {
    for (int r = 0; r < out.dim(); ++r) out.at(r, c) = LaurentPoly2();
    for (const auto& [r, v] : cols[static_cast<std::size_t>(c)]) out.at(r, c) += v;
  }
  return out;
}

LkMatrix lk_matrix(const BraidWord& w) {
  const int m = w.strands();
  LkMatrix acc = LkMatrix::identity(m);
  if (m < 2) return acc;
  // Right-multiplying by a sparse generator only mixes a few columns.
  std::vector<std::vector<Column>> cache(static_cast<std::size_t>(2 * m));
  for (int letter : w.letters()) {
    auto& cols = cache[static_cast<std::size_t>(letter > 0 ? letter : m + -letter)];
    if (cols.empty()) cols = generator_columns(m, letter);
    LkMatrix next = LkMatrix::identity(m);
    for (int r = 0; r < acc.dim(); ++r) {
      for (int c = 0; c < acc.dim(); ++c) {
        LaurentPoly2 v;
        for (const auto& [src, coeff] : cols[static_cast<std::size_t>(c)]) v.add_product(acc.at(r, src), coeff);
        next.at(r, c) = std::move(v);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

bool lk_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw ShapeMismatch("strand count mismatch");
  return lk_matrix(a) == lk_matrix(b);
}

}  // namespace pm
