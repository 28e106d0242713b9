#include "planar_monoid/dual_garside.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pm::dual {

Permutation garside_permutation(int m) {
  std::vector<int> letters;
  for (int k = 1; k < m; ++k) letters.push_back(k);
  return permutation(BraidWord(m, std::move(letters)));
}

std::vector<int> block_labels(const Permutation& simple) {
  const int m = simple.size();
  std::vector<int> labels(static_cast<std::size_t>(m), -1);
  int next = 0;
  for (int p = 0; p < m; ++p) {
    if (labels[static_cast<std::size_t>(p)] >= 0) continue;
    for (int x = p; labels[static_cast<std::size_t>(x)] < 0; x = simple(x)) labels[static_cast<std::size_t>(x)] = next;
    ++next;
  }
  return labels;
}

Permutation from_labels(int m, const std::vector<int>& labels) {
  const Permutation c = garside_permutation(m);
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) {
    // First point of the same block reached by walking the Garside cycle.
    int y = c(x);
    while (labels[static_cast<std::size_t>(y)] != labels[static_cast<std::size_t>(x)]) y = c(y);
    images[static_cast<std::size_t>(x)] = y;
  }
  return Permutation(std::move(images));
}

Permutation block_simple(int m, const std::vector<int>& points) {
  std::vector<int> labels(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) labels[static_cast<std::size_t>(x)] = x + 1;
  for (int p : points) {
    if (p < 1 || p > m) throw std::invalid_argument("block point out of range");
    labels[static_cast<std::size_t>(p - 1)] = 0;
  }
  return from_labels(m, labels);
}

BraidWord band_generator(int m, int s, int t) {
  std::vector<int> letters;
  for (int k = t - 1; k > s; --k) letters.push_back(-k);
  letters.push_back(s);
  for (int k = s + 1; k < t; ++k) letters.push_back(k);
  return BraidWord(m, std::move(letters));
}

BraidWord block_word(int m, const std::vector<int>& points) {
  std::vector<int> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  BraidWord w(m);
  for (std::size_t i = 1; i < sorted.size(); ++i) w *= band_generator(m, sorted[i - 1], sorted[i]);
  return w;
}

BraidWord simple_word(const Permutation& simple) {
  const int m = simple.size();
  const auto labels = block_labels(simple);
  std::map<int, std::vector<int>> blocks;
  for (int x = 0; x < m; ++x) blocks[labels[static_cast<std::size_t>(x)]].push_back(x + 1);
  // Blocks of a non-crossing partition commute, so their order is irrelevant.
  BraidWord w(m);
  for (const auto& [label, pts] : blocks) {
    if (pts.size() > 1) w *= block_word(m, pts);
  }
  return w;
}

Accumulator::Accumulator(int m)
    : m_(m), garside_(garside_permutation(m)), identity_(Permutation::identity(m)) {}

int Accumulator::infimum() const {
  int n = 0;
  while (n < static_cast<int>(factors_.size()) && factors_[static_cast<std::size_t>(n)] == garside_) ++n;
  return n;
}

void Accumulator::make_left_weighted(Permutation& a, Permutation& b) const {
  // c = (complement of a) meet b; a <- a c, b <- c^{-1} b.
  const Permutation complement = a.inverse() * garside_;
  const auto lc = block_labels(complement);
  const auto lb = block_labels(b);
  std::vector<int> meet(static_cast<std::size_t>(m_));
  for (int x = 0; x < m_; ++x) meet[static_cast<std::size_t>(x)] = lc[static_cast<std::size_t>(x)] * m_ + lb[static_cast<std::size_t>(x)];
  const Permutation c = from_labels(m_, meet);
  if (c == identity_) return;
  a = a * c;
  b = c.inverse() * b;
}

void Accumulator::multiply(const Permutation& simple) {
  if (simple == identity_) return;
  factors_.push_back(simple);
  for (std::size_t j = factors_.size() - 1; j > 0; --j) {
    const Permutation before = factors_[j - 1];
    make_left_weighted(factors_[j - 1], factors_[j]);
    if (factors_[j] == identity_) factors_.erase(factors_.begin() + static_cast<std::ptrdiff_t>(j));
    if (factors_[j - 1] == before) break;
  }
}

std::vector<std::uint8_t> Accumulator::key() const {
  std::vector<std::uint8_t> out;
  out.reserve(factors_.size() * static_cast<std::size_t>(m_));
  for (const auto& f : factors_) {
    for (int v : f.images()) out.push_back(static_cast<std::uint8_t>(v));
  }
  return out;
}

BraidWord Accumulator::word() const {
  BraidWord w(m_);
  for (const auto& f : factors_) w *= simple_word(f);
  return w;
}

}  // namespace pm::dual
