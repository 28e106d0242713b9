#include "planar_monoid/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>

namespace pm {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
  for (int l : letters_) {
    if (l == 0 || std::abs(l) >= strands_) {
      throw std::invalid_argument("generator " + std::to_string(l) +
                                  " out of range for " + std::to_string(strands_) +
                                  " strands");
    }
  }
}

BraidWord& BraidWord::operator*=(const BraidWord& other) {
  if (other.strands_ != strands_) throw ShapeMismatch("strand count mismatch");
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BraidWord& w) {
  bool first = true;
  for (int l : w.letters()) {
    if (!first) os << ' ';
    os << l;
    first = false;
  }
  return os;
}

Permutation Permutation::identity(int size) {
  std::vector<int> images(static_cast<std::size_t>(size));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

bool Permutation::is_identity() const {
  for (int p = 0; p < size(); ++p) {
    if (images_[static_cast<std::size_t>(p)] != p) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int p = 0; p < size(); ++p) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(p)])] = p;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw ShapeMismatch("permutation size mismatch");
  std::vector<int> out(a.images_.size());
  for (int p = 0; p < a.size(); ++p) out[static_cast<std::size_t>(p)] = a(b(p));
  return Permutation(std::move(out));
}

LinkingMatrix::LinkingMatrix(int strands)
    : strands_(strands), cells_(static_cast<std::size_t>(strands * strands), 0) {}

int LinkingMatrix::doubled(int x, int y) const {
  return cells_[static_cast<std::size_t>(x * strands_ + y)];
}

void LinkingMatrix::add_doubled(int x, int y, int delta) {
  cells_[static_cast<std::size_t>(x * strands_ + y)] += delta;
  cells_[static_cast<std::size_t>(y * strands_ + x)] += delta;
}

bool LinkingMatrix::is_integral() const {
  return std::all_of(cells_.begin(), cells_.end(), [](int v) { return v % 2 == 0; });
}

LinkingMatrix& LinkingMatrix::operator+=(const LinkingMatrix& other) {
  if (other.strands_ != strands_) throw ShapeMismatch("strand count mismatch");
  for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] += other.cells_[i];
  return *this;
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  BraidWord out = a;
  out *= b;
  return out;
}

BraidWord invert(const BraidWord& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  for (int& l : letters) l = -l;
  return BraidWord(w.strands(), std::move(letters));
}

namespace {

// Tracks which original strand sits at each position while the letters act
// from right to left.
template <typename OnCrossing>
std::vector<int> track_strands(const BraidWord& w, OnCrossing&& on_crossing) {
  std::vector<int> at(static_cast<std::size_t>(w.strands()));
  std::iota(at.begin(), at.end(), 0);
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    const auto k = static_cast<std::size_t>(std::abs(*it) - 1);
    on_crossing(at[k], at[k + 1], *it > 0 ? 1 : -1);
    std::swap(at[k], at[k + 1]);
  }
  return at;
}

}  // namespace

Permutation permutation(const BraidWord& w) {
  const auto at = track_strands(w, [](int, int, int) {});
  std::vector<int> images(at.size());
  for (std::size_t pos = 0; pos < at.size(); ++pos) images[static_cast<std::size_t>(at[pos])] = static_cast<int>(pos);
  return Permutation(std::move(images));
}

LinkingMatrix linking_matrix(const BraidWord& w) {
  LinkingMatrix lk(w.strands());
  track_strands(w, [&lk](int a, int b, int sign) { lk.add_doubled(a, b, sign); });
  return lk;
}

namespace garside {

Permutation delta(int m) {
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int p = 0; p < m; ++p) images[static_cast<std::size_t>(p)] = m - 1 - p;
  return Permutation(std::move(images));
}

Permutation atom(int m, int k) {
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 0);
  std::swap(images[static_cast<std::size_t>(k - 1)], images[static_cast<std::size_t>(k)]);
  return Permutation(std::move(images));
}

Permutation delta_over(int m, int k) {
  // Delta = X * sigma_k, so X sends p to s_k(m-1-p).
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int p = 0; p < m; ++p) {
    int v = m - 1 - p;
    if (v == k - 1) v = k;
    else if (v == k) v = k - 1;
    images[static_cast<std::size_t>(p)] = v;
  }
  return Permutation(std::move(images));
}

Permutation flip(const Permutation& s) {
  const int m = s.size();
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int p = 0; p < m; ++p) images[static_cast<std::size_t>(p)] = m - 1 - s(m - 1 - p);
  return Permutation(std::move(images));
}

namespace {

// Simple elements are read left to right: s(p) is the final position of the
// strand starting at p. s = sigma_k * rest iff strands at k-1, k cross.
bool starts_with(const Permutation& s, int k) { return s(k - 1) > s(k); }

// s = rest * sigma_k iff the strands ending at k-1, k have crossed.
bool ends_with(const std::vector<int>& inv, int k) {
  return inv[static_cast<std::size_t>(k - 1)] > inv[static_cast<std::size_t>(k)];
}

}  // namespace

std::vector<int> simple_letters(const Permutation& s) {
  std::vector<int> letters;
  std::vector<int> cur = s.images();
  const int m = s.size();
  for (;;) {
    int k = 1;
    while (k < m && cur[static_cast<std::size_t>(k - 1)] < cur[static_cast<std::size_t>(k)]) ++k;
    if (k == m) break;
    letters.push_back(k);
    // s = sigma_k * rest, rest(p) = s(s_k(p)).
    std::swap(cur[static_cast<std::size_t>(k - 1)], cur[static_cast<std::size_t>(k)]);
  }
  return letters;
}

Accumulator::Accumulator(int m) : m_(m) {}

void Accumulator::make_left_weighted(Permutation& a, Permutation& b) const {
  std::vector<int> a_img = a.images();
  std::vector<int> a_inv = a.inverse().images();
  std::vector<int> b_img = b.images();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 1; k < m_; ++k) {
      const bool b_starts = b_img[static_cast<std::size_t>(k - 1)] > b_img[static_cast<std::size_t>(k)];
      if (b_starts && !ends_with(a_inv, k)) {
        // a <- a * sigma_k, b <- sigma_k^{-1} * b.
        std::swap(a_inv[static_cast<std::size_t>(k - 1)], a_inv[static_cast<std::size_t>(k)]);
        a_img[static_cast<std::size_t>(a_inv[static_cast<std::size_t>(k - 1)])] = k - 1;
        a_img[static_cast<std::size_t>(a_inv[static_cast<std::size_t>(k)])] = k;
        std::swap(b_img[static_cast<std::size_t>(k - 1)], b_img[static_cast<std::size_t>(k)]);
        changed = true;
      }
    }
  }
  a = Permutation(std::move(a_img));
  b = Permutation(std::move(b_img));
}

void Accumulator::multiply(const Permutation& simple) {
  if (simple.is_identity()) return;
  factors_.push_back(simple);
  for (std::size_t j = factors_.size() - 1; j > 0; --j) {
    const Permutation before = factors_[j - 1];
    make_left_weighted(factors_[j - 1], factors_[j]);
    if (factors_[j].is_identity()) factors_.erase(factors_.begin() + static_cast<std::ptrdiff_t>(j));
    if (factors_[j - 1] == before) break;
  }
}

NormalForm Accumulator::result() const {
  NormalForm nf;
  nf.strands = m_;
  nf.infimum = infimum_;
  const Permutation d = delta(m_);
  std::size_t lead = 0;
  while (lead < factors_.size() && factors_[lead] == d) ++lead;
  nf.infimum += static_cast<int>(lead);
  nf.factors.assign(factors_.begin() + static_cast<std::ptrdiff_t>(lead), factors_.end());
  return nf;
}

}  // namespace garside

NormalForm normal_form(const BraidWord& w) {
  const int m = w.strands();
  const auto& letters = w.letters();
  // Each sigma_k^{-1} becomes Delta^{-1} * (Delta sigma_k^{-1}); the Delta^{-1}
  // are then pulled to the front using P * Delta^{-1} = Delta^{-1} * flip(P).
  int negatives_after = 0;
  std::vector<Permutation> simples;
  simples.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const int l = *it;
    Permutation s = l > 0 ? garside::atom(m, l) : garside::delta_over(m, -l);
    if (negatives_after % 2 == 1) s = garside::flip(s);
    simples.push_back(std::move(s));
    if (l < 0) ++negatives_after;
  }
  garside::Accumulator acc(m);
  acc.shift_infimum(-negatives_after);
  for (auto it = simples.rbegin(); it != simples.rend(); ++it) acc.multiply(*it);
  return acc.result();
}

BraidWord to_word(const NormalForm& nf) {
  std::vector<int> letters;
  const auto delta_letters = garside::simple_letters(garside::delta(nf.strands));
  if (nf.infimum >= 0) {
    for (int i = 0; i < nf.infimum; ++i) letters.insert(letters.end(), delta_letters.begin(), delta_letters.end());
  } else {
    for (int i = 0; i < -nf.infimum; ++i) {
      for (auto it = delta_letters.rbegin(); it != delta_letters.rend(); ++it) letters.push_back(-*it);
    }
  }
  for (const auto& f : nf.factors) {
    const auto fl = garside::simple_letters(f);
    letters.insert(letters.end(), fl.begin(), fl.end());
  }
  return BraidWord(nf.strands, std::move(letters));
}

bool equals(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw ShapeMismatch("strand count mismatch");
  return normal_form(compose(invert(b), a)) == NormalForm{a.strands(), 0, {}};
}

bool is_identity(const BraidWord& w) { return normal_form(w) == NormalForm{w.strands(), 0, {}}; }

BraidWord block_full_twist(int strands, int first, int count) {
  std::vector<int> letters;
  for (int rep = 0; rep < count; ++rep) {
    for (int k = first; k < first + count - 1; ++k) letters.push_back(-k);
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord full_twist(int m) { return block_full_twist(m, 1, m); }

BraidWord parse_braid_word(int strands, const std::string& text) {
  std::istringstream in(text);
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad braid letter '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("bad braid letter '" + tok + "'");
    letters.push_back(v);
  }
  return BraidWord(strands, std::move(letters));
}

}  // namespace pm
