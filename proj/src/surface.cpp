#include "planar_monoid/surface.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pm {

SurfaceSpec::SurfaceSpec(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("surface needs at least 2 boundary components");
}

ConvexCurve ConvexCurve::outer() { return ConvexCurve(true, {}); }

ConvexCurve ConvexCurve::around(std::vector<int> support) {
  std::sort(support.begin(), support.end());
  if (support.empty()) throw std::invalid_argument("convex curve must enclose a component");
  if (std::adjacent_find(support.begin(), support.end()) != support.end()) {
    throw std::invalid_argument("repeated component in curve support");
  }
  return ConvexCurve(false, std::move(support));
}

std::vector<int> ConvexCurve::enclosed(const SurfaceSpec& s) const {
  if (!outer_) return support_;
  std::vector<int> all(static_cast<std::size_t>(s.interior()));
  std::iota(all.begin(), all.end(), 1);
  return all;
}

bool ConvexCurve::is_boundary_parallel(const SurfaceSpec& s) const {
  if (outer_) return true;
  const auto k = static_cast<int>(support_.size());
  return k == 1 || k == s.interior();
}

void ConvexCurve::validate(const SurfaceSpec& s) const {
  if (outer_) return;
  if (support_.front() < 1 || support_.back() > s.interior()) {
    throw std::out_of_range("curve support outside 1.." + std::to_string(s.interior()));
  }
}

TwistWord::TwistWord(SurfaceSpec s, std::vector<ConvexCurve> f) : surface(s), factors(std::move(f)) {
  for (const auto& c : factors) c.validate(surface);
}

BoundaryWord::BoundaryWord(SurfaceSpec s, std::vector<int> a, int outer_count)
    : surface(s), exponents(std::move(a)), outer(outer_count) {
  if (static_cast<int>(exponents.size()) != surface.interior()) {
    throw std::invalid_argument("expected " + std::to_string(surface.interior()) + " exponents");
  }
  if (outer < 0 || std::any_of(exponents.begin(), exponents.end(), [](int x) { return x < 0; })) {
    throw std::invalid_argument("exponents must be non-negative");
  }
}

TwistWord BoundaryWord::expand() const {
  std::vector<ConvexCurve> factors;
  for (int i = 0; i < surface.interior(); ++i) {
    for (int r = 0; r < exponents[static_cast<std::size_t>(i)]; ++r) factors.push_back(ConvexCurve::around({i + 1}));
  }
  for (int r = 0; r < outer; ++r) factors.push_back(ConvexCurve::outer());
  return TwistWord(surface, std::move(factors));
}

int BoundaryWord::twist_count() const {
  return std::accumulate(exponents.begin(), exponents.end(), outer);
}

BraidWord swing_word(const ConvexCurve& curve, const SurfaceSpec& surface) {
  curve.validate(surface);
  const int strands = surface.interior();
  if (curve.is_outer()) return full_twist(strands);
  const auto& support = curve.support();
  const int k = static_cast<int>(support.size());
  if (k == 1) return BraidWord(strands);

  // Strand support[r] moves to position support[0] + r, crossing every
  // intervening strand on the same side.
  std::vector<int> gather;
  for (int r = 1; r < k; ++r) {
    const int target = support[0] + r;
    for (int p = support[static_cast<std::size_t>(r)] - 1; p >= target; --p) gather.push_back(p);
  }
  BraidWord g(strands, gather);
  BraidWord w = g;
  w *= block_full_twist(strands, support[0], k);
  w *= invert(g);
  return w;
}

BraidWord to_braid(const TwistWord& word) {
  BraidWord out(word.surface.interior());
  for (const auto& c : word.factors) out *= swing_word(c, word.surface);
  return out;
}

MultiplicityVector multiplicities(const TwistWord& word) {
  MultiplicityVector mv;
  mv.interior.assign(static_cast<std::size_t>(word.surface.interior()), 0);
  for (const auto& c : word.factors) {
    for (int label : c.enclosed(word.surface)) ++mv.interior[static_cast<std::size_t>(label - 1)];
    if (c.is_outer() || static_cast<int>(c.support().size()) == word.surface.interior()) ++mv.outer_parallel;
  }
  return mv;
}

EquivalenceReport compare(const TwistWord& w1, const TwistWord& w2) {
  if (!(w1.surface == w2.surface)) throw ShapeMismatch("twist words live on different surfaces");
  EquivalenceReport r;
  r.braid_equal = equals(to_braid(w1), to_braid(w2));
  const auto m1 = multiplicities(w1);
  const auto m2 = multiplicities(w2);
  r.multiplicities_equal = m1.interior == m2.interior;
  r.outer_count_differs = r.equivalent() && m1.outer_parallel != m2.outer_parallel;
  return r;
}

bool equivalent(const TwistWord& w1, const TwistWord& w2) { return compare(w1, w2).equivalent(); }

}  // namespace pm
