#pragma once

#include <random>
#include <vector>

#include "planar_monoid/braid.hpp"
#include "planar_monoid/surface.hpp"

namespace pm::testing {

inline BraidWord random_word(std::mt19937_64& rng, int strands, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution neg(0.5);
  std::vector<int> letters;
  const int n = strands > 1 ? len(rng) : 0;
  for (int i = 0; i < n; ++i) letters.push_back(neg(rng) ? -gen(rng) : gen(rng));
  return BraidWord(strands, letters);
}

inline BraidWord random_pure_word(std::mt19937_64& rng, int strands, int max_length) {
  BraidWord w = random_word(rng, strands, max_length);
  // Append a positive word for the inverse permutation to close the strands.
  const Permutation p = permutation(w);
  std::vector<int> at(static_cast<std::size_t>(strands));  // at[position] = strand
  for (int s = 0; s < strands; ++s) at[static_cast<std::size_t>(p(s))] = s;
  std::vector<int> fix;
  for (bool changed = true; changed;) {
    changed = false;
    for (int k = 0; k + 1 < strands; ++k) {
      if (at[static_cast<std::size_t>(k)] > at[static_cast<std::size_t>(k + 1)]) {
        std::swap(at[static_cast<std::size_t>(k)], at[static_cast<std::size_t>(k + 1)]);
        fix.push_back(k + 1);
        changed = true;
      }
    }
  }
  // fix acts after w, so it goes on the left in written order.
  std::vector<int> letters(fix.rbegin(), fix.rend());
  BraidWord out(strands, letters);
  out *= w;
  return out;
}

inline ConvexCurve random_curve(std::mt19937_64& rng, const SurfaceSpec& s) {
  const int m = s.interior();
  std::uniform_int_distribution<int> pick(0, (1 << m) - 1);
  for (;;) {
    const int mask = pick(rng);
    std::vector<int> support;
    for (int p = 0; p < m; ++p) {
      if (mask & (1 << p)) support.push_back(p + 1);
    }
    if (!support.empty()) return ConvexCurve::around(support);
  }
}

inline TwistWord random_twist_word(std::mt19937_64& rng, const SurfaceSpec& s, int max_factors) {
  std::uniform_int_distribution<int> len(0, max_factors);
  std::bernoulli_distribution outer(0.1);
  std::vector<ConvexCurve> factors;
  const int k = len(rng);
  for (int i = 0; i < k; ++i) factors.push_back(outer(rng) ? ConvexCurve::outer() : random_curve(rng, s));
  return TwistWord(s, factors);
}

}  // namespace pm::testing
