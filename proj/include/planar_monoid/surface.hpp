#pragma once

#include <vector>

#include "planar_monoid/braid.hpp"

namespace pm {

// Sphere with n boundary components b_1..b_n. b_1..b_{n-1} are the interior
// components, arranged convexly in label order; b_n is the outer one.
class SurfaceSpec {
 public:
  explicit SurfaceSpec(int n);
  int n() const { return n_; }
  int interior() const { return n_ - 1; }
  friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;

 private:
  int n_;
};

// Convex simple closed curve, identified by the interior components it
// encloses, or the curve parallel to the outer component.
class ConvexCurve {
 public:
  static ConvexCurve outer();
  // Labels are 1-based interior components; they are sorted on construction.
  static ConvexCurve around(std::vector<int> support);

  bool is_outer() const { return outer_; }
  const std::vector<int>& support() const { return support_; }
  // Interior components enclosed, with the outer curve enclosing all of them.
  std::vector<int> enclosed(const SurfaceSpec& s) const;
  bool is_boundary_parallel(const SurfaceSpec& s) const;
  void validate(const SurfaceSpec& s) const;

  friend bool operator==(const ConvexCurve&, const ConvexCurve&) = default;
  friend auto operator<=>(const ConvexCurve&, const ConvexCurve&) = default;

 private:
  ConvexCurve(bool outer, std::vector<int> support) : outer_(outer), support_(std::move(support)) {}
  bool outer_;
  std::vector<int> support_;
};

// Product T_{c_1} ... T_{c_k} of positive twists in written order: the last
// factor is applied first.
struct TwistWord {
  SurfaceSpec surface;
  std::vector<ConvexCurve> factors;

  TwistWord(SurfaceSpec s, std::vector<ConvexCurve> f);
  std::size_t twist_count() const { return factors.size(); }
};

// T_{b_1}^{a_1} ... T_{b_{n-1}}^{a_{n-1}} T_{b_n}^{outer}.
struct BoundaryWord {
  SurfaceSpec surface;
  std::vector<int> exponents;
  int outer = 1;

  BoundaryWord(SurfaceSpec s, std::vector<int> a, int outer_count = 1);
  TwistWord expand() const;
  int twist_count() const;
  friend bool operator==(const BoundaryWord&, const BoundaryWord&) = default;
};

struct MultiplicityVector {
  std::vector<int> interior;  // m_1..m_{n-1}
  int outer_parallel = 0;     // factors parallel to b_n (reported, not compared)
  friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
};

// Braid on n-1 strands of the twist about `curve`: gather the enclosed strands
// toward the smallest label, apply the negative full twist on that block, and
// undo the gathering.
BraidWord swing_word(const ConvexCurve& curve, const SurfaceSpec& surface);
BraidWord to_braid(const TwistWord& word);
MultiplicityVector multiplicities(const TwistWord& word);

struct EquivalenceReport {
  bool braid_equal = false;
  bool multiplicities_equal = false;
  // Braids and interior multiplicities agree but the outer-parallel counts
  // differ.
  bool outer_count_differs = false;
  bool equivalent() const { return braid_equal && multiplicities_equal; }
};

EquivalenceReport compare(const TwistWord& w1, const TwistWord& w2);
bool equivalent(const TwistWord& w1, const TwistWord& w2);

}  // namespace pm
