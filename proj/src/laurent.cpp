#include "planar_monoid/laurent.hpp"

#include <algorithm>
#include <ostream>

namespace pm {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

bool degree_less(const LaurentPoly2::Term& a, const LaurentPoly2::Term& b) {
  return a.q != b.q ? a.q < b.q : a.t < b.t;
}

}  // namespace

LaurentPoly2 LaurentPoly2::constant(std::int64_t c) { return monomial(c, 0, 0); }

LaurentPoly2 LaurentPoly2::monomial(std::int64_t c, int q_deg, int t_deg) {
  LaurentPoly2 p;
  if (c != 0) p.terms_.push_back({q_deg, t_deg, c});
  return p;
}

void LaurentPoly2::merge(const std::vector<Term>& other, std::int64_t sign) {
  std::vector<Term> out;
  out.reserve(terms_.size() + other.size());
  auto a = terms_.begin();
  auto b = other.begin();
  while (a != terms_.end() || b != other.end()) {
    if (b == other.end() || (a != terms_.end() && degree_less(*a, *b))) {
      out.push_back(*a++);
    } else if (a == terms_.end() || degree_less(*b, *a)) {
      out.push_back({b->q, b->t, checked_mul(sign, b->coeff)});
      ++b;
    } else {
      const std::int64_t c = checked_add(a->coeff, checked_mul(sign, b->coeff));
      if (c != 0) out.push_back({a->q, a->t, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& other) {
  merge(other.terms_, 1);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& other) {
  merge(other.terms_, -1);
  return *this;
}

void LaurentPoly2::add_product(const LaurentPoly2& a, const LaurentPoly2& b) {
  if (a.is_zero() || b.is_zero()) return;
  // The smaller operand is usually a one or two term generator entry.
  const LaurentPoly2& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const LaurentPoly2& big = &small == &a ? b : a;
  for (const Term& s : small.terms_) {
    std::vector<Term> shifted;
    shifted.reserve(big.terms_.size());
    for (const Term& x : big.terms_) {
      shifted.push_back({x.q + s.q, x.t + s.t, checked_mul(x.coeff, s.coeff)});
    }
    merge(shifted, 1);
  }
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 out;
  out.add_product(a, b);
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly2& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& term : p.terms()) {
    if (!first) os << (term.coeff < 0 ? " - " : " + ");
    else if (term.coeff < 0) os << "-";
    first = false;
    const auto mag = term.coeff < 0 ? -term.coeff : term.coeff;
    os << mag;
    if (term.q != 0) os << "*q^" << term.q;
    if (term.t != 0) os << "*t^" << term.t;
  }
  return os;
}

}  // namespace pm
