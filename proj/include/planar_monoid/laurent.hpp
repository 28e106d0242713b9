#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace pm {

// Sparse Laurent polynomial in two commuting variables q, t with integer
// coefficients. Terms are kept sorted by (q-degree, t-degree) with no zero
// coefficients, so structural equality is polynomial equality.
//
// Coefficients are 64-bit; any overflow throws std::overflow_error rather
// than wrapping.
class LaurentPoly2 {
 public:
  struct Term {
    int q = 0;
    int t = 0;
    std::int64_t coeff = 0;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly2() = default;
  static LaurentPoly2 constant(std::int64_t c);
  static LaurentPoly2 monomial(std::int64_t c, int q_deg, int t_deg);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly2& operator+=(const LaurentPoly2& other);
  LaurentPoly2& operator-=(const LaurentPoly2& other);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

  // this += a * b, without building the intermediate product.
  void add_product(const LaurentPoly2& a, const LaurentPoly2& b);

 private:
  void merge(const std::vector<Term>& other, std::int64_t sign);
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly2& p);

}  // namespace pm
