#include <doctest.h>

#include <random>

#include "planar_monoid/lawrence_krammer.hpp"
#include "support.hpp"

using namespace pm;

TEST_CASE("laurent polynomials") {
  const auto q = LaurentPoly2::monomial(1, 1, 0);
  const auto t = LaurentPoly2::monomial(1, 0, 1);
  const auto one = LaurentPoly2::constant(1);
  CHECK((q - q).is_zero());
  CHECK((q + one) * (q - one) == LaurentPoly2::monomial(1, 2, 0) - one);
  CHECK(q * LaurentPoly2::monomial(1, -1, 0) == one);
  CHECK((q * t).terms().size() == 1);
  CHECK(LaurentPoly2::monomial(0, 3, 3).is_zero());
  const auto big = LaurentPoly2::constant(std::int64_t{1} << 62);
  CHECK_THROWS_AS(big * LaurentPoly2::constant(4), std::overflow_error);
}

TEST_CASE("generator matrices are inverse to each other") {
  for (int m = 2; m <= 7; ++m) {
    for (int k = 1; k < m; ++k) {
      CHECK(lk_generator(m, k) * lk_generator(m, -k) == LkMatrix::identity(m));
      CHECK(lk_generator(m, -k) * lk_generator(m, k) == LkMatrix::identity(m));
    }
  }
}

TEST_CASE("generator matrices satisfy the braid relations") {
  for (int m = 3; m <= 6; ++m) {
    for (int j = 1; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        const auto a = lk_generator(m, j);
        const auto b = lk_generator(m, k);
        if (k == j + 1) {
          CHECK(a * b * a == b * a * b);
        } else {
          CHECK(a * b == b * a);
        }
      }
    }
  }
}

TEST_CASE("lk_matrix and lk_equal") {
  CHECK(lk_matrix(BraidWord(3)) == LkMatrix::identity(3));
  CHECK(lk_matrix(BraidWord(3, {1})) * lk_matrix(BraidWord(3, {-1})) == LkMatrix::identity(3));
  CHECK(lk_matrix(BraidWord(3, {1, 2, 1})) == lk_matrix(BraidWord(3, {2, 1, 2})));
  CHECK(lk_equal(BraidWord(3), BraidWord(3, {1, -1})));
  CHECK_FALSE(lk_equal(BraidWord(3, {1}), BraidWord(3, {2})));
  CHECK(lk_matrix(BraidWord(4, {1, -2, 3})) == lk_generator(4, 1) * lk_generator(4, -2) * lk_generator(4, 3));
  CHECK_THROWS_AS(lk_equal(BraidWord(3), BraidWord(4)), ShapeMismatch);
}

TEST_CASE("the full twist acts as a scalar") {
  // The full twist is central, so it acts on the irreducible representation
  // by a scalar.
  for (int m = 2; m <= 5; ++m) {
    const auto ft = lk_matrix(full_twist(m));
    const auto d = ft.at(0, 0);
    CHECK_FALSE(d.is_zero());
    for (int r = 0; r < ft.dim(); ++r) {
      for (int c = 0; c < ft.dim(); ++c) CHECK(ft.at(r, c) == (r == c ? d : LaurentPoly2()));
    }
  }
}

TEST_CASE("Garside and Lawrence-Krammer equality agree on random pairs") {
  std::mt19937_64 rng(23);
  int equal_pairs = 0;
  for (int i = 0; i < 400; ++i) {
    const int m = 2 + static_cast<int>(rng() % 5);
    const BraidWord a = testing::random_word(rng, m, 24);
    // Half the pairs are equal by construction: a rewritten through its
    // normal form with a cancelling pair inserted.
    BraidWord b = testing::random_word(rng, m, 24);
    if (i % 2 == 0) {
      b = to_word(normal_form(a));
      b *= BraidWord(m, {1, -1});
    }
    const bool g = equals(a, b);
    equal_pairs += g ? 1 : 0;
    CHECK(g == lk_equal(a, b));
  }
  CHECK(equal_pairs >= 200);
}
