#include <doctest.h>

#include "covhom/laurent.hpp"
#include "covhom/rng.hpp"
#include "oracles.hpp"

using namespace covhom;

namespace {
const LaurentPoly T = LaurentPoly::t();
const LaurentPoly ONE = LaurentPoly(1);
}  // namespace

TEST_CASE("ring arithmetic basics") {
  CHECK((T - ONE) * (T + ONE) == LaurentPoly::t(2) - ONE);
  LaurentPoly f = LaurentPoly::monomial(3, 2) - LaurentPoly::monomial(5, -1);
  CHECK((f + (-f)).is_zero());
  CHECK((T - ONE).shifted(-1) == ONE - LaurentPoly::t(-1));
  CHECK(LaurentPoly(0).is_zero());
  CHECK((T * LaurentPoly::t(-1)) == ONE);
}

TEST_CASE("eval_at_unit") {
  CHECK((T - ONE).eval_at_unit(1) == 0);
  CHECK((T - ONE).eval_at_unit(-1) == -2);
  CHECK(LaurentPoly::t(2).eval_at_unit(-1) == 1);
  CHECK(LaurentPoly::t(-3).eval_at_unit(-1) == -1);
}

TEST_CASE("reduce_mod_t2") {
  LaurentPoly f = LaurentPoly::t(3) + LaurentPoly::monomial(2, 1) + LaurentPoly(5);
  CHECK(f.reduce_mod_t2() == ResidueLinear{5, 3});
  CHECK(LaurentPoly::t(2).reduce_mod_t2() == ResidueLinear{1, 0});
  CHECK((T - ONE).reduce_mod_t2() == ResidueLinear{-1, 1});
}

TEST_CASE("reduce_mod_t2 is consistent with both evaluations") {
  SplitMix64 rng(2001);
  for (int trial = 0; trial < 60; ++trial) {
    LaurentPoly f = oracle::random_laurent(rng, 5, 4, 6);
    auto [b, a] = f.reduce_mod_t2();
    CHECK(f.eval_at_unit(1) == b + a);
    CHECK(f.eval_at_unit(-1) == b - a);
  }
}

TEST_CASE("mult_block") {
  IntMatrix m = mult_block(T - ONE);
  CHECK(m.at(0, 0) == -1);
  CHECK(m.at(0, 1) == 1);
  CHECK(m.at(1, 0) == 1);
  CHECK(m.at(1, 1) == -1);
  CHECK(mult_block(ONE) == IntMatrix::identity(2));
  IntMatrix big = mult_block(LaurentPoly::t(3) + LaurentPoly::monomial(2, 1) + LaurentPoly(5));
  CHECK(big.at(0, 0) == 5);
  CHECK(big.at(0, 1) == 3);
}

TEST_CASE("companion_embed on small matrices") {
  LaurentMatrix m(1, 1);
  m.at(0, 0) = T - ONE;
  IntMatrix e = companion_embed(m);
  CHECK(e == mult_block(T - ONE));

  CHECK(companion_embed(LaurentMatrix::identity(3)) == IntMatrix::identity(6));

  LaurentMatrix row(1, 2);
  row.at(0, 0) = T;
  row.at(0, 1) = ONE;
  IntMatrix r = companion_embed(row);
  REQUIRE(r.rows() == 2);
  REQUIRE(r.cols() == 4);
  long expect[2][4] = {{0, 1, 1, 0}, {1, 0, 0, 1}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(r.at(i, j) == expect[i][j]);
}

TEST_CASE("specialize_matrix") {
  LaurentMatrix m(1, 1);
  m.at(0, 0) = T - ONE;
  CHECK(specialize_matrix(m, 1).at(0, 0) == 0);
  CHECK(specialize_matrix(m, -1).at(0, 0) == -2);
  CHECK(specialize_matrix(LaurentMatrix(2, 3), 1) == IntMatrix(2, 3));
  CHECK(specialize_matrix(LaurentMatrix(2, 3), -1) == IntMatrix(2, 3));
}

TEST_CASE("ring laws on random polynomials") {
  SplitMix64 rng(2002);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentPoly f = oracle::random_laurent(rng, 4, 3, 5);
    LaurentPoly g = oracle::random_laurent(rng, 4, 3, 5);
    LaurentPoly h = oracle::random_laurent(rng, 4, 3, 5);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f + g == g + f);
  }
}

TEST_CASE("eval_at_unit is a ring homomorphism") {
  SplitMix64 rng(2003);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentPoly f = oracle::random_laurent(rng, 4, 3, 5);
    LaurentPoly g = oracle::random_laurent(rng, 4, 3, 5);
    for (int u : {1, -1}) {
      CHECK((f * g).eval_at_unit(u) == f.eval_at_unit(u) * g.eval_at_unit(u));
      CHECK((f + g).eval_at_unit(u) == f.eval_at_unit(u) + g.eval_at_unit(u));
    }
  }
}

TEST_CASE("reduce_mod_t2 respects the residue ring product") {
  SplitMix64 rng(2004);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentPoly f = oracle::random_laurent(rng, 4, 3, 5);
    LaurentPoly g = oracle::random_laurent(rng, 4, 3, 5);
    auto [b1, a1] = f.reduce_mod_t2();
    auto [b2, a2] = g.reduce_mod_t2();
    auto [bp, ap] = (f * g).reduce_mod_t2();
    CHECK(bp == b1 * b2 + a1 * a2);
    CHECK(ap == a1 * b2 + a2 * b1);
  }
}

TEST_CASE("companion_embed is functorial for matrix products") {
  SplitMix64 rng(2005);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t m = 1 + rng.below(3), k = 1 + rng.below(3), n = 1 + rng.below(3);
    LaurentMatrix a(m, k), b(k, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < k; ++j) a.at(i, j) = oracle::random_laurent(rng, 3, 2, 4);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) b.at(i, j) = oracle::random_laurent(rng, 3, 2, 4);
    CHECK(companion_embed(a * b) == companion_embed(a) * companion_embed(b));
  }
}

TEST_CASE("value zero at t=1 is exactly divisibility by t-1") {
  SplitMix64 rng(2006);
  int divisible_seen = 0;
  for (int trial = 0; trial < 120; ++trial) {
    LaurentPoly f = oracle::random_laurent(rng, 5, 4, 4);
    if (trial % 3 == 0) f = f * (T - ONE);  // force some positives
    bool by_eval = f.eval_at_unit(1) == 0;
    bool by_division = oracle::divisible_by_t_minus_1(f);
    CHECK(by_eval == by_division);
    if (by_division) ++divisible_seen;
  }
  CHECK(divisible_seen >= 40);
}

TEST_CASE("is_unit recognizes exactly the monomials with coefficient +-1") {
  CHECK(LaurentPoly::t(-3).is_unit());
  CHECK(LaurentPoly::monomial(-1, 7).is_unit());
  CHECK(!LaurentPoly::monomial(2, 1).is_unit());
  CHECK(!(T + ONE).is_unit());
  CHECK(!LaurentPoly().is_unit());
}
