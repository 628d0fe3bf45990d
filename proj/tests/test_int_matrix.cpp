#include <doctest.h>

#include "covhom/int_matrix.hpp"
#include "covhom/rng.hpp"
#include "oracles.hpp"

using namespace covhom;

namespace {

IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = rows.size() ? rows.begin()->size() : 0;
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix diagonal_of(const SmithForm& s, std::size_t rows, std::size_t cols) {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < s.diag.size(); ++i) d.at(i, i) = s.diag[i];
  return d;
}

void check_certificate(const IntMatrix& a) {
  SmithForm s = snf(a);
  CHECK(s.left * a * s.right == diagonal_of(s, a.rows(), a.cols()));
  for (std::size_t i = 0; i + 1 < s.diag.size(); ++i) {
    if (s.diag[i + 1] != 0) {
      REQUIRE(s.diag[i] != 0);
      CHECK(s.diag[i + 1] % s.diag[i] == 0);
    }
    CHECK(s.diag[i] >= 0);
  }
}

std::vector<Int> factors(std::initializer_list<long> vals) {
  std::vector<Int> out;
  for (long v : vals) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("snf of the 2x2 identity") {
  SmithForm s = snf(IntMatrix::identity(2));
  CHECK(s.diag == factors({1, 1}));
}

TEST_CASE("snf of [[2,4],[6,8]] against the minor-gcd oracle") {
  IntMatrix a = from_rows({{2, 4}, {6, 8}});
  CHECK(oracle::minor_gcd(a, 1) == 2);
  CHECK(oracle::minor_gcd(a, 2) == 8);
  CHECK(oracle::invariant_factors_by_minor_gcd(a) == factors({2, 4}));
  SmithForm s = snf(a);
  CHECK(s.diag == factors({2, 4}));
  check_certificate(a);
}

TEST_CASE("snf of the zero 3x2 matrix") {
  SmithForm s = snf(IntMatrix(3, 2));
  CHECK(s.diag == factors({0, 0}));
  check_certificate(IntMatrix(3, 2));
}

TEST_CASE("snf on empty shapes") {
  check_certificate(IntMatrix(0, 0));
  check_certificate(IntMatrix(0, 3));
  check_certificate(IntMatrix(4, 0));
  CHECK(snf(IntMatrix(0, 3)).diag.empty());
}

TEST_CASE("rank basics") {
  CHECK(rank(IntMatrix::identity(5)) == 5);
  CHECK(rank(IntMatrix(3, 4)) == 0);
  CHECK(rank(from_rows({{2, 4}, {6, 8}})) == 2);  // det = -8
}

TEST_CASE("snf certificates and divisibility on random matrices") {
  SplitMix64 rng(1001);
  for (int trial = 0; trial < 80; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, 5, 9);
    check_certificate(a);
    SmithForm s = snf(a);
    Int dl = oracle::det_laplace(s.left);
    Int dr = oracle::det_laplace(s.right);
    CHECK(abs(dl) == 1);
    CHECK(abs(dr) == 1);
  }
}

TEST_CASE("invariant factor products equal minor gcds") {
  SplitMix64 rng(1002);
  for (int trial = 0; trial < 120; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, 5, 9);
    std::vector<Int> expect = oracle::invariant_factors_by_minor_gcd(a);
    CHECK(snf(a).diag == expect);
  }
}

TEST_CASE("snf diag is invariant under unimodular row and column mixes") {
  SplitMix64 rng(1003);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, 4, 7);
    IntMatrix u = oracle::random_unimodular(rng, a.rows(), 6);
    IntMatrix v = oracle::random_unimodular(rng, a.cols(), 6);
    CHECK(snf(u * a * v).diag == snf(a).diag);
  }
}

TEST_CASE("rank_mod2 agrees with integer rank on odd-determinant samples") {
  CHECK(rank_mod2(IntMatrix::identity(4)) == 4);
  CHECK(rank_mod2(from_rows({{2, 4}, {6, 8}})) == 0);
  CHECK(rank_mod2(from_rows({{1, 2}, {2, 1}})) == 2);
  CHECK(rank_mod2(from_rows({{1, 3}, {3, 1}})) == 1);  // det -8 is even
  CHECK(rank_mod2(from_rows({{1, 1}, {1, 1}})) == 1);
}

TEST_CASE("homology_pair: multiplication by 2 on Z") {
  AbelianGroup g = homology_pair(from_rows({{2}}), IntMatrix(0, 1));
  CHECK(g.rank == 0);
  CHECK(g.torsion == factors({2}));
}

TEST_CASE("homology_pair: free module of rank 3") {
  AbelianGroup g = homology_pair(IntMatrix(3, 0), IntMatrix(0, 3));
  CHECK(g == AbelianGroup::free_of_rank(3));
}

TEST_CASE("homology_pair: diagonal (2,6) cokernel") {
  IntMatrix d_in = from_rows({{2, 0}, {0, 6}});
  CHECK(oracle::invariant_factors_by_minor_gcd(d_in) == factors({2, 6}));
  AbelianGroup g = homology_pair(d_in, IntMatrix(0, 2));
  CHECK(g.rank == 0);
  CHECK(g.torsion == factors({2, 6}));
}

TEST_CASE("homology_pair rejects nonzero compositions and shape clashes") {
  CHECK_THROWS_WITH_AS(homology_pair(from_rows({{3}}), from_rows({{2}})),
                       doctest::Contains("nonzero at (0,0)"), Error);
  try {
    homology_pair(from_rows({{1}}), IntMatrix(0, 2));
    FAIL("expected ShapeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == errc::shape_mismatch);
  }
}

TEST_CASE("zero pair gives the full free group") {
  for (std::size_t n : {0u, 1u, 4u}) {
    AbelianGroup g = homology_pair(IntMatrix(n, 0), IntMatrix(0, n));
    CHECK(g == AbelianGroup::free_of_rank(n));
  }
}

TEST_CASE("direct_sum renormalizes torsion chains") {
  AbelianGroup a{1, factors({2})};
  AbelianGroup b{2, factors({3})};
  AbelianGroup s = direct_sum(a, b);
  CHECK(s.rank == 3);
  CHECK(s.torsion == factors({6}));

  AbelianGroup c{0, factors({2, 6})};
  AbelianGroup d{0, factors({4})};
  CHECK(direct_sum(c, d).torsion == factors({2, 2, 12}));

  CHECK(direct_sum(AbelianGroup::free_of_rank(2), AbelianGroup{}) ==
        AbelianGroup::free_of_rank(2));
}

TEST_CASE("direct_sum is associative and commutative on random chains") {
  SplitMix64 rng(1004);
  for (int trial = 0; trial < 30; ++trial) {
    auto random_group = [&]() {
      AbelianGroup g;
      g.rank = rng.below(3);
      Int d(static_cast<long>(rng.range(2, 5)));
      std::size_t k = rng.below(3);
      for (std::size_t i = 0; i < k; ++i) {
        g.torsion.push_back(d);
        d *= static_cast<long>(rng.range(1, 3));
      }
      return g;
    };
    AbelianGroup x = random_group(), y = random_group(), z = random_group();
    CHECK(direct_sum(x, y) == direct_sum(y, x));
    CHECK(direct_sum(direct_sum(x, y), z) == direct_sum(x, direct_sum(y, z)));
  }
}
