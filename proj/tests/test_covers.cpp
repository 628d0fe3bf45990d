#include <doctest.h>

#include "covhom/covers.hpp"
#include "covhom/rng.hpp"
#include "oracles.hpp"

using namespace covhom;

namespace {

const LaurentPoly T = LaurentPoly::t();
const LaurentPoly ONE = LaurentPoly(1);
const LaurentPoly TM1 = T - ONE;

IntMatrix int_rows(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

AbelianGroup grp(std::size_t rank, std::initializer_list<long> torsion) {
  AbelianGroup g;
  g.rank = rank;
  for (long v : torsion) g.torsion.emplace_back(v);
  return g;
}

EquivariantComplex circle_cover(const LaurentPoly& entry) {
  LaurentMatrix d(1, 1);
  d.at(0, 0) = entry;
  return EquivariantComplex{{1, 1}, {d}};
}

// (t-1) times an integer matrix
LaurentMatrix tm1_times(const IntMatrix& m) {
  LaurentMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0)
        out.at(i, j) = LaurentPoly::monomial(m.at(i, j), 1) - LaurentPoly(m.at(i, j));
  return out;
}

}  // namespace

TEST_CASE("local_system_complex evaluates at t = -1") {
  EquivariantComplex c = circle_cover(TM1);
  CHECK(local_system_complex(c).d(1) == int_rows({{-2}}));

  SplitMix64 rng(4001);
  for (int trial = 0; trial < 10; ++trial) {
    EquivariantComplex m = random_minimal(rng.next(), 4, 5, 4);
    IntComplex local = local_system_complex(m);
    for (const IntMatrix& b : local.boundaries)
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
          CHECK(mpz_even_p(b.at(i, j).get_mpz_t()));
  }
}

TEST_CASE("halved_complex divides by two and flags odd entries") {
  IntComplex even{{1, 1}, {int_rows({{-2}})}};
  CHECK(halved_complex(even).d(1) == int_rows({{-1}}));

  IntComplex zero{{2, 2}, {IntMatrix(2, 2)}};
  CHECK(halved_complex(zero).d(1).is_zero());

  IntComplex odd{{1, 1}, {int_rows({{3}})}};
  try {
    halved_complex(odd);
    FAIL("expected OddEntry");
  } catch (const Error& e) {
    CHECK(e.code() == errc::odd_entry);
    CHECK(std::string(e.what()).find("(0,0)") != std::string::npos);
  }
}

TEST_CASE("formula equals oracle on the circle") {
  EquivariantComplex c = circle_cover(TM1);
  // halved local boundary is [[-1]]: both halved groups vanish
  HomologyProfile formula = cover_homology_formula(c);
  HomologyProfile direct = cover_homology_direct(c);
  CHECK(formula == HomologyProfile{grp(1, {}), grp(1, {})});
  CHECK(direct == formula);
}

TEST_CASE("formula equals oracle on the doubled circle class") {
  EquivariantComplex c = circle_cover(TM1 * LaurentPoly(2));
  // doubled boundary [[-2,2],[2,-2]] has invariant factors (2,0)
  CHECK(oracle::invariant_factors_by_minor_gcd(double_cover_complex(c).d(1)) ==
        std::vector<Int>{Int(2), Int(0)});
  HomologyProfile direct = cover_homology_direct(c);
  CHECK(direct == HomologyProfile{grp(1, {2}), grp(1, {})});
  CHECK(cover_homology_formula(c) == direct);
}

TEST_CASE("zero-boundary complexes are rejected as trivial characters") {
  EquivariantComplex zero{{1, 3}, {LaurentMatrix(1, 3)}};
  try {
    cover_homology_formula(zero);
    FAIL("expected ZeroOmega");
  } catch (const Error& e) {
    CHECK(e.code() == errc::zero_omega);
  }
  // boundary divisible by t^2-1 dies at both units: still a trivial character
  EquivariantComplex both = circle_cover(LaurentPoly::t(2) - ONE);
  CHECK(is_minimal(both));
  CHECK_THROWS_AS(verify_theorem(both), Error);

  EquivariantComplex point{{1}, {}};
  CHECK_THROWS_AS(verify_theorem(point), Error);
}

TEST_CASE("non-minimal inputs are rejected with a witness") {
  EquivariantComplex c = circle_cover(T + ONE);
  try {
    verify_theorem(c);
    FAIL("expected NotMinimal");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_minimal);
    CHECK(std::string(e.what()).find("(0,0)") != std::string::npos);
  }
}

TEST_CASE("verify_theorem on seeded minimal complexes") {
  SplitMix64 rng(4002);
  for (int trial = 0; trial < 30; ++trial) {
    EquivariantComplex c = random_minimal(rng.next(), 4, 6, 5);
    PipelineReport rep = verify_theorem(c);
    CHECK(rep.theorem_holds);
    CHECK(rep.corollary2_consistent);
    CHECK(rep.mod2_consistent);
    REQUIRE(rep.h_cover_formula.has_value());
    CHECK(*rep.h_cover_formula == rep.h_cover_direct);

    // the base profile of a minimal complex is free on the cell ranks
    for (std::size_t i = 0; i < c.ranks.size(); ++i)
      CHECK(rep.h_base[i] == AbelianGroup::free_of_rank(c.ranks[i]));

    // torsion refinement: direct torsion equals halved torsion degreewise
    for (std::size_t i = 0; i < c.ranks.size(); ++i)
      CHECK(rep.h_cover_direct[i].torsion == rep.h_half[i].torsion);

    // rank identity: rank H_i(cover) = ranks[i] + rank H_i(halved)
    for (std::size_t i = 0; i < c.ranks.size(); ++i)
      CHECK(rep.h_cover_direct[i].rank == c.ranks[i] + rep.h_half[i].rank);

    // degree-zero contract for a connected space with nontrivial character
    CHECK(rep.h_local[0] == grp(0, {2}));
    CHECK(rep.h_half[0] == grp(0, {}));
  }
}

TEST_CASE("verify_theorem after reduction of a disguised instance") {
  SplitMix64 rng(4003);
  for (int trial = 0; trial < 10; ++trial) {
    EquivariantComplex c = random_minimal(rng.next(), 4, 5, 4);
    EquivariantComplex r = unit_reduce(disguise(c, rng.next()));
    REQUIRE(is_minimal(r));
    PipelineReport rep = verify_theorem(r);
    CHECK(rep.theorem_holds);
    CHECK(rep.h_cover_direct == verify_theorem(c).h_cover_direct);
  }
}

TEST_CASE("corollary 1 translation: the published arrangement instance") {
  AbelianGroup local = grp(0, {2, 2, 2, 2, 2, 2, 2, 2, 2});  // (Z/2)^9
  AbelianGroup cover = corollary1_forward(local, 10);
  CHECK(cover == grp(10, {}));
  CHECK(corollary1_backward(cover, 10) == local);
}

TEST_CASE("corollary 1 forward shapes") {
  // k = 1, d_1 = 2, r = 0 with b1 = 5
  AbelianGroup local = grp(0, {2, 2, 2, 4});
  CHECK(corollary1_forward(local, 5) == grp(5, {2}));

  // r = 1, k = 0 with b1 = 5
  CHECK(corollary1_forward(grp(1, {2, 2, 2}), 5) == grp(6, {}));

  // odd torsion cannot arise
  CHECK_THROWS_AS(corollary1_forward(grp(0, {3}), 4), Error);
  // counts must balance
  CHECK_THROWS_AS(corollary1_forward(grp(0, {2, 2}), 10), Error);
}

TEST_CASE("corollary 1 backward shapes") {
  CHECK(corollary1_backward(grp(7, {5}), 7) == grp(0, {2, 2, 2, 2, 2, 10}));
  try {
    corollary1_backward(grp(6, {}), 7);  // rank below b1
    FAIL("expected ShapeViolation");
  } catch (const Error& e) {
    CHECK(e.code() == errc::shape_violation);
  }
}

TEST_CASE("corollary 1 cross-checked on built minimal complexes") {
  const std::size_t b1 = 5;
  // d_2 columns 2e_2, e_3, e_4, e_5: halved boundary diag (2,1,1,1)
  IntMatrix d1(1, b1);
  d1.at(0, 0) = 1;
  IntMatrix d2(b1, 4);
  d2.at(1, 0) = 2;
  d2.at(2, 1) = 1;
  d2.at(3, 2) = 1;
  d2.at(4, 3) = 1;
  EquivariantComplex c{{1, b1, 4}, {tm1_times(d1), tm1_times(d2)}};
  PipelineReport rep = verify_theorem(c);
  CHECK(rep.theorem_holds);
  CHECK(rep.h_local[1] == grp(0, {2, 2, 2, 4}));
  CHECK(rep.h_cover_direct[1] == grp(b1, {2}));
  CHECK(corollary1_forward(rep.h_local[1], b1) == rep.h_cover_direct[1]);
  CHECK(corollary1_backward(rep.h_cover_direct[1], b1) == rep.h_local[1]);

  // zero first column instead: one free generator survives
  IntMatrix d2b(b1, 4);
  d2b.at(2, 1) = 1;
  d2b.at(3, 2) = 1;
  d2b.at(4, 3) = 1;
  EquivariantComplex cb{{1, b1, 4}, {tm1_times(d1), tm1_times(d2b)}};
  PipelineReport repb = verify_theorem(cb);
  CHECK(repb.h_local[1] == grp(1, {2, 2, 2}));
  CHECK(repb.h_cover_direct[1] == grp(b1 + 1, {}));
  CHECK(corollary1_forward(repb.h_local[1], b1) == repb.h_cover_direct[1]);
}

TEST_CASE("corollary 1 roundtrip over the random battery") {
  SplitMix64 rng(4004);
  for (int trial = 0; trial < 25; ++trial) {
    EquivariantComplex c = random_minimal(rng.next(), 4, 6, 5);
    PipelineReport rep = verify_theorem(c);
    const std::size_t b1 = c.ranks[1];
    CHECK(corollary1_forward(rep.h_local[1], b1) == rep.h_cover_direct[1]);
    CHECK(corollary1_backward(rep.h_cover_direct[1], b1) == rep.h_local[1]);
  }
}

TEST_CASE("corollary 2 biconditional") {
  HomologyProfile local = {grp(0, {2}), grp(1, {2, 2})};
  HomologyProfile cover_free = {grp(1, {}), grp(2, {})};
  CHECK(corollary2_check(local, cover_free));

  HomologyProfile local4 = {grp(0, {2}), grp(1, {4})};
  CHECK_FALSE(corollary2_check(local4, cover_free));

  HomologyProfile cover_torsion = {grp(1, {}), grp(2, {3})};
  CHECK_FALSE(corollary2_check(local, cover_torsion));
  CHECK(corollary2_check(local4, cover_torsion));
}

TEST_CASE("uct_mod2_dims") {
  CHECK(uct_mod2_dims({grp(1, {}), grp(2, {})}) == std::vector<std::size_t>{1, 2});
  CHECK(uct_mod2_dims({grp(1, {}), grp(0, {3})}) == std::vector<std::size_t>{1, 0});

  // realize (Z, Z/2, 0) and compare against the direct mod-2 count
  IntComplex realize{{1, 1, 1}, {IntMatrix(1, 1), int_rows({{2}})}};
  HomologyProfile h = homology(realize);
  CHECK(h == HomologyProfile{grp(1, {}), grp(0, {2}), grp(0, {})});
  CHECK(uct_mod2_dims(h) == std::vector<std::size_t>{1, 1, 1});
  CHECK(betti_mod2(realize) == uct_mod2_dims(h));
}
