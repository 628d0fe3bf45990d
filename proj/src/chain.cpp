#include "covhom/chain.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "covhom/rng.hpp"

namespace covhom {

IntMatrix IntComplex::incoming(std::size_t i) const {
  return i < top_degree() ? boundaries[i] : IntMatrix(ranks[i], 0);
}

IntMatrix IntComplex::outgoing(std::size_t i) const {
  return i >= 1 ? boundaries[i - 1] : IntMatrix(0, ranks[0]);
}

namespace {

template <typename Complex>
void validate_shapes(const Complex& c) {
  if (c.ranks.empty())
    fail(errc::shape_mismatch, "complex has no degrees");
  if (c.boundaries.size() + 1 != c.ranks.size())
    fail(errc::shape_mismatch,
         "complex with " + std::to_string(c.ranks.size()) + " degrees carries " +
             std::to_string(c.boundaries.size()) + " boundary maps");
  for (std::size_t i = 1; i < c.ranks.size(); ++i) {
    const auto& m = c.boundaries[i - 1];
    if (m.rows() != c.ranks[i - 1] || m.cols() != c.ranks[i])
      fail(errc::shape_mismatch,
           "boundary d_" + std::to_string(i) + " is " + std::to_string(m.rows()) + "x" +
               std::to_string(m.cols()) + ", expected " + std::to_string(c.ranks[i - 1]) +
               "x" + std::to_string(c.ranks[i]));
  }
}

}  // namespace

void validate_int(const IntComplex& c) {
  validate_shapes(c);
  for (std::size_t i = 1; i + 1 < c.ranks.size(); ++i) {
    IntMatrix prod = c.d(i) * c.d(i + 1);
    for (std::size_t r = 0; r < prod.rows(); ++r)
      for (std::size_t j = 0; j < prod.cols(); ++j)
        if (prod.at(r, j) != 0)
          fail(errc::composition_nonzero,
               "d_" + std::to_string(i) + " * d_" + std::to_string(i + 1) +
                   " nonzero at (" + std::to_string(r) + "," + std::to_string(j) +
                   ") = " + prod.at(r, j).get_str());
  }
}

void validate_equivariant(const EquivariantComplex& c) {
  validate_shapes(c);
  for (std::size_t i = 1; i + 1 < c.ranks.size(); ++i) {
    LaurentMatrix prod = c.d(i) * c.d(i + 1);
    for (std::size_t r = 0; r < prod.rows(); ++r)
      for (std::size_t j = 0; j < prod.cols(); ++j)
        if (!prod.at(r, j).is_zero())
          fail(errc::composition_nonzero,
               "d_" + std::to_string(i) + " * d_" + std::to_string(i + 1) +
                   " nonzero at (" + std::to_string(r) + "," + std::to_string(j) +
                   ") = " + prod.at(r, j).str());
  }
}

HomologyProfile homology(const IntComplex& c) {
  validate_int(c);
  HomologyProfile profile;
  profile.reserve(c.ranks.size());
  for (std::size_t i = 0; i < c.ranks.size(); ++i)
    profile.push_back(homology_pair(c.incoming(i), c.outgoing(i)));
  return profile;
}

IntComplex specialize(const EquivariantComplex& c, int u) {
  validate_equivariant(c);
  IntComplex out;
  out.ranks = c.ranks;
  out.boundaries.reserve(c.boundaries.size());
  for (const LaurentMatrix& m : c.boundaries) out.boundaries.push_back(specialize_matrix(m, u));
  return out;
}

IntComplex double_cover_complex(const EquivariantComplex& c) {
  validate_equivariant(c);
  IntComplex out;
  out.ranks.reserve(c.ranks.size());
  for (std::size_t r : c.ranks) out.ranks.push_back(2 * r);
  out.boundaries.reserve(c.boundaries.size());
  for (const LaurentMatrix& m : c.boundaries) out.boundaries.push_back(companion_embed(m));
  return out;
}

bool is_minimal(const EquivariantComplex& c) {
  validate_equivariant(c);
  for (const LaurentMatrix& m : c.boundaries)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m.at(i, j).eval_at_unit(1) != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// unit_reduce

namespace {

LaurentMatrix erase_row(const LaurentMatrix& m, std::size_t row) {
  LaurentMatrix out(m.rows() - 1, m.cols());
  for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == row) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(oi, j) = m.at(i, j);
    ++oi;
  }
  return out;
}

LaurentMatrix erase_col(const LaurentMatrix& m, std::size_t col) {
  LaurentMatrix out(m.rows(), m.cols() - 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == col) continue;
      out.at(i, oj++) = m.at(i, j);
    }
  return out;
}

std::size_t nonzeros_in_row(const LaurentMatrix& m, std::size_t r) {
  std::size_t n = 0;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!m.at(r, j).is_zero()) ++n;
  return n;
}

std::size_t nonzeros_in_col(const LaurentMatrix& m, std::size_t c) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m.at(i, c).is_zero()) ++n;
  return n;
}

struct Pivot {
  std::size_t bi;  // boundary index, matrix is d_{bi+1}
  std::size_t row, col;
};

// Unit entry minimizing (nonzeros in row) * (nonzeros in column); ties go to
// the lowest (boundary, row, column).
bool find_unit_pivot(const std::vector<LaurentMatrix>& bds, Pivot& out) {
  bool found = false;
  std::size_t best = 0;
  for (std::size_t bi = 0; bi < bds.size(); ++bi) {
    const LaurentMatrix& m = bds[bi];
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!m.at(i, j).is_unit()) continue;
        std::size_t cost = nonzeros_in_row(m, i) * nonzeros_in_col(m, j);
        if (!found || cost < best) {
          found = true;
          best = cost;
          out = {bi, i, j};
        }
      }
  }
  return found;
}

struct Reducer {
  std::vector<std::size_t> ranks;
  std::vector<LaurentMatrix> bds;

  // Cancel the acyclic pair exposed by the unit at (row, col) of d_{bi+1}.
  void eliminate(const Pivot& p) {
    LaurentMatrix& m = bds[p.bi];
    const LaurentPoly u = m.at(p.row, p.col);
    const long exp = u.terms().begin()->first;
    const LaurentPoly u_inv = LaurentPoly::monomial(u.terms().begin()->second, -exp);

    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == p.row || m.at(i, p.col).is_zero()) continue;
      const LaurentPoly factor = m.at(i, p.col) * u_inv;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j == p.col || m.at(p.row, j).is_zero()) continue;
        m.at(i, j) -= factor * m.at(p.row, j);
      }
    }
    bds[p.bi] = erase_col(erase_row(m, p.row), p.col);
    if (p.bi + 1 < bds.size()) bds[p.bi + 1] = erase_row(bds[p.bi + 1], p.col);
    if (p.bi >= 1) bds[p.bi - 1] = erase_col(bds[p.bi - 1], p.row);
    ranks[p.bi + 1] -= 1;
    ranks[p.bi] -= 1;
  }

  // col dst of d_{bi+1} += mult * col src, with the matching row fix above.
  void apply_col_op(std::size_t bi, std::size_t dst, std::size_t src, const LaurentPoly& mult) {
    LaurentMatrix& m = bds[bi];
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) += mult * m.at(i, src);
    if (bi + 1 < bds.size()) {
      LaurentMatrix& up = bds[bi + 1];
      for (std::size_t j = 0; j < up.cols(); ++j) up.at(src, j) -= mult * up.at(dst, j);
    }
  }

  // row dst of d_{bi+1} += mult * row src, with the matching column fix below.
  void apply_row_op(std::size_t bi, std::size_t dst, std::size_t src, const LaurentPoly& mult) {
    LaurentMatrix& m = bds[bi];
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += mult * m.at(src, j);
    if (bi >= 1) {
      LaurentMatrix& down = bds[bi - 1];
      for (std::size_t i = 0; i < down.rows(); ++i) down.at(i, src) -= mult * down.at(i, dst);
    }
  }

  // Exponent shifts that can align the support of `moving` against `fixed`.
  static std::set<long> shift_candidates(const LaurentPoly& fixed, const LaurentPoly& moving) {
    std::set<long> ks;
    for (const auto& [ef, _cf] : fixed.terms())
      for (const auto& [em, _cm] : moving.terms()) ks.insert(ef - em);
    return ks;
  }

  struct HuntOp {
    std::size_t bi = 0;
    bool is_col = false;
    std::size_t dst = 0, src = 0;
    LaurentPoly mult;
  };

  void apply(const HuntOp& op) {
    if (op.is_col)
      apply_col_op(op.bi, op.dst, op.src, op.mult);
    else
      apply_row_op(op.bi, op.dst, op.src, op.mult);
  }

  static long term_count(const LaurentPoly& p) { return static_cast<long>(p.terms().size()); }

  // Effect of one elementary op: does the changed line gain a unit entry, and
  // how does the total term count move (counting the paired fix next door)?
  struct Outcome {
    bool exposes_unit = false;
    long delta = 0;
  };

  Outcome probe(const HuntOp& op) const {
    Outcome out;
    const LaurentMatrix& m = bds[op.bi];
    if (op.is_col) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        LaurentPoly v = m.at(i, op.dst) + op.mult * m.at(i, op.src);
        if (v.is_unit()) out.exposes_unit = true;
        out.delta += term_count(v) - term_count(m.at(i, op.dst));
      }
      if (op.bi + 1 < bds.size()) {
        const LaurentMatrix& up = bds[op.bi + 1];
        for (std::size_t j = 0; j < up.cols(); ++j) {
          LaurentPoly v = up.at(op.src, j) - op.mult * up.at(op.dst, j);
          out.delta += term_count(v) - term_count(up.at(op.src, j));
        }
      }
    } else {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        LaurentPoly v = m.at(op.dst, j) + op.mult * m.at(op.src, j);
        if (v.is_unit()) out.exposes_unit = true;
        out.delta += term_count(v) - term_count(m.at(op.dst, j));
      }
      if (op.bi >= 1) {
        const LaurentMatrix& down = bds[op.bi - 1];
        for (std::size_t i = 0; i < down.rows(); ++i) {
          LaurentPoly v = down.at(i, op.src) - op.mult * down.at(i, op.dst);
          out.delta += term_count(v) - term_count(down.at(i, op.src));
        }
      }
    }
    return out;
  }

  template <typename Fn>
  void for_each_candidate(Fn&& fn) const {
    for (std::size_t bi = 0; bi < bds.size(); ++bi) {
      const LaurentMatrix& m = bds[bi];
      for (std::size_t dst = 0; dst < m.cols(); ++dst)
        for (std::size_t src = 0; src < m.cols(); ++src) {
          if (src == dst) continue;
          std::set<long> ks;
          for (std::size_t i = 0; i < m.rows(); ++i) {
            auto local = shift_candidates(m.at(i, dst), m.at(i, src));
            ks.insert(local.begin(), local.end());
          }
          for (long k : ks)
            for (int sign : {1, -1})
              fn(HuntOp{bi, true, dst, src, LaurentPoly::monomial(sign, k)});
        }
      for (std::size_t dst = 0; dst < m.rows(); ++dst)
        for (std::size_t src = 0; src < m.rows(); ++src) {
          if (src == dst) continue;
          std::set<long> ks;
          for (std::size_t j = 0; j < m.cols(); ++j) {
            auto local = shift_candidates(m.at(dst, j), m.at(src, j));
            ks.insert(local.begin(), local.end());
          }
          for (long k : ks)
            for (int sign : {1, -1})
              fn(HuntOp{bi, false, dst, src, LaurentPoly::monomial(sign, k)});
        }
    }
  }

  // When no entry is a unit outright, either expose one with a single
  // elementary basis change, or take the change that shrinks the total term
  // count the most and look again. Strict descent bounds the loop.
  bool hunt() {
    for (;;) {
      bool exposed = false;
      bool improved = false;
      HuntOp best;
      long best_delta = 0;
      for_each_candidate([&](const HuntOp& op) {
        if (exposed) return;
        Outcome out = probe(op);
        if (out.exposes_unit) {
          exposed = true;
          best = op;
          return;
        }
        if (out.delta < best_delta) {
          improved = true;
          best = op;
          best_delta = out.delta;
        }
      });
      if (exposed) {
        apply(best);
        return true;
      }
      if (!improved) return false;
      apply(best);
    }
  }
};

}  // namespace

EquivariantComplex unit_reduce(const EquivariantComplex& c) {
  validate_equivariant(c);
  Reducer red{c.ranks, c.boundaries};
  for (;;) {
    Pivot p{0, 0, 0};
    if (find_unit_pivot(red.bds, p)) {
      red.eliminate(p);
      continue;
    }
    if (red.hunt()) continue;  // a hunt always exposes a unit for the next pass
    break;
  }
  return EquivariantComplex{std::move(red.ranks), std::move(red.bds)};
}

// ---------------------------------------------------------------------------
// generators

namespace {

IntMatrix random_int_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = Int(static_cast<long>(rng.range(-bound, bound)));
  return m;
}

// Basis of the kernel lattice of a, as columns.
IntMatrix kernel_basis(const IntMatrix& a) {
  SmithForm s = snf(a);
  std::size_t rk = 0;
  for (const Int& v : s.diag)
    if (v != 0) ++rk;
  IntMatrix out(a.cols(), a.cols() - rk);
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = rk; j < a.cols(); ++j) out.at(i, j - rk) = s.right.at(i, j);
  return out;
}

Int content(const IntMatrix& m) {
  Int g = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g = int_gcd(g, m.at(i, j));
  return g;
}

}  // namespace

EquivariantComplex random_minimal(std::uint64_t seed, std::size_t max_degree,
                                  std::size_t max_rank, long coeff_bound) {
  assert(max_degree >= 1 && max_rank >= 1 && coeff_bound >= 1);
  SplitMix64 rng(seed);
  const std::size_t n = 1 + rng.below(max_degree);

  std::vector<std::size_t> ranks(n + 1);
  ranks[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) ranks[i] = 1 + rng.below(max_rank);

  std::vector<IntMatrix> ints;
  ints.reserve(n);
  IntMatrix d1(1, ranks[1]);
  for (int attempt = 0; attempt < 64; ++attempt) {
    d1 = random_int_matrix(rng, 1, ranks[1], coeff_bound);
    if (content(d1) == 1) break;
  }
  if (content(d1) != 1) d1.at(0, 0) = 1;
  ints.push_back(d1);

  for (std::size_t i = 2; i <= n; ++i) {
    IntMatrix k = kernel_basis(ints.back());
    IntMatrix w = random_int_matrix(rng, k.cols(), ranks[i], coeff_bound);
    ints.push_back(k * w);
  }

  EquivariantComplex c;
  c.ranks = ranks;
  c.boundaries.reserve(n);
  for (const IntMatrix& d : ints) {
    long shift = rng.range(-2, 2);
    LaurentMatrix m(d.rows(), d.cols());
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t col = 0; col < d.cols(); ++col)
        if (d.at(r, col) != 0)
          m.at(r, col) = LaurentPoly::monomial(d.at(r, col), shift + 1) -
                         LaurentPoly::monomial(d.at(r, col), shift);
    c.boundaries.push_back(std::move(m));
  }
  validate_equivariant(c);
  return c;
}

EquivariantComplex disguise(const EquivariantComplex& c, std::uint64_t seed) {
  validate_equivariant(c);
  SplitMix64 rng(seed);
  Reducer red{c.ranks, c.boundaries};
  const std::size_t n = red.ranks.size() - 1;

  std::size_t total = 0;
  for (std::size_t r : red.ranks) total += r;
  const std::size_t nops = total + rng.below(total + 1);
  const std::size_t stab_at = rng.below(nops + 1);

  auto basis_change = [&](std::size_t) {
    const std::size_t g = rng.below(n + 1);
    const std::size_t kind = rng.below(4);
    const std::size_t dim = red.ranks[g];
    if (kind <= 1) {  // transvection
      if (dim < 2) return;
      std::size_t dst = rng.below(dim);
      std::size_t src = rng.below(dim - 1);
      if (src >= dst) ++src;
      LaurentPoly mult = LaurentPoly::monomial(rng.flip() ? 1 : -1, rng.range(-1, 1));
      if (g == 0)
        red.apply_row_op(0, dst, src, mult);
      else
        red.apply_col_op(g - 1, dst, src, mult);
    } else if (kind == 2) {  // swap
      if (dim < 2) return;
      std::size_t x = rng.below(dim);
      std::size_t y = rng.below(dim - 1);
      if (y >= x) ++y;
      if (g >= 1) {
        LaurentMatrix& m = red.bds[g - 1];
        for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, x), m.at(i, y));
      }
      if (g < n) {
        LaurentMatrix& m = red.bds[g];
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(x, j), m.at(y, j));
      }
    } else {  // scale by a unit
      if (dim == 0) return;
      std::size_t x = rng.below(dim);
      long k = rng.range(-1, 1);
      int sign = rng.flip() ? 1 : -1;
      if (g >= 1) {
        LaurentMatrix& m = red.bds[g - 1];
        LaurentPoly u = LaurentPoly::monomial(sign, k);
        for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, x) = m.at(i, x) * u;
      }
      if (g < n) {
        LaurentMatrix& m = red.bds[g];
        LaurentPoly u_inv = LaurentPoly::monomial(sign, -k);
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(x, j) = m.at(x, j) * u_inv;
      }
    }
  };

  auto stabilize = [&]() {
    const std::size_t g = 1 + rng.below(n);
    const LaurentPoly u = LaurentPoly::monomial(rng.flip() ? 1 : -1, rng.range(-1, 1));
    LaurentMatrix& m = red.bds[g - 1];
    LaurentMatrix grown(m.rows() + 1, m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) grown.at(i, j) = m.at(i, j);
    grown.at(m.rows(), m.cols()) = u;
    red.bds[g - 1] = std::move(grown);
    if (g >= 2) {  // C_{g-1} grew: zero column on d_{g-1}
      LaurentMatrix& down = red.bds[g - 2];
      LaurentMatrix wider(down.rows(), down.cols() + 1);
      for (std::size_t i = 0; i < down.rows(); ++i)
        for (std::size_t j = 0; j < down.cols(); ++j) wider.at(i, j) = down.at(i, j);
      red.bds[g - 2] = std::move(wider);
    }
    if (g < n) {  // C_g grew: zero row on d_{g+1}
      LaurentMatrix& up = red.bds[g];
      LaurentMatrix taller(up.rows() + 1, up.cols());
      for (std::size_t i = 0; i < up.rows(); ++i)
        for (std::size_t j = 0; j < up.cols(); ++j) taller.at(i, j) = up.at(i, j);
      red.bds[g] = std::move(taller);
    }
    red.ranks[g] += 1;
    red.ranks[g - 1] += 1;
  };

  for (std::size_t op = 0; op <= nops; ++op) {
    if (op == stab_at)
      stabilize();
    if (op < nops)
      basis_change(op);
  }

  EquivariantComplex out{std::move(red.ranks), std::move(red.bds)};
  validate_equivariant(out);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

template <typename Complex, typename Matrix>
Complex block_sum(const Complex& a, const Complex& b) {
  Complex out;
  const std::size_t len = std::max(a.ranks.size(), b.ranks.size());
  auto rank_of = [](const Complex& c, std::size_t i) {
    return i < c.ranks.size() ? c.ranks[i] : 0;
  };
  out.ranks.resize(len);
  for (std::size_t i = 0; i < len; ++i) out.ranks[i] = rank_of(a, i) + rank_of(b, i);
  for (std::size_t i = 1; i < len; ++i) {
    Matrix m(out.ranks[i - 1], out.ranks[i]);
    if (i < a.ranks.size()) {
      const Matrix& da = a.d(i);
      for (std::size_t r = 0; r < da.rows(); ++r)
        for (std::size_t col = 0; col < da.cols(); ++col) m.at(r, col) = da.at(r, col);
    }
    if (i < b.ranks.size()) {
      const Matrix& db = b.d(i);
      for (std::size_t r = 0; r < db.rows(); ++r)
        for (std::size_t col = 0; col < db.cols(); ++col)
          m.at(rank_of(a, i - 1) + r, rank_of(a, i) + col) = db.at(r, col);
    }
    out.boundaries.push_back(std::move(m));
  }
  return out;
}

}  // namespace

IntComplex direct_sum(const IntComplex& a, const IntComplex& b) {
  return block_sum<IntComplex, IntMatrix>(a, b);
}

EquivariantComplex direct_sum(const EquivariantComplex& a, const EquivariantComplex& b) {
  return block_sum<EquivariantComplex, LaurentMatrix>(a, b);
}

std::vector<std::size_t> betti_mod2(const IntComplex& c) {
  validate_int(c);
  std::vector<std::size_t> dims(c.ranks.size());
  for (std::size_t i = 0; i < c.ranks.size(); ++i)
    dims[i] = c.ranks[i] - rank_mod2(c.outgoing(i)) - rank_mod2(c.incoming(i));
  return dims;
}

}  // namespace covhom
