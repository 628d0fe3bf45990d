#include "covhom/int_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace covhom {

Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  for (const Int& v : data_)
    if (v != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    fail(errc::shape_mismatch, "matrix product: " + std::to_string(a.cols()) +
                                   " columns against " + std::to_string(b.rows()) + " rows");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
}

// row i -= q * row j
void row_submul(IntMatrix& m, std::size_t i, std::size_t j, const Int& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) m.at(i, c) -= q * m.at(j, c);
}

// col i -= q * col j
void col_submul(IntMatrix& m, std::size_t i, std::size_t j, const Int& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, i) -= q * m.at(r, j);
}

void row_add(IntMatrix& m, std::size_t i, std::size_t j) {
  for (std::size_t c = 0; c < m.cols(); ++c) m.at(i, c) += m.at(j, c);
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
}

// Nonzero entry of minimal absolute value in the trailing block, lowest row
// then column on ties. Returns false if the block is zero.
bool find_pivot(const IntMatrix& m, std::size_t s, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Int best;
  for (std::size_t i = s; i < m.rows(); ++i)
    for (std::size_t j = s; j < m.cols(); ++j) {
      const Int& v = m.at(i, j);
      if (v == 0) continue;
      Int a = abs(v);
      if (!found || a < best) {
        found = true;
        best = a;
        pr = i;
        pc = j;
      }
    }
  return found;
}

}  // namespace

SmithForm snf(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix d = a;
  IntMatrix left = IntMatrix::identity(m);
  IntMatrix right = IntMatrix::identity(n);
  const std::size_t lim = std::min(m, n);

  for (std::size_t s = 0; s < lim; ++s) {
    std::size_t pr = s, pc = s;
    if (!find_pivot(d, s, pr, pc)) break;  // trailing block is zero

    for (;;) {
      find_pivot(d, s, pr, pc);
      swap_rows(d, s, pr);
      swap_rows(left, s, pr);
      swap_cols(d, s, pc);
      swap_cols(right, s, pc);

      // clear the pivot column, then the pivot row; truncated division keeps
      // remainders strictly below the pivot, so re-pivoting terminates
      bool clean = true;
      for (std::size_t i = s + 1; i < m; ++i) {
        if (d.at(i, s) == 0) continue;
        Int q = d.at(i, s) / d.at(s, s);
        if (q != 0) {
          row_submul(d, i, s, q);
          row_submul(left, i, s, q);
        }
        if (d.at(i, s) != 0) clean = false;
      }
      if (!clean) continue;
      for (std::size_t j = s + 1; j < n; ++j) {
        if (d.at(s, j) == 0) continue;
        Int q = d.at(s, j) / d.at(s, s);
        if (q != 0) {
          col_submul(d, j, s, q);
          col_submul(right, j, s, q);
        }
        if (d.at(s, j) != 0) clean = false;
      }
      if (!clean) continue;

      // enforce divisibility of the trailing block by the pivot
      bool divides = true;
      for (std::size_t i = s + 1; i < m && divides; ++i)
        for (std::size_t j = s + 1; j < n && divides; ++j)
          if (d.at(i, j) % d.at(s, s) != 0) {
            row_add(d, s, i);
            row_add(left, s, i);
            divides = false;
          }
      if (divides) break;
    }

    if (d.at(s, s) < 0) {
      negate_row(d, s);
      negate_row(left, s);
    }
  }

  SmithForm out;
  out.diag.resize(lim);
  for (std::size_t i = 0; i < lim; ++i) out.diag[i] = d.at(i, i);
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

std::size_t rank(const IntMatrix& a) {
  SmithForm s = snf(a);
  std::size_t r = 0;
  for (const Int& v : s.diag)
    if (v != 0) ++r;
  return r;
}

std::size_t rank_mod2(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::vector<unsigned char>> bits(m, std::vector<unsigned char>(n, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) bits[i][j] = mpz_odd_p(a.at(i, j).get_mpz_t()) ? 1 : 0;

  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < m; ++j) {
    std::size_t piv = r;
    while (piv < m && !bits[piv][j]) ++piv;
    if (piv == m) continue;
    std::swap(bits[r], bits[piv]);
    for (std::size_t i = 0; i < m; ++i)
      if (i != r && bits[i][j])
        for (std::size_t k = j; k < n; ++k) bits[i][k] ^= bits[r][k];
    ++r;
  }
  return r;
}

AbelianGroup direct_sum(const AbelianGroup& g, const AbelianGroup& h) {
  AbelianGroup out;
  out.rank = g.rank + h.rank;
  if (g.torsion.empty() || h.torsion.empty()) {
    out.torsion = g.torsion.empty() ? h.torsion : g.torsion;
    return out;
  }
  // renormalize the concatenated factors into one divisibility chain
  const std::size_t k = g.torsion.size() + h.torsion.size();
  IntMatrix d(k, k);
  std::size_t idx = 0;
  for (const Int& v : g.torsion) d.at(idx, idx) = v, ++idx;
  for (const Int& v : h.torsion) d.at(idx, idx) = v, ++idx;
  SmithForm s = snf(d);
  for (const Int& v : s.diag)
    if (v > 1) out.torsion.push_back(v);
  return out;
}

AbelianGroup homology_pair(const IntMatrix& d_in, const IntMatrix& d_out) {
  if (d_out.cols() != d_in.rows())
    fail(errc::shape_mismatch,
         "homology_pair: d_out has " + std::to_string(d_out.cols()) +
             " columns but d_in has " + std::to_string(d_in.rows()) + " rows");
  IntMatrix prod = d_out * d_in;
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j)
      if (prod.at(i, j) != 0)
        fail(errc::composition_nonzero,
             "homology_pair: d_out*d_in nonzero at (" + std::to_string(i) + "," +
                 std::to_string(j) + ") = " + prod.at(i, j).get_str());

  SmithForm s_in = snf(d_in);
  std::size_t rank_in = 0;
  AbelianGroup out;
  for (const Int& v : s_in.diag) {
    if (v != 0) ++rank_in;
    if (v > 1) out.torsion.push_back(v);
  }
  std::size_t rank_out = rank(d_out);
  assert(d_out.cols() >= rank_out + rank_in);
  out.rank = d_out.cols() - rank_out - rank_in;
  return out;
}

}  // namespace covhom
