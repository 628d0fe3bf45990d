#pragma once
#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "covhom/error.hpp"

namespace covhom {

using Int = mpz_class;

Int int_gcd(const Int& a, const Int& b);

/// Dense matrix of arbitrary-precision integers. Shapes with 0 rows or
/// 0 columns are legal and denote zero maps to or from the zero module.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Smith normal form with unimodular certificates: left * A * right is the
/// diagonal matrix carrying diag, diag entries are nonnegative, zeros trail,
/// and each nonzero entry divides the next.
struct SmithForm {
  std::vector<Int> diag;  // length min(rows, cols)
  IntMatrix left;         // rows x rows, |det| = 1
  IntMatrix right;        // cols x cols, |det| = 1
};

SmithForm snf(const IntMatrix& a);

// Number of nonzero invariant factors.
std::size_t rank(const IntMatrix& a);

// Rank of the reduction mod 2, by elimination over the two-element field.
std::size_t rank_mod2(const IntMatrix& a);

/// Finitely generated abelian group in canonical form: Z^rank plus cyclic
/// factors d_1 | d_2 | ... | d_k with every d_j > 1.
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<Int> torsion;

  bool torsion_free() const { return torsion.empty(); }
  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  static AbelianGroup free_of_rank(std::size_t n) { return {n, {}}; }

  bool operator==(const AbelianGroup&) const = default;
};

// Canonical direct sum: ranks add, torsion chains merge back into a single
// divisibility chain.
AbelianGroup direct_sum(const AbelianGroup& g, const AbelianGroup& h);

// Homology at the middle of  Z^a --d_in--> Z^n --d_out--> Z^b.
// Requires d_out * d_in = 0 and matching inner dimension.
AbelianGroup homology_pair(const IntMatrix& d_in, const IntMatrix& d_out);

}  // namespace covhom
