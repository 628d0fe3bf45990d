#pragma once
#include <map>
#include <string>

#include "covhom/int_matrix.hpp"

namespace covhom {

/// Integer Laurent polynomial in one variable t, stored sparsely as
/// exponent -> coefficient with no zero coefficients retained.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long value) { set_term(0, Int(value)); }  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Int& value) { set_term(0, value); } // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Int& coeff, long exp) {
    LaurentPoly p;
    p.set_term(exp, coeff);
    return p;
  }
  static LaurentPoly t(long exp = 1) { return monomial(1, exp); }

  const std::map<long, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(long exp) const;

  // true exactly for +-t^k
  bool is_unit() const;

  LaurentPoly shifted(long k) const;  // multiply by t^k

  Int eval_at_unit(int u) const;  // u must be +1 or -1

  // Class b + a*t in Z[t^pm]/(t^2-1): b collects even exponents, a odd ones.
  struct Residue {
    Int b;
    Int a;
    bool operator==(const Residue&) const = default;
  };
  Residue reduce_mod_t2() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  bool operator==(const LaurentPoly&) const = default;

  std::string str() const;  // human-readable, e.g. "t^-1 - 2 + t"

 private:
  void set_term(long exp, const Int& coeff);
  std::map<long, Int> terms_;
};

using ResidueLinear = LaurentPoly::Residue;

/// Dense matrix of Laurent polynomials.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static LaurentMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  LaurentPoly& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const LaurentPoly& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  bool operator==(const LaurentMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> data_;
};

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);

// Matrix of multiplication by f on Z[t^pm]/(t^2-1) in the basis {1, t}:
// [[b, a], [a, b]] for f = b + a*t mod (t^2-1).
IntMatrix mult_block(const LaurentPoly& f);

// Blockwise mult_block; doubles both dimensions and respects matrix products.
IntMatrix companion_embed(const LaurentMatrix& m);

// Entrywise evaluation at t = u, u in {+1, -1}.
IntMatrix specialize_matrix(const LaurentMatrix& m, int u);

}  // namespace covhom
