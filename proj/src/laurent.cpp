#include "covhom/laurent.hpp"

#include <cassert>
#include <cstdlib>

namespace covhom {

void LaurentPoly::set_term(long exp, const Int& coeff) {
  if (coeff == 0)
    terms_.erase(exp);
  else
    terms_[exp] = coeff;
}

Int LaurentPoly::coeff(long exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

bool LaurentPoly::is_unit() const {
  if (terms_.size() != 1) return false;
  const Int& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e + k] = c;
  return out;
}

Int LaurentPoly::eval_at_unit(int u) const {
  assert(u == 1 || u == -1);
  Int sum = 0;
  for (const auto& [e, c] : terms_) {
    if (u == 1 || e % 2 == 0)
      sum += c;
    else
      sum -= c;
  }
  return sum;
}

LaurentPoly::Residue LaurentPoly::reduce_mod_t2() const {
  Residue r{0, 0};
  for (const auto& [e, c] : terms_) {
    if (e % 2 == 0)
      r.b += c;
    else
      r.a += c;
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      long e = ea + eb;
      auto it = out.terms_.find(e);
      if (it == out.terms_.end()) {
        Int prod = ca * cb;
        if (prod != 0) out.terms_.emplace(e, std::move(prod));
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int a = abs(c);
    if (first) {
      if (c < 0) s += "-";
      first = false;
    } else {
      s += c < 0 ? " - " : " + ";
    }
    bool show_coeff = (a != 1) || e == 0;
    if (show_coeff) s += a.get_str();
    if (e != 0) {
      if (show_coeff) s += "*";
      s += "t";
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
  LaurentMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly(1);
  return m;
}

bool LaurentMatrix::is_zero() const {
  for (const LaurentPoly& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols() != b.rows())
    fail(errc::shape_mismatch, "laurent matrix product: " + std::to_string(a.cols()) +
                                   " columns against " + std::to_string(b.rows()) + " rows");
  LaurentMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const LaurentPoly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  return c;
}

IntMatrix mult_block(const LaurentPoly& f) {
  auto [b, a] = f.reduce_mod_t2();
  IntMatrix m(2, 2);
  m.at(0, 0) = b;
  m.at(0, 1) = a;
  m.at(1, 0) = a;
  m.at(1, 1) = b;
  return m;
}

IntMatrix companion_embed(const LaurentMatrix& m) {
  IntMatrix out(2 * m.rows(), 2 * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto [b, a] = m.at(i, j).reduce_mod_t2();
      out.at(2 * i, 2 * j) = b;
      out.at(2 * i, 2 * j + 1) = a;
      out.at(2 * i + 1, 2 * j) = a;
      out.at(2 * i + 1, 2 * j + 1) = b;
    }
  return out;
}

IntMatrix specialize_matrix(const LaurentMatrix& m, int u) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).eval_at_unit(u);
  return out;
}

}  // namespace covhom
