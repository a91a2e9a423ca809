#pragma once

// Exact arithmetic in the variable q: integer Laurent polynomials and the
// rational functions they generate.  Every verification routine in this
// library ultimately compares values of these two types, so equality has to
// be decidable and cheap; see QRat for the canonical form that provides it.

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace forkalg {

using Int = mpz_class;

/// Integer Laurent polynomial in q.  Invariant: no zero coefficients stored.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long v) { if (v != 0) c_[0] = v; }
  Laurent(const Int& v) { if (v != 0) c_[0] = v; }

  /// The monomial coeff * q^e.
  static Laurent term(int e, const Int& coeff);
  static Laurent q(int e = 1) { return term(e, 1); }

  bool is_zero() const { return c_.empty(); }
  bool operator==(const Laurent&) const = default;

  /// Lowest and highest exponents; only meaningful when nonzero.
  int lo() const { return c_.begin()->first; }
  int hi() const { return c_.rbegin()->first; }

  const std::map<int, Int>& terms() const { return c_; }
  Int coeff(int e) const;

  Laurent operator-() const;
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  /// Multiplication by q^e.
  Laurent shifted(int e) const;

  /// Drop all terms of exponent > D.
  Laurent truncated(int D) const;

  /// The bar involution q -> q^{-1}.
  Laurent bar() const;

  /// Substitute q = 1.
  Int at_one() const;

  std::string str() const;

 private:
  std::map<int, Int> c_;
};

/// (k)_{q^2} = 1 + q^2 + ... + q^{2(k-1)}; (0)_{q^2} = 0.
Laurent qnum2(int k);

/// (k)!_{q^2} = (1)_{q^2} (2)_{q^2} ... (k)_{q^2}; empty product for k = 0.
Laurent qfact2(int k);

/// Rational function in q, held as num/den of integer Laurent polynomials.
///
/// Canonical form: den is an honest polynomial (nonzero constant term, its
/// power of q moved into num), num/den is reduced over the rationals, the
/// joint integer content of num and den is 1, and the leading coefficient of
/// den is positive.  Two values are equal iff their representations are.
class QRat {
 public:
  QRat() : num_(), den_(1) {}
  QRat(long v) : num_(v), den_(1) {}
  QRat(const Laurent& l) : num_(l), den_(1) {}
  QRat(const Laurent& num, const Laurent& den);

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const;

  bool operator==(const QRat&) const = default;

  QRat operator-() const;
  QRat operator+(const QRat& o) const;
  QRat operator-(const QRat& o) const;
  QRat operator*(const QRat& o) const;
  QRat operator/(const QRat& o) const;
  QRat& operator+=(const QRat& o) { return *this = *this + o; }
  QRat& operator-=(const QRat& o) { return *this = *this - o; }
  QRat& operator*=(const QRat& o) { return *this = *this * o; }
  QRat& operator/=(const QRat& o) { return *this = *this / o; }

  /// Power-series expansion truncated to q-degree <= D.  Throws
  /// std::domain_error if the expansion does not exist or is not integral.
  Laurent series_truncate(int D) const;

  std::string str() const;

 private:
  Laurent num_;
  Laurent den_{1};
};

}  // namespace forkalg
