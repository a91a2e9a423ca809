#pragma once

// Multivariate polynomials in the commuting variables U_1..U_n with integer
// coefficients, plus the two quotient-ring normal forms used throughout:
// deletion modulo a squarefree monomial ideal, and rewriting modulo the
// ideal I_b generated by complete homogeneous pieces h_{b_i}(U_1..U_i).

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "forkalg/laurent.hpp"

namespace forkalg {

/// Monomial as an exponent vector of fixed length n.  q-degree is twice the
/// exponent sum (each variable sits in q-degree 2).
struct UMono {
  std::vector<int> e;

  explicit UMono(int n = 0) : e(n, 0) {}
  explicit UMono(std::vector<int> exps) : e(std::move(exps)) {}
  static UMono var(int n, int i, int pow = 1);  // U_i^pow, i is 1-based

  int n() const { return (int)e.size(); }
  int total() const;
  int qdeg() const { return 2 * total(); }
  bool is_one() const { return total() == 0; }
  bool divisible_by(const UMono& d) const;
  UMono operator*(const UMono& o) const;
  UMono divided_by(const UMono& d) const;  // pre: divisible_by(d)

  bool operator==(const UMono&) const = default;
  // Graded order with U_n heaviest: compare by total degree, then
  // lexicographically from the last variable down.
  std::strong_ordering operator<=>(const UMono& o) const;

  std::string str() const;
};

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(int n, long c = 0) : n_(n) { if (c != 0) t_[UMono(n)] = c; }
  static UPoly mono(const UMono& m, Int c = 1);

  int n() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<UMono, Int>& terms() const { return t_; }
  Int coeff(const UMono& m) const;

  UPoly operator-() const;
  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const Int& c) const;
  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  bool operator==(const UPoly&) const = default;

  /// Largest q-degree among terms; -1 when zero.
  int max_qdeg() const;
  bool is_homogeneous() const;
  UPoly homogeneous_part(int qdeg) const;
  UPoly truncated(int qdeg_cap) const;

  /// Generating function of terms: sum of coeff * q^(qdeg of monomial).
  Laurent poincare() const;

  std::string str() const;

 private:
  int n_ = 0;
  std::map<UMono, Int> t_;
};

enum class SymKind { elementary, complete };

/// e_j or h_j in the named subset of variables (1-based), inside n variables.
/// Elementary with j > |vars| is the zero polynomial.
UPoly sym_poly(SymKind kind, int j, const std::vector<int>& vars, int n);

/// Delete every term divisible by one of the generators.
UPoly reduce_mod_monomial_ideal(const UPoly& p, const std::vector<UMono>& gens);

/// b-sequences: weakly decreasing positive integers with unit steps,
/// b_i >= b_{i+1} >= b_i - 1.  The quotient by I_b = (h_{b_i}(U_1..U_i))_i
/// has the monomial basis { U^j : j_i < b_i } of total rank b_1 ... b_n.
struct BSeq {
  std::vector<int> b;

  explicit BSeq(std::vector<int> v);
  int n() const { return (int)b.size(); }
  Int rank() const;
  Laurent graded_rank() const;  // prod_i (b_i)_{q^2}
  bool admits(const UMono& m) const;
  /// All basis monomials, optionally only those of the given q-degree.
  std::vector<UMono> basis(int qdeg = -1) const;
};

/// Normal form modulo I_b: iterated rewriting U_i^{b_i} -> U_i^{b_i} -
/// h_{b_i}(U_1..U_i), which strictly descends in the graded order above and
/// lands in the span of the basis monomials.
UPoly reduce_mod_Ib(const UPoly& p, const BSeq& b);

/// All monomials in n variables with exponent sum <= maxtotal, in order.
std::vector<UMono> monomials_up_to(int n, int maxtotal);

/// Monomials of exponent sum exactly total satisfying the predicate.
std::vector<UMono> monomials_of_total(int n, int total,
                                      const std::function<bool(const UMono&)>& keep = {});

}  // namespace forkalg
