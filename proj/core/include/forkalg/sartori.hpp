#pragma once
// Hom spaces between the quotient rings attached to up-down sequences,
// assembled into an algebra under composition.  A term keyed (mu, lambda)
// is a map out of lambda's ring into mu's ring, recorded by the image of
// 1 in normal form modulo mu's ideal.  The sweep submodule W cuts each
// hom space down to the fork quotient.
//
// Degrees: a map 1 -> p has q-degree deg(p) + shift(mu, lambda) where
// the shift is the difference of total down positions; the minimal hom
// monomial then sits in degree d(x, y).

#include "forkalg/forks.hpp"
#include "forkalg/lattice.hpp"
#include "forkalg/states.hpp"
#include "forkalg/upoly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace forkalg {

// Pointwise floor of the divisibility basis: c_i = max(b^mu_i - b^lam_i, 0),
// equivalently the positive part of the weight difference of the states.
std::vector<int> hom_floor(const UpDownSeq& mu, const UpDownSeq& lambda);
UMono hom_floor_monomial(const UpDownSeq& mu, const UpDownSeq& lambda);

// q-degree shift of maps lambda -> mu.
int hom_shift(const UpDownSeq& mu, const UpDownSeq& lambda);

// Monomial basis {x^j | c <= j < b^mu} of the full hom space, whole or
// one q-degree slice.  Not reduced by W.
std::vector<UMono> hom_basis(const UpDownSeq& mu, const UpDownSeq& lambda);
std::vector<UMono> hom_basis_of_degree(const UpDownSeq& mu,
                                       const UpDownSeq& lambda, int qdeg);

// Module generators of the sweep submodule W: for each generating
// interval of the state pair, the interval product times the floor
// monomial.  The tilde variant starts interval j at lambda's j-th down
// position instead of the outer maximum; it can be a strictly smaller
// submodule.  Generators come back unreduced; both throw on too-far
// pairs (there W is the whole hom space).
std::vector<UMono> w_generators(const UpDownSeq& mu, const UpDownSeq& lambda);
std::vector<UMono> w_tilde_generators(const UpDownSeq& mu, const UpDownSeq& lambda);

// All reduced products (monomial multiplier) * (W generator) landing in
// the given q-degree slice; zero products dropped.
std::vector<UPoly> w_products_of_degree(const UpDownSeq& mu,
                                        const UpDownSeq& lambda, int qdeg,
                                        bool tilde = false);

// Coordinates of reduced homogeneous elements in a monomial slice basis.
// Throws if some element has support outside the basis.
ZMat coords_matrix(const std::vector<UMono>& basis,
                   const std::vector<UPoly>& elts);

// Membership of a reduced hom element in the W span (or W tilde span).
bool in_w_span(const UpDownSeq& mu, const UpDownSeq& lambda, const UPoly& p,
               bool tilde = false);

// Fork monomials in enhanced-fork enumeration order; their classes are a
// basis of hom/W.
std::vector<UMono> fork_basis(const UpDownSeq& mu, const UpDownSeq& lambda);

// Coefficients of a reduced hom element on the fork basis classes modulo
// W, in the same order.  Unique; throws if p is not a hom element.
std::vector<Int> fork_coords(const UpDownSeq& mu, const UpDownSeq& lambda,
                             const UPoly& p);

struct SarElt {
  int n = 0;
  int k = 0;
  // (target, source) -> image of 1, in normal form mod the target ideal.
  std::map<std::pair<UpDownSeq, UpDownSeq>, UPoly> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const SarElt&) const = default;

  bool is_homogeneous() const;
  int qdeg() const;  // -1 for zero; throws if not homogeneous

  std::string str() const;
};

SarElt sar_zero(int n, int k);
// Zero when the pair is too far or the reduction dies; validates that
// the reduced image is a genuine hom element.
SarElt sar_monomial(const UpDownSeq& mu, const UpDownSeq& lambda, const UPoly& p);
SarElt sar_idempotent(const UpDownSeq& mu);
SarElt sar_identity(int n, int k);

SarElt operator+(const SarElt& a, const SarElt& b);
SarElt operator-(const SarElt& a, const SarElt& b);
SarElt operator*(const SarElt& a, const SarElt& b);  // composition
SarElt operator*(const Int& c, const SarElt& a);

// The anti-automorphism: a term 1 -> p from lambda to mu goes to the
// term 1 -> x^{b^lambda - b^mu} p from mu to lambda.  The exponent stays
// nonnegative on normal forms; a violation throws rather than clamps.
SarElt psi_s(const SarElt& a);

// Equality of the classes mod W, piece by piece.  SarElts carry hom-space
// representatives; this is equality in the algebra itself.
bool equal_mod_w(const SarElt& a, const SarElt& b);

}  // namespace forkalg
