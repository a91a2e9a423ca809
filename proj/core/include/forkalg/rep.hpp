#pragma once
// The n-fold tensor power of the two dimensional U_q(gl(1|1)) module:
// standard, canonical, and form-dual bases of its weight spaces, the
// generator actions with their super sign rule, both bilinear forms,
// the d-matrix, and the decategorified F and E'' maps.
//
// Basis keys are bitmasks with bit i-1 set when tensor factor i carries
// the odd vector v_1 (a down); zero bits carry v_0 (an up), so a weight
// space is a fixed popcount and k = n - popcount.

#include "forkalg/forks.hpp"
#include "forkalg/laurent.hpp"
#include "forkalg/report.hpp"
#include "forkalg/states.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace forkalg {

struct RepVector {
  int n = 0;
  std::map<std::uint32_t, QRat> c;  // no zero coefficients stored

  bool is_zero() const { return c.empty(); }
  bool operator==(const RepVector&) const = default;
  std::string str() const;
};

std::uint32_t mask_of(const UpDownSeq& s);
UpDownSeq seq_of_mask(int n, std::uint32_t m);

RepVector rep_zero(int n);
RepVector standard_vector(const UpDownSeq& s);

RepVector operator+(const RepVector& a, const RepVector& b);
RepVector operator-(const RepVector& a, const RepVector& b);
RepVector operator*(const QRat& s, const RepVector& v);

// Sequences of D_{n,k} ordered by ascending down-position vectors, the
// order the form and d-matrix tables are written in.  all_seqs gives
// the same set in ascending up-position order.
std::vector<UpDownSeq> all_seqs_down_order(int n, int k);

// Generators acting on V^{\otimes n} through the iterated coproduct
//   E  -> sum_i 1^(i-1) E (K^-1)^(n-i),    F -> sum_i K^(i-1) F 1^(n-i),
// with the Koszul rule: an odd generator acting in position i picks up
// -1 for every odd factor strictly to its left.  On V itself E v_1 =
// v_0 and F v_0 = v_1, K_1 scales an up by q, K_2 scales a down by q.
// Eprime rescales E by q^{n-1}/(k+1)_{q^2} on the weight-k subspace;
// Edoubleprime is (q^{-1} - q) E K.
enum class Gen { E, F, K, Kinv, K1, K2, Eprime, Edoubleprime };

RepVector act(Gen g, const RepVector& v);

// Expansion of the wedge of lowering elements ell over the up positions
// of s: each factor keeps its index or lowers it by one at cost q, and
// terms where two factors collide drop out.
RepVector canonical_vector(const UpDownSeq& s);

enum class FormKind { sartori, osz };

// Bilinear (not sesquilinear) forms, diagonal in the standard basis: a
// weight-k key pairs with itself to (k)!_{q^2} on the sartori side and
// to 1/(1-q^2)^k on the osz side.
QRat form(FormKind kind, const RepVector& a, const RepVector& b);

enum class BasisTag {
  standard,
  canonical,
  sartori_dual_standard,
  sartori_dual_canonical,
  osz_dual_standard,
  osz_dual_canonical,
};

// The tagged basis of the weight-k space, indexed parallel to
// all_seqs_down_order(n, k).  Dual standard is the standard vector
// scaled by 1/(k)!_{q^2} resp. (1-q^2)^k; dual canonical solves the
// duality equations against the canonical basis under the matching
// form.
std::vector<RepVector> basis_family(BasisTag tag, int n, int k);

// Single element of basis_family(tag, s.n, s.k()) at sequence s.
RepVector basis_vector(BasisTag tag, const UpDownSeq& s);

// Coordinates of v in a spanning family; throws std::domain_error when
// v is outside the span.
std::vector<QRat> expand_in_family(const std::vector<RepVector>& family,
                                   const RepVector& v);

// d_{lambda, mu} = q^{deg} over oriented lower fork diagrams lambda
// under mu, zero otherwise; rows lambda and columns mu both follow
// all_seqs_down_order(n, k).  Satisfies canonical = d * standard and is
// unitriangular for the pointwise order on down positions.
std::vector<std::vector<Laurent>> d_matrix(int n, int k);

// Matrix of the decategorified F from weight k+1 to weight k in
// canonical coordinates (rows index the target).  Column mu has a
// single 1 in row mu-with-leading-up-dropped when mu starts with an up,
// and is zero otherwise; this equals the matrix of act(F).
std::vector<std::vector<Laurent>> functor_F_matrix(int n, int k);

// Matrix of the decategorified E'' from weight k to weight k+1 in
// canonical coordinates, built as the transpose of functor_F_matrix
// conjugated from osz-dual-canonical coordinates; equals the matrix of
// act(Edoubleprime).
std::vector<std::vector<QRat>> functor_Edoubleprime_matrix(int n, int k);

// Structural checks across all weight spaces of V^{\otimes n}: the
// defining relations, E'' F + F E'' = (1 - q^{2n}) id, the functor
// matrices against the generator actions, duality of E''/E' with F
// under the matching forms, form values against graded_rank and
// graded_dim, the scalar ratio between the two forms, duality of the
// dual bases, and the d-matrix expansion.
CheckReport rep_suite(int n);

}  // namespace forkalg
