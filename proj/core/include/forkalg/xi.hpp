#pragma once
// The comparison homomorphism from the strands side to the hom side,
// fork elements upstairs, the symmetric deformation ideal, and the
// lattice-level verifications: degreewise freeness over the symmetric
// base and the induced isomorphism after killing the ideal.

#include "forkalg/forks.hpp"
#include "forkalg/lattice.hpp"
#include "forkalg/osz.hpp"
#include "forkalg/report.hpp"
#include "forkalg/sartori.hpp"
#include "forkalg/upoly.hpp"

namespace forkalg {

// Term by term: p(U) f_{x,y} maps to 1 -> p(x) x^c from y's quotient
// ring to x's, with c the positive part of the weight difference.
// Multiplicative, degree-preserving, kills nothing visible until the
// symmetric ideal enters.
SarElt xi(const OszElt& a);

// States z lying between x and y, one per orienting middle sequence, in
// the same order as oriented_etas on the matching sequences.
std::vector<IState> middle_states(const IState& x, const IState& y);

// The fork element monomial: the staircase monomial of sigma in the
// variables U_{z_i+1} times, per generating interval of (x, y), the run
// from the interval start up to z's hole in it.  Never divisible by an
// interval product, so it is its own normal form in the (x, y) piece.
UMono fork_element_monomial(const IState& x, const IState& z,
                            const Perm& sigma, const IState& y);
OszElt fork_element(const IState& x, const IState& z, const Perm& sigma,
                    const IState& y);

// Central symmetric element: the sum over states of e_j or h_j in the U
// variables, reduced per state.
OszElt central_sym(int n, int k, SymKind kind, int j);

// theta_j = h_j(U_1 .. U_{n+1-j}); together with theta_1..theta_k these
// give the alternative generating set of the deformation ideal.
UPoly theta_poly(int n, int j);

// <e_1, ..., e_k> = <theta_1, ..., theta_k> inside Z[U_1..U_n], checked
// degree by degree through max_qdeg as a lattice equality.
CheckReport theta_equivalence(int n, int k, int max_qdeg);

// For every state pair and every degree through max_qdeg: the kernel of
// (xi followed by fork coordinates) is exactly the slice of the
// symmetric ideal, fork elements hit unit vectors, and fork elements
// together with the ideal slice give a unimodular spanning set.
CheckReport verify_iso(int n, int k, int max_qdeg);

// For every state pair and degree: the products (monomial in the central
// symmetric elements) * (fork element) form a unimodular basis of the
// graded piece, i.e. the piece is free over Z[eps_1..eps_k] on the fork
// elements.
CheckReport verify_flatness(int n, int k, int max_qdeg);

// xi intertwines the two anti-automorphisms, checked exactly on all
// basis monomials of bounded degree and on generator products.
CheckReport xi_psi_compatibility(int n, int k);

}  // namespace forkalg
