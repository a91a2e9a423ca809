#pragma once
// The corner strands algebra on n lines with k strands.  Elements are
// stored big-step style: a sum over state pairs (x, y) of polynomials in
// U_1..U_n, each kept in normal form modulo the monomial ideal generated
// by the pair's interval products.  Too-far pairs carry no component.
//
// Products follow the crossing count rule
//   f_{x,y} f_{y,z} = prod_i U_i^{g_i} f_{x,z},
//   g_i = (|v_i^x - v_i^y| + |v_i^y - v_i^z| - |v_i^x - v_i^z|) / 2,
// followed by reduction in the (x, z) component.

#include "forkalg/forks.hpp"
#include "forkalg/report.hpp"
#include "forkalg/states.hpp"
#include "forkalg/upoly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace forkalg {

struct PairInfo {
  bool far = true;
  int dist = 0;
  std::vector<Interval> intervals;
  std::vector<UMono> ideal;  // one interval product per generating interval
};

PairInfo pair_info(const IState& x, const IState& y);

struct OszElt {
  int n = 0;
  int k = 0;
  std::map<std::pair<IState, IState>, UPoly> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const OszElt&) const = default;

  bool is_homogeneous() const;
  // q-degree of a homogeneous element; a component (x, y, m) sits in
  // degree 2|m| + d(x, y).  Returns -1 for zero.
  int qdeg() const;

  std::string str() const;
};

OszElt osz_zero(int n, int k);
OszElt osz_monomial(const IState& x, const IState& y, const UPoly& p);
OszElt osz_idempotent(const IState& x);
OszElt osz_generator(const IState& x, const IState& y);  // class of f_{x,y}

// Sums over all left states: the identity, the chord generators
// R_i (region i-1 -> i), L_i (region i -> i-1), and the central U_i.
OszElt osz_identity(int n, int k);
OszElt osz_R(int n, int k, int i);
OszElt osz_L(int n, int k, int i);
OszElt osz_U(int n, int k, int i);

OszElt operator+(const OszElt& a, const OszElt& b);
OszElt operator-(const OszElt& a, const OszElt& b);
OszElt operator*(const OszElt& a, const OszElt& b);
OszElt operator*(const Int& c, const OszElt& a);

// R_i <-> L_i, U_i fixed; on big-step terms this transposes the state
// pair and keeps the polynomial.  An involutive anti-automorphism.
OszElt psi_osz(const OszElt& a);

// Monomial basis of the (x, y) component through q-degree max_qdeg:
// monomials divisible by no interval product, so that the piece's
// Poincare series truncates the closed form of graded_dim.
std::vector<UMono> basis_piece(const IState& x, const IState& y, int max_qdeg);

// One small-step factorization of f_{x,y}: rightmost movable strand
// first for R moves, leftmost first for L moves.
struct Step {
  char kind = 'R';  // 'R' or 'L'
  int i = 0;        // line index
  auto operator<=>(const Step&) const = default;
};

std::vector<Step> gamma_path(const IState& x, const IState& y);
OszElt gamma_evaluate(int n, int k, const std::vector<Step>& steps);

// Exhaustive check of the quiver presentation at this size: centrality
// of the U_i, the loop and two-line relations, distant commutation, the
// vanishing locus of U_i, path factorizations of every generator, the
// anti-automorphism, and associativity across generator triples.
CheckReport osz_relations(int n, int k);

}  // namespace forkalg
