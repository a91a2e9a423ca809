#pragma once
// Fork diagrams: a pair of up-down sequences (mu, lambda) joined through
// a middle sequence eta, optionally enhanced by a permutation of the up
// strands.  Oriented enhanced forks index bases of the hom spaces, and
// their degree statistic produces the closed-form graded ranks.

#include "forkalg/laurent.hpp"
#include "forkalg/states.hpp"
#include "forkalg/upoly.hpp"

#include <string>
#include <vector>

namespace forkalg {

// Permutation of {1..k} in one-line notation: w[i-1] = w(i).
struct Perm {
  std::vector<int> w;

  Perm() = default;
  explicit Perm(std::vector<int> oneline);

  int k() const { return (int)w.size(); }
  int operator()(int i) const { return w[i - 1]; }
  static Perm identity(int k);
  Perm inverse() const;
  int length() const;  // inversion count

  // c_i = #{j < w^{-1}(i) | w(j) > i}; always 0 <= c_i <= k - i, and
  // distinct permutations give distinct exponent vectors.
  std::vector<int> staircase_exponents() const;

  std::string str() const;
  auto operator<=>(const Perm&) const = default;
};

// All of S_k in lexicographic one-line order; identity first.
std::vector<Perm> all_perms(int k);

// prod_i vars[i-1]^{c_i} where c is sigma's staircase exponent vector
// and vars lists the variable indices (1-based, in 1..n) substituted for
// x_1, ..., x_k.
UMono staircase_monomial(const Perm& sigma, const std::vector<int>& vars, int n);

// Lower fork mu-under-eta: oriented when every down of eta sits weakly
// right of the matching down of mu but strictly left of mu's next down
// (sentinel n + 1).  Its degree is the total rightward shift.
bool lower_oriented(const UpDownSeq& mu, const UpDownSeq& eta);
int lower_degree(const UpDownSeq& mu, const UpDownSeq& eta);

// eta orients the full diagram mu-under-eta-over-lambda.
bool pair_oriented(const UpDownSeq& mu, const UpDownSeq& lambda,
                   const UpDownSeq& eta);

// All orienting middles in ascending lex order on the down-position
// vector.  Empty exactly when the state pair is too far; otherwise the
// count is the product of the generating interval lengths.
std::vector<UpDownSeq> oriented_etas(const UpDownSeq& mu, const UpDownSeq& lambda);

struct EnhancedFork {
  UpDownSeq eta;
  Perm sigma;
  auto operator<=>(const EnhancedFork&) const = default;
};

// Orienting middles paired with all of S_k; eta-major, sigma in lex
// order within each eta.
std::vector<EnhancedFork> oriented_enhanced_forks(const UpDownSeq& mu,
                                                  const UpDownSeq& lambda);

// deg(mu-under-eta) + deg(lambda-under-eta) + 2 length(sigma).
int fork_degree(const UpDownSeq& mu, const UpDownSeq& lambda,
                const EnhancedFork& f);

// The monomial attached to the lower half of an enhanced fork:
// staircase part in the up variables of eta times, for each down strand,
// the product of the variables it sweeps from its mu position to its
// eta position.
UMono fork_monomial(const UpDownSeq& mu, const EnhancedFork& f);

// Graded rank of the hom space between the quotient rings, as a Laurent
// polynomial: q^d [k]!  prod_i [l_i] in the q^2 quantum numbers, with d
// the distance and l_i the generating interval lengths.  Zero if too far.
Laurent graded_rank(const UpDownSeq& mu, const UpDownSeq& lambda);

// Graded dimension of the strands algebra piece between two left states:
// q^d prod_i [l_i] / (1-q^2)^k.  Zero if too far.
QRat graded_dim(const IState& x, const IState& y);

}  // namespace forkalg
