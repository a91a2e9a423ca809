#pragma once
// Idempotent states, up-down sequences, and the combinatorial data
// attached to a pair of states: hole sequences, generating intervals,
// the distance statistic.  Regions are numbered 0..n, lines 1..n; line i
// separates regions i-1 and i.  Variable U_i / x_i lives on line i.

#include "forkalg/laurent.hpp"
#include "forkalg/upoly.hpp"

#include <string>
#include <vector>

namespace forkalg {

// All k-element subsets of {0,...,m-1}, ascending within each subset,
// lexicographic across subsets.
std::vector<std::vector<int>> ksubsets(int m, int k);

// A k-element subset of the regions {0,...,n}, sorted ascending.  States
// of the corner algebra avoid region n; is_left() checks that.
struct IState {
  int n = 0;
  std::vector<int> x;

  IState() = default;
  IState(int n_, std::vector<int> x_);

  int k() const { return (int)x.size(); }
  bool is_left() const;
  bool contains(int r) const;

  // v_i = |x cap {i,...,n}| for 1 <= i <= n, the number of occupied
  // regions at or to the right of line i.  Index 0 of the result is v_1.
  std::vector<int> weight_v() const;

  // Complement of x in {0,...,n}, ascending.  A left state always has n
  // as its last hole.
  std::vector<int> holes() const;

  std::string str() const;
  auto operator<=>(const IState&) const = default;
};

std::vector<IState> all_states(int n, int k, bool left_only);

// A word in {up, down} of length n with k ups.  Up positions are 1-based.
// Left states x correspond to sequences with ups at {x_i + 1}.
struct UpDownSeq {
  int n = 0;
  std::vector<int> ups;  // sorted ascending, values in 1..n

  UpDownSeq() = default;
  UpDownSeq(int n_, std::vector<int> ups_);

  int k() const { return (int)ups.size(); }
  bool is_up(int pos) const;          // 1 <= pos <= n
  std::vector<int> downs() const;     // ascending, size n - k

  // b_i = 1 + #{ups strictly right of position i}; weakly decreasing
  // with steps 0 or -1, last entry 1 when position n is up.
  BSeq b_seq() const;

  IState to_state() const;
  static UpDownSeq from_state(const IState& x);

  // "u" for up, "d" for down, e.g. "udud".
  std::string str() const;
  static UpDownSeq parse(const std::string& word);

  auto operator<=>(const UpDownSeq&) const = default;
};

std::vector<UpDownSeq> all_seqs(int n, int k);

// Closed interval of lines [a, b], 1 <= a <= b <= n.
struct Interval {
  int a = 0;
  int b = 0;
  int length() const { return b - a + 1; }
  auto operator<=>(const Interval&) const = default;
};

// Product U_a U_{a+1} ... U_b.
UMono interval_monomial(const Interval& g, int n);

// d(x, y) = sum_i |x_i - y_i|.  Also equals the total number of line
// crossings counted with multiplicity.
int distance(const IState& x, const IState& y);

// Too far: some sorted entries differ by more than one.  The hole
// variant tests h_i^x >= h_{i+1}^y or h_i^y >= h_{i+1}^x instead; the
// two agree on all pairs.
bool too_far(const IState& x, const IState& y);
bool too_far_by_holes(const IState& x, const IState& y);

// Generating intervals of a pair that is not too far, ascending.  The
// region scan looks for maximal runs of uncrossed lines whose interior
// regions are fully used and whose boundary regions are not; the hole
// form reads interval i off as [max(h_i)+1, min(h_{i+1})] from the hole
// sequences.  Both return exactly n - k intervals for left states.
std::vector<Interval> generating_intervals(const IState& x, const IState& y);
std::vector<Interval> generating_intervals_by_holes(const IState& x,
                                                    const IState& y);

}  // namespace forkalg
