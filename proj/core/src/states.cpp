#include "forkalg/states.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace forkalg {

std::vector<std::vector<int>> ksubsets(int m, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > m) return out;
  std::vector<int> cur;
  cur.reserve(k);
  // Recursive lex enumeration; k and m stay tiny here.
  auto rec = [&](auto&& self, int next) -> void {
    if ((int)cur.size() == k) {
      out.push_back(cur);
      return;
    }
    int need = k - (int)cur.size();
    for (int v = next; v + need <= m; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

IState::IState(int n_, std::vector<int> x_) : n(n_), x(std::move(x_)) {
  if (n < 0) throw std::invalid_argument("IState: negative n");
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || x[i] > n) throw std::invalid_argument("IState: region out of range");
    if (i > 0 && x[i - 1] >= x[i]) throw std::invalid_argument("IState: regions not strictly increasing");
  }
}

bool IState::is_left() const { return x.empty() || x.back() < n; }

bool IState::contains(int r) const {
  return std::binary_search(x.begin(), x.end(), r);
}

std::vector<int> IState::weight_v() const {
  std::vector<int> v(n, 0);
  for (int i = 1; i <= n; ++i)
    v[i - 1] = (int)(x.end() - std::lower_bound(x.begin(), x.end(), i));
  return v;
}

std::vector<int> IState::holes() const {
  std::vector<int> h;
  h.reserve(n + 1 - k());
  for (int r = 0; r <= n; ++r)
    if (!contains(r)) h.push_back(r);
  return h;
}

std::string IState::str() const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) os << ',';
    os << x[i];
  }
  os << '}';
  return os.str();
}

std::vector<IState> all_states(int n, int k, bool left_only) {
  std::vector<IState> out;
  for (auto& s : ksubsets(left_only ? n : n + 1, k)) out.emplace_back(n, s);
  return out;
}

UpDownSeq::UpDownSeq(int n_, std::vector<int> ups_) : n(n_), ups(std::move(ups_)) {
  if (n < 0) throw std::invalid_argument("UpDownSeq: negative n");
  for (size_t i = 0; i < ups.size(); ++i) {
    if (ups[i] < 1 || ups[i] > n) throw std::invalid_argument("UpDownSeq: position out of range");
    if (i > 0 && ups[i - 1] >= ups[i]) throw std::invalid_argument("UpDownSeq: positions not strictly increasing");
  }
}

bool UpDownSeq::is_up(int pos) const {
  return std::binary_search(ups.begin(), ups.end(), pos);
}

std::vector<int> UpDownSeq::downs() const {
  std::vector<int> d;
  d.reserve(n - k());
  for (int p = 1; p <= n; ++p)
    if (!is_up(p)) d.push_back(p);
  return d;
}

BSeq UpDownSeq::b_seq() const {
  std::vector<int> b(n, 1);
  for (int i = 1; i <= n; ++i)
    b[i - 1] = 1 + (int)(ups.end() - std::upper_bound(ups.begin(), ups.end(), i));
  return BSeq(b);
}

IState UpDownSeq::to_state() const {
  std::vector<int> x;
  x.reserve(ups.size());
  for (int p : ups) x.push_back(p - 1);
  return IState(n, std::move(x));
}

UpDownSeq UpDownSeq::from_state(const IState& x) {
  if (!x.is_left()) throw std::invalid_argument("from_state: not a left state");
  std::vector<int> u;
  u.reserve(x.x.size());
  for (int r : x.x) u.push_back(r + 1);
  return UpDownSeq(x.n, std::move(u));
}

std::string UpDownSeq::str() const {
  std::string s(n, 'd');
  for (int p : ups) s[p - 1] = 'u';
  return s;
}

UpDownSeq UpDownSeq::parse(const std::string& word) {
  std::vector<int> u;
  for (size_t i = 0; i < word.size(); ++i) {
    if (word[i] == 'u')
      u.push_back((int)i + 1);
    else if (word[i] != 'd')
      throw std::invalid_argument("UpDownSeq: expected a word in {u,d}");
  }
  return UpDownSeq((int)word.size(), std::move(u));
}

std::vector<UpDownSeq> all_seqs(int n, int k) {
  std::vector<UpDownSeq> out;
  for (auto& s : ksubsets(n, k)) {
    std::vector<int> u;
    u.reserve(s.size());
    for (int v : s) u.push_back(v + 1);
    out.emplace_back(n, std::move(u));
  }
  return out;
}

UMono interval_monomial(const Interval& g, int n) {
  UMono m(n);
  for (int t = g.a; t <= g.b; ++t) m.e[t - 1] = 1;
  return m;
}

static void check_pair(const IState& x, const IState& y) {
  if (x.n != y.n || x.k() != y.k())
    throw std::invalid_argument("state pair: mismatched n or k");
}

int distance(const IState& x, const IState& y) {
  check_pair(x, y);
  int d = 0;
  for (int i = 0; i < x.k(); ++i) d += std::abs(x.x[i] - y.x[i]);
  return d;
}

bool too_far(const IState& x, const IState& y) {
  check_pair(x, y);
  for (int i = 0; i < x.k(); ++i)
    if (std::abs(x.x[i] - y.x[i]) > 1) return true;
  return false;
}

bool too_far_by_holes(const IState& x, const IState& y) {
  check_pair(x, y);
  auto hx = x.holes(), hy = y.holes();
  for (size_t i = 0; i + 1 < hx.size(); ++i)
    if (std::max(hx[i], hy[i]) >= std::min(hx[i + 1], hy[i + 1])) return true;
  return false;
}

std::vector<Interval> generating_intervals(const IState& x, const IState& y) {
  check_pair(x, y);
  if (too_far(x, y)) throw std::domain_error("generating_intervals: pair is too far");
  int n = x.n;
  auto vx = x.weight_v(), vy = y.weight_v();
  auto fully_used = [&](int r) { return x.contains(r) && y.contains(r); };
  auto crossed = [&](int t) { return vx[t - 1] != vy[t - 1]; };
  std::vector<Interval> out;
  for (int j = 0; j < n; ++j) {
    if (fully_used(j)) continue;
    for (int l = 1; j + l <= n; ++l) {
      if (crossed(j + l)) break;
      if (fully_used(j + l)) continue;  // interior region of a longer interval
      out.push_back({j + 1, j + l});
      break;
    }
  }
  return out;
}

std::vector<Interval> generating_intervals_by_holes(const IState& x,
                                                    const IState& y) {
  check_pair(x, y);
  if (too_far_by_holes(x, y)) throw std::domain_error("generating_intervals: pair is too far");
  auto hx = x.holes(), hy = y.holes();
  std::vector<Interval> out;
  for (size_t i = 0; i + 1 < hx.size(); ++i)
    out.push_back({std::max(hx[i], hy[i]) + 1, std::min(hx[i + 1], hy[i + 1])});
  return out;
}

}  // namespace forkalg
