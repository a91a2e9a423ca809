#include "forkalg/upoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace forkalg {

UMono UMono::var(int n, int i, int pow) {
  UMono m(n);
  m.e[i - 1] = pow;
  return m;
}

int UMono::total() const { return std::accumulate(e.begin(), e.end(), 0); }

bool UMono::divisible_by(const UMono& d) const {
  for (int i = 0; i < n(); ++i)
    if (e[i] < d.e[i]) return false;
  return true;
}

UMono UMono::operator*(const UMono& o) const {
  UMono r = *this;
  for (int i = 0; i < n(); ++i) r.e[i] += o.e[i];
  return r;
}

UMono UMono::divided_by(const UMono& d) const {
  UMono r = *this;
  for (int i = 0; i < n(); ++i) r.e[i] -= d.e[i];
  return r;
}

std::strong_ordering UMono::operator<=>(const UMono& o) const {
  if (auto c = total() <=> o.total(); c != 0) return c;
  for (int i = n() - 1; i >= 0; --i)
    if (auto c = e[i] <=> o.e[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string UMono::str() const {
  if (is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < n(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << "U" << (i + 1);
    if (e[i] > 1) os << "^" << e[i];
  }
  return os.str();
}

UPoly UPoly::mono(const UMono& m, Int c) {
  UPoly p(m.n());
  if (c != 0) p.t_[m] = std::move(c);
  return p;
}

Int UPoly::coeff(const UMono& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Int(0) : it->second;
}

UPoly UPoly::operator-() const {
  UPoly r(n_);
  for (auto& [m, c] : t_) r.t_[m] = -c;
  return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
  UPoly r = *this;
  r.n_ = n_ ? n_ : o.n_;
  for (auto& [m, c] : o.t_) {
    Int& v = r.t_[m];
    v += c;
    if (v == 0) r.t_.erase(m);
  }
  return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  UPoly r(n_ ? n_ : o.n_);
  for (auto& [m1, c1] : t_)
    for (auto& [m2, c2] : o.t_) {
      UMono m = m1 * m2;
      Int& v = r.t_[m];
      v += c1 * c2;
      if (v == 0) r.t_.erase(m);
    }
  return r;
}

UPoly UPoly::operator*(const Int& c) const {
  UPoly r(n_);
  if (c == 0) return r;
  for (auto& [m, v] : t_) r.t_[m] = v * c;
  return r;
}

int UPoly::max_qdeg() const {
  return t_.empty() ? -1 : t_.rbegin()->first.qdeg();
}

bool UPoly::is_homogeneous() const {
  if (t_.empty()) return true;
  return t_.begin()->first.total() == t_.rbegin()->first.total();
}

UPoly UPoly::homogeneous_part(int qdeg) const {
  UPoly r(n_);
  for (auto& [m, c] : t_)
    if (m.qdeg() == qdeg) r.t_[m] = c;
  return r;
}

UPoly UPoly::truncated(int qdeg_cap) const {
  UPoly r(n_);
  for (auto& [m, c] : t_)
    if (m.qdeg() <= qdeg_cap) r.t_[m] = c;
  return r;
}

Laurent UPoly::poincare() const {
  Laurent l;
  for (auto& [m, c] : t_) l += Laurent::term(m.qdeg(), c);
  return l;
}

std::string UPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : t_) {
    Int a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1 || m.is_one()) os << a.get_str();
    if (!m.is_one()) {
      if (a != 1) os << "*";
      os << m.str();
    }
  }
  return os.str();
}

namespace {

void rec_sym(const std::vector<int>& vars, int j, int from, UMono& acc,
             bool strict, std::vector<UMono>& out) {
  if (j == 0) { out.push_back(acc); return; }
  for (int idx = from; idx < (int)vars.size(); ++idx) {
    acc.e[vars[idx] - 1] += 1;
    rec_sym(vars, j - 1, strict ? idx + 1 : idx, acc, strict, out);
    acc.e[vars[idx] - 1] -= 1;
  }
}

}  // namespace

UPoly sym_poly(SymKind kind, int j, const std::vector<int>& vars, int n) {
  if (j < 0) throw std::invalid_argument("sym_poly: negative degree");
  if (j == 0) return UPoly(n, 1);
  UPoly p(n);
  if (kind == SymKind::elementary && j > (int)vars.size()) return p;
  std::vector<UMono> monos;
  UMono acc(n);
  rec_sym(vars, j, 0, acc, kind == SymKind::elementary, monos);
  for (auto& m : monos) p += UPoly::mono(m);
  return p;
}

UPoly reduce_mod_monomial_ideal(const UPoly& p, const std::vector<UMono>& gens) {
  UPoly r(p.n());
  for (auto& [m, c] : p.terms()) {
    bool dead = false;
    for (auto& g : gens)
      if (m.divisible_by(g)) { dead = true; break; }
    if (!dead) r += UPoly::mono(m, c);
  }
  return r;
}

BSeq::BSeq(std::vector<int> v) : b(std::move(v)) {
  for (int i = 0; i < (int)b.size(); ++i) {
    if (b[i] < 1) throw std::invalid_argument("BSeq: entries must be positive");
    if (i + 1 < (int)b.size() && (b[i + 1] > b[i] || b[i + 1] < b[i] - 1))
      throw std::invalid_argument("BSeq: steps must be 0 or -1");
  }
}

Int BSeq::rank() const {
  Int r = 1;
  for (int v : b) r *= v;
  return r;
}

Laurent BSeq::graded_rank() const {
  Laurent r(1);
  for (int v : b) r *= qnum2(v);
  return r;
}

bool BSeq::admits(const UMono& m) const {
  for (int i = 0; i < n(); ++i)
    if (m.e[i] >= b[i]) return false;
  return true;
}

std::vector<UMono> BSeq::basis(int qdeg) const {
  std::vector<UMono> out;
  UMono m(n());
  // Odd q-degrees are impossible; qdeg == -1 means all degrees.
  if (qdeg >= 0 && qdeg % 2 != 0) return out;
  std::function<void(int, int)> rec = [&](int i, int total) {
    if (i == n()) {
      if (qdeg < 0 || 2 * total == qdeg) out.push_back(m);
      return;
    }
    for (int v = 0; v < b[i]; ++v) {
      m.e[i] = v;
      rec(i + 1, total + v);
    }
    m.e[i] = 0;
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

thread_local std::map<std::pair<int, int>, UPoly> h_cache;  // keyed by (i, m), n implicit

const UPoly& h_first_vars(int n, int i, int m) {
  // h_m(U_1..U_i) inside n variables; cache is per (i, m) with matching n.
  auto key = std::make_pair(i * 1000 + n, m);
  auto it = h_cache.find(key);
  if (it != h_cache.end()) return it->second;
  std::vector<int> vars(i);
  std::iota(vars.begin(), vars.end(), 1);
  return h_cache.emplace(key, sym_poly(SymKind::complete, m, vars, n)).first->second;
}

}  // namespace

UPoly reduce_mod_Ib(const UPoly& p, const BSeq& b) {
  if (p.n() != b.n() && !p.is_zero())
    throw std::invalid_argument("reduce_mod_Ib: variable count mismatch");
  UPoly r = p;
  for (;;) {
    // Largest offending term first; the rewrite only introduces smaller ones.
    const UMono* bad = nullptr;
    int badvar = -1;
    for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it) {
      for (int i = b.n() - 1; i >= 0; --i)
        if (it->first.e[i] >= b.b[i]) { bad = &it->first; badvar = i; break; }
      if (bad) break;
    }
    if (!bad) return r;
    UMono m = *bad;
    Int c = r.coeff(m);
    m.e[badvar] -= b.b[badvar];
    // U_i^{b_i} = (U_i^{b_i} - h_{b_i}(U_1..U_i)) + h_{b_i}(U_1..U_i); the
    // parenthesized part is the replacement, so subtract c * m * h.
    r -= h_first_vars(b.n(), badvar + 1, b.b[badvar]) * UPoly::mono(m, c);
  }
}

std::vector<UMono> monomials_up_to(int n, int maxtotal) {
  std::vector<UMono> out;
  for (int t = 0; t <= maxtotal; ++t) {
    auto part = monomials_of_total(n, t);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<UMono> monomials_of_total(int n, int total,
                                      const std::function<bool(const UMono&)>& keep) {
  std::vector<UMono> out;
  UMono m(n);
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == n - 1) {
      m.e[i] = rem;
      if (!keep || keep(m)) out.push_back(m);
      m.e[i] = 0;
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      m.e[i] = v;
      rec(i + 1, rem - v);
    }
    m.e[i] = 0;
  };
  if (n == 0) {
    if (total == 0 && (!keep || keep(m))) out.push_back(m);
    return out;
  }
  rec(0, total);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace forkalg
