#include "forkalg/forks.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace forkalg {

Perm::Perm(std::vector<int> oneline) : w(std::move(oneline)) {
  std::vector<char> seen(w.size(), 0);
  for (int v : w) {
    if (v < 1 || v > (int)w.size() || seen[v - 1])
      throw std::invalid_argument("Perm: not a permutation of 1..k");
    seen[v - 1] = 1;
  }
}

Perm Perm::identity(int k) {
  std::vector<int> w(k);
  for (int i = 0; i < k; ++i) w[i] = i + 1;
  return Perm(std::move(w));
}

Perm Perm::inverse() const {
  std::vector<int> v(w.size());
  for (int i = 0; i < (int)w.size(); ++i) v[w[i] - 1] = i + 1;
  return Perm(std::move(v));
}

int Perm::length() const {
  int inv = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

std::vector<int> Perm::staircase_exponents() const {
  int kk = k();
  Perm winv = inverse();
  std::vector<int> c(kk, 0);
  for (int i = 1; i <= kk; ++i)
    for (int j = 1; j < winv(i); ++j)
      if (w[j - 1] > i) ++c[i - 1];
  return c;
}

std::string Perm::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  os << ']';
  return os.str();
}

std::vector<Perm> all_perms(int k) {
  std::vector<Perm> out;
  std::vector<int> w(k);
  for (int i = 0; i < k; ++i) w[i] = i + 1;
  do {
    out.push_back(Perm(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

UMono staircase_monomial(const Perm& sigma, const std::vector<int>& vars, int n) {
  if ((int)vars.size() != sigma.k())
    throw std::invalid_argument("staircase_monomial: need one variable per strand");
  UMono m(n);
  auto c = sigma.staircase_exponents();
  for (int i = 0; i < sigma.k(); ++i) {
    if (vars[i] < 1 || vars[i] > n)
      throw std::invalid_argument("staircase_monomial: variable index out of range");
    m.e[vars[i] - 1] += c[i];
  }
  return m;
}

static void check_seq_pair(const UpDownSeq& a, const UpDownSeq& b) {
  if (a.n != b.n || a.k() != b.k())
    throw std::invalid_argument("sequence pair: mismatched n or k");
}

bool lower_oriented(const UpDownSeq& mu, const UpDownSeq& eta) {
  check_seq_pair(mu, eta);
  auto dm = mu.downs(), de = eta.downs();
  for (size_t j = 0; j < dm.size(); ++j) {
    int next = (j + 1 < dm.size()) ? dm[j + 1] : mu.n + 1;
    if (de[j] < dm[j] || de[j] >= next) return false;
  }
  return true;
}

int lower_degree(const UpDownSeq& mu, const UpDownSeq& eta) {
  if (!lower_oriented(mu, eta))
    throw std::domain_error("lower_degree: diagram is not oriented");
  auto dm = mu.downs(), de = eta.downs();
  int d = 0;
  for (size_t j = 0; j < dm.size(); ++j) d += de[j] - dm[j];
  return d;
}

bool pair_oriented(const UpDownSeq& mu, const UpDownSeq& lambda,
                   const UpDownSeq& eta) {
  return lower_oriented(mu, eta) && lower_oriented(lambda, eta);
}

std::vector<UpDownSeq> oriented_etas(const UpDownSeq& mu, const UpDownSeq& lambda) {
  check_seq_pair(mu, lambda);
  int n = mu.n, nk = n - mu.k();
  auto dm = mu.downs(), dl = lambda.downs();
  std::vector<int> lo(nk), hi(nk);
  for (int j = 0; j < nk; ++j) {
    int nm = (j + 1 < nk) ? dm[j + 1] : n + 1;
    int nl = (j + 1 < nk) ? dl[j + 1] : n + 1;
    lo[j] = std::max(dm[j], dl[j]);
    hi[j] = std::min(nm, nl) - 1;
    if (lo[j] > hi[j]) return {};  // too far
  }
  std::vector<UpDownSeq> out;
  std::vector<int> cur(nk);
  auto rec = [&](auto&& self, int j) -> void {
    if (j == nk) {
      std::vector<int> ups;
      ups.reserve(mu.k());
      size_t t = 0;
      for (int p = 1; p <= n; ++p) {
        if (t < cur.size() && cur[t] == p)
          ++t;
        else
          ups.push_back(p);
      }
      out.emplace_back(n, std::move(ups));
      return;
    }
    for (int v = lo[j]; v <= hi[j]; ++v) {
      cur[j] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<EnhancedFork> oriented_enhanced_forks(const UpDownSeq& mu,
                                                  const UpDownSeq& lambda) {
  std::vector<EnhancedFork> out;
  auto perms = all_perms(mu.k());
  for (auto& eta : oriented_etas(mu, lambda))
    for (auto& sigma : perms) out.push_back({eta, sigma});
  return out;
}

int fork_degree(const UpDownSeq& mu, const UpDownSeq& lambda,
                const EnhancedFork& f) {
  return lower_degree(mu, f.eta) + lower_degree(lambda, f.eta) +
         2 * f.sigma.length();
}

UMono fork_monomial(const UpDownSeq& mu, const EnhancedFork& f) {
  if (!lower_oriented(mu, f.eta))
    throw std::domain_error("fork_monomial: diagram is not oriented");
  UMono m = staircase_monomial(f.sigma, f.eta.ups, mu.n);
  auto dm = mu.downs(), de = f.eta.downs();
  for (size_t j = 0; j < dm.size(); ++j)
    for (int t = dm[j]; t < de[j]; ++t) m.e[t - 1] += 1;
  return m;
}

Laurent graded_rank(const UpDownSeq& mu, const UpDownSeq& lambda) {
  check_seq_pair(mu, lambda);
  IState x = mu.to_state(), y = lambda.to_state();
  if (too_far(x, y)) return Laurent();
  Laurent r = Laurent::q(distance(x, y)) * qfact2(mu.k());
  for (auto& g : generating_intervals(x, y)) r = r * qnum2(g.length());
  return r;
}

QRat graded_dim(const IState& x, const IState& y) {
  if (too_far(x, y)) return QRat();
  Laurent num = Laurent::q(distance(x, y));
  for (auto& g : generating_intervals(x, y)) num = num * qnum2(g.length());
  Laurent den(1);
  Laurent factor = Laurent(1) - Laurent::q(2);
  for (int i = 0; i < x.k(); ++i) den = den * factor;
  return QRat(num, den);
}

}  // namespace forkalg
