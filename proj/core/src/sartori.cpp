#include "forkalg/sartori.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace forkalg {

static void check_seq_pair(const UpDownSeq& mu, const UpDownSeq& lambda) {
  if (mu.n != lambda.n || mu.k() != lambda.k())
    throw std::invalid_argument("sequence pair: mismatched n or k");
}

std::vector<int> hom_floor(const UpDownSeq& mu, const UpDownSeq& lambda) {
  check_seq_pair(mu, lambda);
  auto bm = mu.b_seq(), bl = lambda.b_seq();
  std::vector<int> c(mu.n);
  for (int i = 0; i < mu.n; ++i) c[i] = std::max(bm.b[i] - bl.b[i], 0);
  return c;
}

UMono hom_floor_monomial(const UpDownSeq& mu, const UpDownSeq& lambda) {
  return UMono(hom_floor(mu, lambda));
}

int hom_shift(const UpDownSeq& mu, const UpDownSeq& lambda) {
  check_seq_pair(mu, lambda);
  int s = 0;
  for (int p : mu.downs()) s += p;
  for (int p : lambda.downs()) s -= p;
  return s;
}

std::vector<UMono> hom_basis(const UpDownSeq& mu, const UpDownSeq& lambda) {
  auto c = hom_floor(mu, lambda);
  auto b = mu.b_seq();
  std::vector<UMono> out;
  std::vector<int> j(c);
  for (;;) {
    out.push_back(UMono(j));
    int i = 0;
    while (i < mu.n && j[i] + 1 >= b.b[i]) {
      j[i] = c[i];
      ++i;
    }
    if (i == mu.n) break;
    ++j[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<UMono> hom_basis_of_degree(const UpDownSeq& mu,
                                       const UpDownSeq& lambda, int qdeg) {
  int shift = hom_shift(mu, lambda);
  std::vector<UMono> out;
  for (auto& m : hom_basis(mu, lambda))
    if (m.qdeg() + shift == qdeg) out.push_back(m);
  return out;
}

static std::vector<UMono> w_gens_impl(const UpDownSeq& mu,
                                      const UpDownSeq& lambda, bool tilde) {
  IState x = mu.to_state(), y = lambda.to_state();
  if (too_far(x, y))
    throw std::domain_error("w_generators: pair is too far, W is everything");
  UMono c = hom_floor_monomial(mu, lambda);
  auto ivs = generating_intervals(x, y);
  auto dl = lambda.downs();
  std::vector<UMono> out;
  out.reserve(ivs.size());
  for (size_t j = 0; j < ivs.size(); ++j) {
    Interval g = ivs[j];
    if (tilde) g.a = dl[j];  // lambda's down never sits right of the interval start
    out.push_back(interval_monomial(g, mu.n) * c);
  }
  return out;
}

std::vector<UMono> w_generators(const UpDownSeq& mu, const UpDownSeq& lambda) {
  return w_gens_impl(mu, lambda, false);
}

std::vector<UMono> w_tilde_generators(const UpDownSeq& mu, const UpDownSeq& lambda) {
  return w_gens_impl(mu, lambda, true);
}

std::vector<UPoly> w_products_of_degree(const UpDownSeq& mu,
                                        const UpDownSeq& lambda, int qdeg,
                                        bool tilde) {
  int shift = hom_shift(mu, lambda);
  BSeq b = mu.b_seq();
  std::vector<UPoly> out;
  for (auto& gen : w_gens_impl(mu, lambda, tilde)) {
    int rest = qdeg - shift - gen.qdeg();
    if (rest < 0 || rest % 2) continue;
    for (auto& m : monomials_of_total(mu.n, rest / 2)) {
      UPoly r = reduce_mod_Ib(UPoly::mono(m * gen), b);
      if (!r.is_zero()) out.push_back(r);
    }
  }
  return out;
}

ZMat coords_matrix(const std::vector<UMono>& basis,
                   const std::vector<UPoly>& elts) {
  std::map<UMono, int> row;
  for (size_t i = 0; i < basis.size(); ++i) row[basis[i]] = (int)i;
  ZMat m((int)basis.size(), (int)elts.size());
  for (size_t j = 0; j < elts.size(); ++j)
    for (auto& [mono, c] : elts[j].terms()) {
      auto it = row.find(mono);
      if (it == row.end())
        throw std::invalid_argument("coords_matrix: support outside the basis");
      m.at(it->second, (int)j) = c;
    }
  return m;
}

bool in_w_span(const UpDownSeq& mu, const UpDownSeq& lambda, const UPoly& p,
               bool tilde) {
  if (p.is_zero()) return true;
  UPoly nf = reduce_mod_Ib(p, mu.b_seq());
  int shift = hom_shift(mu, lambda);
  for (int pd = 0; pd <= nf.max_qdeg(); pd += 2) {
    UPoly part = nf.homogeneous_part(pd);
    if (part.is_zero()) continue;
    auto slice = hom_basis_of_degree(mu, lambda, pd + shift);
    ZMat A = coords_matrix(slice, w_products_of_degree(mu, lambda, pd + shift, tilde));
    ZMat v = coords_matrix(slice, {part});
    if (!solve_cols(A, v.col(0))) return false;
  }
  return true;
}

std::vector<UMono> fork_basis(const UpDownSeq& mu, const UpDownSeq& lambda) {
  std::vector<UMono> out;
  for (auto& f : oriented_enhanced_forks(mu, lambda))
    out.push_back(fork_monomial(mu, f));
  return out;
}

std::vector<Int> fork_coords(const UpDownSeq& mu, const UpDownSeq& lambda,
                             const UPoly& p) {
  check_seq_pair(mu, lambda);
  if (too_far(mu.to_state(), lambda.to_state())) return {};
  auto forks = oriented_enhanced_forks(mu, lambda);
  std::vector<UMono> fmono;
  std::vector<int> fdeg;
  for (auto& f : forks) {
    fmono.push_back(fork_monomial(mu, f));
    fdeg.push_back(fork_degree(mu, lambda, f));
  }
  std::vector<Int> coords(forks.size());
  BSeq b = mu.b_seq();
  UPoly nf = reduce_mod_Ib(p, b);
  int shift = hom_shift(mu, lambda);
  for (int pd = 0; pd <= nf.max_qdeg(); pd += 2) {
    UPoly part = nf.homogeneous_part(pd);
    if (part.is_zero()) continue;
    int qd = pd + shift;
    auto slice = hom_basis_of_degree(mu, lambda, qd);
    auto cols = w_products_of_degree(mu, lambda, qd, false);
    int nw = (int)cols.size();
    std::vector<int> which;
    for (size_t i = 0; i < forks.size(); ++i)
      if (fdeg[i] == qd) {
        which.push_back((int)i);
        cols.push_back(reduce_mod_Ib(UPoly::mono(fmono[i]), b));
      }
    ZMat A = coords_matrix(slice, cols);
    ZMat v = coords_matrix(slice, {part});
    auto s = solve_cols(A, v.col(0));
    if (!s)
      throw std::invalid_argument("fork_coords: element is not a hom element");
    for (size_t t = 0; t < which.size(); ++t) coords[which[t]] += (*s)[nw + (int)t];
  }
  return coords;
}

bool SarElt::is_homogeneous() const {
  int d = -1;
  bool seen = false;
  for (auto& [key, p] : terms) {
    if (!p.is_homogeneous()) return false;
    int deg = p.max_qdeg() + hom_shift(key.first, key.second);
    if (!seen) {
      d = deg;
      seen = true;
    } else if (d != deg) {
      return false;
    }
  }
  return true;
}

int SarElt::qdeg() const {
  if (terms.empty()) return -1;
  if (!is_homogeneous()) throw std::domain_error("qdeg: element is not homogeneous");
  auto& [key, p] = *terms.begin();
  return p.max_qdeg() + hom_shift(key.first, key.second);
}

std::string SarElt::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [key, p] : terms) {
    if (!first) os << " + ";
    first = false;
    os << '(' << p.str() << ")*h[" << key.first.str() << "," << key.second.str() << ']';
  }
  return os.str();
}

SarElt sar_zero(int n, int k) {
  SarElt e;
  e.n = n;
  e.k = k;
  return e;
}

static void check_hom_support(const UpDownSeq& mu, const UpDownSeq& lambda,
                              const UPoly& nf) {
  UMono c = hom_floor_monomial(mu, lambda);
  for (auto& [m, coef] : nf.terms())
    if (!m.divisible_by(c))
      throw std::invalid_argument("sartori: image is not a hom element");
}

SarElt sar_monomial(const UpDownSeq& mu, const UpDownSeq& lambda, const UPoly& p) {
  check_seq_pair(mu, lambda);
  SarElt e = sar_zero(mu.n, mu.k());
  if (too_far(mu.to_state(), lambda.to_state())) return e;
  UPoly nf = reduce_mod_Ib(p, mu.b_seq());
  if (nf.is_zero()) return e;
  check_hom_support(mu, lambda, nf);
  e.terms[{mu, lambda}] = nf;
  return e;
}

SarElt sar_idempotent(const UpDownSeq& mu) {
  return sar_monomial(mu, mu, UPoly(mu.n, 1));
}

SarElt sar_identity(int n, int k) {
  SarElt e = sar_zero(n, k);
  for (auto& mu : all_seqs(n, k)) e.terms[{mu, mu}] = UPoly(n, 1);
  return e;
}

static void check_same_algebra(const SarElt& a, const SarElt& b) {
  if (a.n != b.n || a.k != b.k)
    throw std::invalid_argument("SarElt: elements of different algebras");
}

SarElt operator+(const SarElt& a, const SarElt& b) {
  check_same_algebra(a, b);
  SarElt r = a;
  for (auto& [key, p] : b.terms) {
    auto it = r.terms.find(key);
    if (it == r.terms.end()) {
      r.terms[key] = p;
    } else {
      it->second += p;
      if (it->second.is_zero()) r.terms.erase(it);
    }
  }
  return r;
}

SarElt operator-(const SarElt& a, const SarElt& b) { return a + Int(-1) * b; }

SarElt operator*(const SarElt& a, const SarElt& b) {
  check_same_algebra(a, b);
  SarElt r = sar_zero(a.n, a.k);
  for (auto& [ka, pa] : a.terms) {
    for (auto& [kb, pb] : b.terms) {
      if (kb.first != ka.second) continue;
      const UpDownSeq& mu = ka.first;
      const UpDownSeq& nu = kb.second;
      if (too_far(mu.to_state(), nu.to_state())) continue;
      auto key = std::make_pair(mu, nu);
      auto it = r.terms.find(key);
      if (it == r.terms.end())
        r.terms[key] = pa * pb;
      else
        it->second += pa * pb;
    }
  }
  SarElt out = sar_zero(a.n, a.k);
  for (auto& [key, p] : r.terms) {
    UPoly nf = reduce_mod_Ib(p, key.first.b_seq());
    if (nf.is_zero()) continue;
    check_hom_support(key.first, key.second, nf);
    out.terms[key] = nf;
  }
  return out;
}

SarElt operator*(const Int& c, const SarElt& a) {
  SarElt r = sar_zero(a.n, a.k);
  if (c == 0) return r;
  for (auto& [key, p] : a.terms) r.terms[key] = p * c;
  return r;
}

SarElt psi_s(const SarElt& a) {
  SarElt r = sar_zero(a.n, a.k);
  for (auto& [key, p] : a.terms) {
    const UpDownSeq& mu = key.first;
    const UpDownSeq& lambda = key.second;
    auto bm = mu.b_seq(), bl = lambda.b_seq();
    UPoly q(a.n);
    for (auto& [m, coef] : p.terms()) {
      UMono shifted = m;
      for (int i = 0; i < a.n; ++i) {
        shifted.e[i] += bl.b[i] - bm.b[i];
        if (shifted.e[i] < 0)
          throw std::domain_error("psi_s: negative exponent on a normal form");
      }
      q += UPoly::mono(shifted, coef);
    }
    UPoly nf = reduce_mod_Ib(q, bl);
    if (nf.is_zero()) continue;
    check_hom_support(lambda, mu, nf);
    r.terms[{lambda, mu}] = nf;
  }
  return r;
}

bool equal_mod_w(const SarElt& a, const SarElt& b) {
  if (a.n != b.n || a.k != b.k) return false;
  std::set<std::pair<UpDownSeq, UpDownSeq>> keys;
  for (auto& [key, p] : a.terms) keys.insert(key);
  for (auto& [key, p] : b.terms) keys.insert(key);
  UPoly zero(a.n);
  for (auto& key : keys) {
    auto ia = a.terms.find(key), ib = b.terms.find(key);
    const UPoly& pa = ia == a.terms.end() ? zero : ia->second;
    const UPoly& pb = ib == b.terms.end() ? zero : ib->second;
    if (pa == pb) continue;
    if (fork_coords(key.first, key.second, pa) !=
        fork_coords(key.first, key.second, pb))
      return false;
  }
  return true;
}

}  // namespace forkalg
