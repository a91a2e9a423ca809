#include "forkalg/osz.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace forkalg {

PairInfo pair_info(const IState& x, const IState& y) {
  PairInfo info;
  info.far = too_far(x, y);
  if (info.far) return info;
  info.dist = distance(x, y);
  info.intervals = generating_intervals(x, y);
  info.ideal.reserve(info.intervals.size());
  for (auto& g : info.intervals) info.ideal.push_back(interval_monomial(g, x.n));
  return info;
}

bool OszElt::is_homogeneous() const {
  int d = -1;
  for (auto& [key, p] : terms) {
    if (!p.is_homogeneous()) return false;
    int deg = p.max_qdeg() + distance(key.first, key.second);
    if (d < 0)
      d = deg;
    else if (d != deg)
      return false;
  }
  return true;
}

int OszElt::qdeg() const {
  if (terms.empty()) return -1;
  if (!is_homogeneous()) throw std::domain_error("qdeg: element is not homogeneous");
  auto& [key, p] = *terms.begin();
  return p.max_qdeg() + distance(key.first, key.second);
}

std::string OszElt::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [key, p] : terms) {
    if (!first) os << " + ";
    first = false;
    os << '(' << p.str() << ")*f[" << key.first.str() << "," << key.second.str() << ']';
  }
  return os.str();
}

static void check_left_pair(const IState& x, const IState& y) {
  if (x.n != y.n || x.k() != y.k())
    throw std::invalid_argument("state pair: mismatched n or k");
  if (!x.is_left() || !y.is_left())
    throw std::invalid_argument("state pair: corner algebra needs left states");
}

OszElt osz_zero(int n, int k) {
  OszElt e;
  e.n = n;
  e.k = k;
  return e;
}

OszElt osz_monomial(const IState& x, const IState& y, const UPoly& p) {
  check_left_pair(x, y);
  OszElt e = osz_zero(x.n, x.k());
  if (too_far(x, y)) return e;
  UPoly nf = reduce_mod_monomial_ideal(p, pair_info(x, y).ideal);
  if (!nf.is_zero()) e.terms[{x, y}] = nf;
  return e;
}

OszElt osz_idempotent(const IState& x) {
  return osz_monomial(x, x, UPoly(x.n, 1));
}

OszElt osz_generator(const IState& x, const IState& y) {
  return osz_monomial(x, y, UPoly(x.n, 1));
}

OszElt osz_identity(int n, int k) {
  OszElt e = osz_zero(n, k);
  for (auto& x : all_states(n, k, true)) e.terms[{x, x}] = UPoly(n, 1);
  return e;
}

// R_i lives on states containing i-1 but not i; L_i on states containing
// i but not i-1; U_i on every state, dying where the pair ideal says so.
OszElt osz_R(int n, int k, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("osz_R: line out of range");
  OszElt e = osz_zero(n, k);
  for (auto& x : all_states(n, k, true)) {
    if (!x.contains(i - 1) || x.contains(i)) continue;
    std::vector<int> t = x.x;
    for (int& r : t)
      if (r == i - 1) r = i;
    std::sort(t.begin(), t.end());
    IState y(n, t);
    if (!y.is_left()) continue;
    e.terms[{x, y}] = UPoly(n, 1);
  }
  return e;
}

OszElt osz_L(int n, int k, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("osz_L: line out of range");
  OszElt e = osz_zero(n, k);
  for (auto& x : all_states(n, k, true)) {
    if (!x.contains(i) || x.contains(i - 1)) continue;
    std::vector<int> t = x.x;
    for (int& r : t)
      if (r == i) r = i - 1;
    std::sort(t.begin(), t.end());
    e.terms[{x, IState(n, t)}] = UPoly(n, 1);
  }
  return e;
}

OszElt osz_U(int n, int k, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("osz_U: line out of range");
  OszElt e = osz_zero(n, k);
  for (auto& x : all_states(n, k, true)) {
    OszElt t = osz_monomial(x, x, UPoly::mono(UMono::var(n, i)));
    for (auto& [key, p] : t.terms) e.terms[key] = p;
  }
  return e;
}

static void check_same_algebra(const OszElt& a, const OszElt& b) {
  if (a.n != b.n || a.k != b.k)
    throw std::invalid_argument("OszElt: elements of different algebras");
}

OszElt operator+(const OszElt& a, const OszElt& b) {
  check_same_algebra(a, b);
  OszElt r = a;
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

OszElt operator-(const OszElt& a, const OszElt& b) {
  return a + Int(-1) * b;
}

OszElt operator*(const OszElt& a, const OszElt& b) {
  check_same_algebra(a, b);
  OszElt r = osz_zero(a.n, a.k);
  int n = a.n;
  for (auto& [ka, pa] : a.terms) {
    auto& [x, y] = ka;
    auto vx = x.weight_v(), vy = y.weight_v();
    for (auto& [kb, pb] : b.terms) {
      if (kb.first != y) continue;
      const IState& z = kb.second;
      if (too_far(x, z)) continue;
      auto vz = z.weight_v();
      UMono g(n);
      for (int i = 0; i < n; ++i) {
        int s = std::abs(vx[i] - vy[i]) + std::abs(vy[i] - vz[i]) - std::abs(vx[i] - vz[i]);
        if (s < 0 || s % 2) throw std::logic_error("crossing exponent must be a nonnegative even integer");
        g.e[i] = s / 2;
      }
      auto key = std::make_pair(x, z);
      auto it = r.terms.find(key);
      UPoly add = (pa * pb) * UPoly::mono(g);
      if (it == r.terms.end())
        r.terms[key] = add;
      else
        it->second += add;
    }
  }
  // Reduce each accumulated component once at the end.
  OszElt out = osz_zero(a.n, a.k);
  for (auto& [key, p] : r.terms) {
    UPoly nf = reduce_mod_monomial_ideal(p, pair_info(key.first, key.second).ideal);
    if (!nf.is_zero()) out.terms[key] = nf;
  }
  return out;
}

OszElt operator*(const Int& c, const OszElt& a) {
  OszElt r = osz_zero(a.n, a.k);
  if (c == 0) return r;
  for (auto& [key, p] : a.terms) r.terms[key] = p * c;
  return r;
}

OszElt psi_osz(const OszElt& a) {
  OszElt r = osz_zero(a.n, a.k);
  for (auto& [key, p] : a.terms) r.terms[{key.second, key.first}] = p;
  return r;
}

std::vector<UMono> basis_piece(const IState& x, const IState& y, int max_qdeg) {
  check_left_pair(x, y);
  std::vector<UMono> out;
  if (too_far(x, y)) return out;
  PairInfo info = pair_info(x, y);
  int maxtotal = (max_qdeg - info.dist) / 2;
  for (int t = 0; t <= maxtotal; ++t) {
    auto layer = monomials_of_total(x.n, t, [&](const UMono& m) {
      for (auto& g : info.ideal)
        if (m.divisible_by(g)) return false;
      return true;
    });
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Step> gamma_path(const IState& x, const IState& y) {
  check_left_pair(x, y);
  if (too_far(x, y)) throw std::domain_error("gamma_path: pair is too far");
  std::vector<Step> steps;
  std::vector<int> cur = x.x;
  const std::vector<int>& tgt = y.x;
  for (;;) {
    int a = -1;
    for (int i = 0; i < (int)cur.size(); ++i)
      if (cur[i] < tgt[i]) a = i;  // maximal index moving right
    if (a >= 0) {
      steps.push_back({'R', cur[a] + 1});
      cur[a] += 1;
      continue;
    }
    for (int i = 0; i < (int)cur.size(); ++i)
      if (cur[i] > tgt[i]) {
        a = i;
        break;  // minimal index moving left
      }
    if (a < 0) break;
    steps.push_back({'L', cur[a]});
    cur[a] -= 1;
  }
  return steps;
}

OszElt gamma_evaluate(int n, int k, const std::vector<Step>& steps) {
  OszElt e = osz_identity(n, k);
  for (auto& s : steps)
    e = e * (s.kind == 'R' ? osz_R(n, k, s.i) : osz_L(n, k, s.i));
  return e;
}

CheckReport osz_relations(int n, int k) {
  CheckReport rep;
  auto states = all_states(n, k, true);
  std::vector<OszElt> R, L, U;
  for (int i = 1; i <= n; ++i) {
    R.push_back(osz_R(n, k, i));
    L.push_back(osz_L(n, k, i));
    U.push_back(osz_U(n, k, i));
  }
  auto nm = [](const char* s, int i) { return std::string(s) + std::to_string(i); };

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      rep.expect(R[i - 1] * U[j - 1] == U[j - 1] * R[i - 1],
                 nm("R", i) + " fails to commute with " + nm("U", j));
      rep.expect(L[i - 1] * U[j - 1] == U[j - 1] * L[i - 1],
                 nm("L", i) + " fails to commute with " + nm("U", j));
      rep.expect(U[i - 1] * U[j - 1] == U[j - 1] * U[i - 1],
                 nm("U", i) + " fails to commute with " + nm("U", j));
      if (i - j > 1 || j - i > 1) {
        rep.expect(R[i - 1] * R[j - 1] == R[j - 1] * R[i - 1],
                   nm("R", i) + " fails to commute with " + nm("R", j));
        rep.expect(L[i - 1] * L[j - 1] == L[j - 1] * L[i - 1],
                   nm("L", i) + " fails to commute with " + nm("L", j));
        rep.expect(R[i - 1] * L[j - 1] == L[j - 1] * R[i - 1],
                   nm("R", i) + " fails to commute with " + nm("L", j));
      }
    }

  // Loops close up to U_i on the states carrying the matching chord.  Line n
  // has no R_n or L_n arrows: crossing it would leave the left I-states, so
  // the loop relation is vacuous there and the generator sums are empty.
  if (n >= 1) {
    rep.expect(R[n - 1].is_zero(), "R at line n should have no arrows");
    rep.expect(L[n - 1].is_zero(), "L at line n should have no arrows");
  }
  for (int i = 1; i < n; ++i) {
    OszElt pr = osz_zero(n, k), pl = osz_zero(n, k);
    for (auto& x : states) {
      if (x.contains(i - 1) && !x.contains(i)) pr = pr + osz_idempotent(x);
      if (x.contains(i) && !x.contains(i - 1)) pl = pl + osz_idempotent(x);
    }
    rep.expect(R[i - 1] * L[i - 1] == U[i - 1] * pr, nm("RL loop at ", i));
    rep.expect(L[i - 1] * R[i - 1] == U[i - 1] * pl, nm("LR loop at ", i));
  }

  for (int i = 2; i <= n; ++i) {
    rep.expect((R[i - 2] * R[i - 1]).is_zero(), nm("two-line RR at ", i));
    rep.expect((L[i - 1] * L[i - 2]).is_zero(), nm("two-line LL at ", i));
  }

  for (auto& x : states)
    for (int i = 1; i <= n; ++i)
      if (!x.contains(i - 1) && !x.contains(i))
        rep.expect(osz_monomial(x, x, UPoly::mono(UMono::var(n, i))).is_zero(),
                   nm("U", i) + " should vanish at " + x.str());

  for (auto& x : states)
    for (auto& y : states) {
      if (too_far(x, y)) continue;
      OszElt g = osz_idempotent(x) * gamma_evaluate(n, k, gamma_path(x, y)) *
                 osz_idempotent(y);
      rep.expect(g == osz_generator(x, y),
                 "path factorization misses f at " + x.str() + "," + y.str());
    }

  std::vector<OszElt> gens;
  for (int i = 0; i < n; ++i) {
    gens.push_back(R[i]);
    gens.push_back(L[i]);
    gens.push_back(U[i]);
  }
  for (int i = 1; i <= n; ++i) {
    rep.expect(psi_osz(R[i - 1]) == L[i - 1], nm("psi on R", i));
    rep.expect(psi_osz(L[i - 1]) == R[i - 1], nm("psi on L", i));
    rep.expect(psi_osz(U[i - 1]) == U[i - 1], nm("psi on U", i));
  }
  for (auto& a : gens)
    for (auto& b : gens) {
      OszElt ab = a * b;
      rep.expect(psi_osz(psi_osz(ab)) == ab, "psi fails to be involutive");
      rep.expect(psi_osz(ab) == psi_osz(b) * psi_osz(a),
                 "psi fails to reverse a product");
    }
  for (auto& a : gens)
    for (auto& b : gens)
      for (auto& c : gens)
        rep.expect((a * b) * c == a * (b * c), "associativity failure");
  return rep;
}

}  // namespace forkalg
