#include "forkalg/xi.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace forkalg {

SarElt xi(const OszElt& a) {
  SarElt r = sar_zero(a.n, a.k);
  for (auto& [key, p] : a.terms) {
    UpDownSeq mu = UpDownSeq::from_state(key.first);
    UpDownSeq la = UpDownSeq::from_state(key.second);
    UPoly img = p * UPoly::mono(hom_floor_monomial(mu, la));
    r = r + sar_monomial(mu, la, img);
  }
  return r;
}

std::vector<IState> middle_states(const IState& x, const IState& y) {
  std::vector<IState> out;
  for (auto& eta : oriented_etas(UpDownSeq::from_state(x), UpDownSeq::from_state(y)))
    out.push_back(eta.to_state());
  return out;
}

UMono fork_element_monomial(const IState& x, const IState& z,
                            const Perm& sigma, const IState& y) {
  UpDownSeq mz = UpDownSeq::from_state(z);
  if (!lower_oriented(UpDownSeq::from_state(x), mz) ||
      !lower_oriented(UpDownSeq::from_state(y), mz))
    throw std::domain_error("fork_element: middle state does not orient the pair");
  int n = x.n;
  std::vector<int> vars;
  vars.reserve(z.k());
  for (int r : z.x) vars.push_back(r + 1);
  UMono m = staircase_monomial(sigma, vars, n);
  auto ivs = generating_intervals(x, y);
  auto hz = z.holes();
  for (size_t i = 0; i < ivs.size(); ++i)
    for (int t = ivs[i].a; t <= hz[i]; ++t) m.e[t - 1] += 1;
  return m;
}

OszElt fork_element(const IState& x, const IState& z, const Perm& sigma,
                    const IState& y) {
  return osz_monomial(x, y, UPoly::mono(fork_element_monomial(x, z, sigma, y)));
}

OszElt central_sym(int n, int k, SymKind kind, int j) {
  std::vector<int> vars(n);
  for (int i = 0; i < n; ++i) vars[i] = i + 1;
  UPoly p = sym_poly(kind, j, vars, n);
  OszElt e = osz_zero(n, k);
  for (auto& x : all_states(n, k, true)) {
    OszElt t = osz_monomial(x, x, p);
    for (auto& [key, q] : t.terms) e.terms[key] = q;
  }
  return e;
}

UPoly theta_poly(int n, int j) {
  if (j < 1 || j > n) throw std::invalid_argument("theta_poly: index out of range");
  std::vector<int> vars(n + 1 - j);
  for (int i = 0; i < n + 1 - j; ++i) vars[i] = i + 1;
  return sym_poly(SymKind::complete, j, vars, n);
}

CheckReport theta_equivalence(int n, int k, int max_qdeg) {
  CheckReport rep;
  std::vector<int> vars(n);
  for (int i = 0; i < n; ++i) vars[i] = i + 1;
  std::vector<UPoly> egens, tgens;
  for (int j = 1; j <= k; ++j) {
    egens.push_back(sym_poly(SymKind::elementary, j, vars, n));
    tgens.push_back(theta_poly(n, j));
  }
  for (int qd = 2; qd <= max_qdeg; qd += 2) {
    int total = qd / 2;
    auto ambient = monomials_of_total(n, total);
    std::vector<UPoly> ecols, tcols;
    for (int j = 1; j <= k; ++j) {
      if (j > total) continue;
      for (auto& m : monomials_of_total(n, total - j)) {
        ecols.push_back(egens[j - 1] * UPoly::mono(m));
        tcols.push_back(tgens[j - 1] * UPoly::mono(m));
      }
    }
    bool eq = lattice_equal_cols(coords_matrix(ambient, ecols),
                                 coords_matrix(ambient, tcols));
    std::ostringstream what;
    what << "theta ideal slice n=" << n << " k=" << k << " qdeg=" << qd;
    rep.expect(eq, what.str());
  }
  return rep;
}

namespace {

// Exponent vectors (m_1..m_k) with sum 2 j m_j = qdeg.
std::vector<std::vector<int>> eps_exponents(int k, int qdeg) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, 0);
  auto rec = [&](auto&& self, int j, int rest) -> void {
    if (j > k) {
      if (rest == 0) out.push_back(cur);
      return;
    }
    for (int m = 0; 2 * j * m <= rest; ++m) {
      cur[j - 1] = m;
      self(self, j + 1, rest - 2 * j * m);
    }
    cur[j - 1] = 0;
  };
  if (qdeg % 2 == 0 && qdeg >= 0) rec(rec, 1, qdeg);
  return out;
}

std::vector<UMono> slice_monomials(int n, int total, const PairInfo& info) {
  if (total < 0) return {};
  return monomials_of_total(n, total, [&](const UMono& m) {
    for (auto& g : info.ideal)
      if (m.divisible_by(g)) return false;
    return true;
  });
}

struct PairContext {
  IState x, y;
  UpDownSeq mu, la;
  PairInfo info;
  BSeq b{std::vector<int>{1}};
  int shift = 0;
  UMono floor_mono;
  std::vector<EnhancedFork> forks;
  std::vector<int> fdeg;
  std::vector<UMono> fork_osz;  // fork element monomials upstairs

  PairContext(const IState& x_, const IState& y_)
      : x(x_),
        y(y_),
        mu(UpDownSeq::from_state(x_)),
        la(UpDownSeq::from_state(y_)),
        info(pair_info(x_, y_)),
        b(mu.b_seq()),
        shift(hom_shift(mu, la)),
        floor_mono(hom_floor_monomial(mu, la)),
        forks(oriented_enhanced_forks(mu, la)) {
    for (auto& f : forks) {
      fdeg.push_back(fork_degree(mu, la, f));
      fork_osz.push_back(
          fork_element_monomial(x, f.eta.to_state(), f.sigma, y));
    }
  }
};

}  // namespace

CheckReport verify_iso(int n, int k, int max_qdeg) {
  CheckReport rep;
  auto states = all_states(n, k, true);
  std::vector<int> vars(n);
  for (int i = 0; i < n; ++i) vars[i] = i + 1;
  std::vector<UPoly> egens;
  for (int j = 1; j <= k; ++j)
    egens.push_back(sym_poly(SymKind::elementary, j, vars, n));
  for (auto& x : states) {
    for (auto& y : states) {
      if (too_far(x, y)) continue;
      PairContext ctx(x, y);
      int nf = (int)ctx.forks.size();
      for (int qd = ctx.info.dist; qd <= max_qdeg; qd += 2) {
        std::ostringstream tag;
        tag << "n=" << n << " k=" << k << " x=" << x.str() << " y=" << y.str()
            << " qdeg=" << qd;
        auto M = slice_monomials(n, (qd - ctx.info.dist) / 2, ctx.info);
        std::map<UMono, int> midx;
        for (size_t i = 0; i < M.size(); ++i) midx[M[i]] = (int)i;

        // Hom-side slice with W products and reduced fork monomials.
        auto slice = hom_basis_of_degree(ctx.mu, ctx.la, qd);
        auto cols = w_products_of_degree(ctx.mu, ctx.la, qd, false);
        int nw = (int)cols.size();
        std::vector<int> deg_forks;
        for (int i = 0; i < nf; ++i)
          if (ctx.fdeg[i] == qd) {
            deg_forks.push_back(i);
            cols.push_back(reduce_mod_Ib(
                UPoly::mono(fork_monomial(ctx.mu, ctx.forks[i])), ctx.b));
          }
        HnfSolver solver(coords_matrix(slice, cols));

        // Xi followed by fork coordinates, column per basis monomial.
        ZMat X(nf, (int)M.size());
        bool solved_all = true;
        for (size_t jm = 0; jm < M.size(); ++jm) {
          UPoly img = reduce_mod_Ib(UPoly::mono(M[jm] * ctx.floor_mono), ctx.b);
          auto v = coords_matrix(slice, {img});
          auto s = solver.solve(v.col(0));
          if (!s) {
            solved_all = false;
            continue;
          }
          for (size_t t = 0; t < deg_forks.size(); ++t)
            X.at(deg_forks[t], (int)jm) = (*s)[nw + (int)t];
        }
        rep.expect(solved_all, "xi image escapes W + fork span at " + tag.str());

        // Symmetric ideal slice in basis coordinates.
        std::vector<std::vector<Int>> js_cols;
        for (int j = 1; j <= k; ++j) {
          for (auto& m : slice_monomials(n, (qd - ctx.info.dist) / 2 - j, ctx.info)) {
            UPoly prod = reduce_mod_monomial_ideal(egens[j - 1] * UPoly::mono(m),
                                                   ctx.info.ideal);
            std::vector<Int> col(M.size());
            bool fits = true;
            for (auto& [mono, coef] : prod.terms()) {
              auto it = midx.find(mono);
              if (it == midx.end()) {
                fits = false;
                break;
              }
              col[it->second] = coef;
            }
            rep.expect(fits, "ideal product escapes the slice at " + tag.str());
            if (fits) js_cols.push_back(std::move(col));
          }
        }
        ZMat JS((int)M.size(), (int)js_cols.size());
        for (size_t jj = 0; jj < js_cols.size(); ++jj)
          for (size_t r = 0; r < M.size(); ++r) JS.at((int)r, (int)jj) = js_cols[jj][r];

        // The ideal dies under xi-to-fork-coordinates.
        ZMat XJS = X * JS;
        bool zero = true;
        for (auto& v : XJS.a)
          if (v != 0) zero = false;
        rep.expect(zero, "ideal slice survives xi at " + tag.str());

        // And is exactly the kernel.
        rep.expect(lattice_equal_cols(kernel_cols(X), JS),
                   "kernel differs from ideal slice at " + tag.str());

        // Fork elements hit unit vectors.
        ZMat F((int)M.size(), (int)deg_forks.size());
        bool units = true;
        for (size_t t = 0; t < deg_forks.size(); ++t) {
          int i = deg_forks[t];
          auto it = midx.find(ctx.fork_osz[i]);
          if (it == midx.end()) {
            units = false;
            continue;
          }
          F.at(it->second, (int)t) = 1;
          for (int rr = 0; rr < nf; ++rr)
            if (X.at(rr, it->second) != (rr == i ? 1 : 0)) units = false;
        }
        rep.expect(units, "fork element misses its unit vector at " + tag.str());

        // Fork elements plus the ideal slice span the whole piece.
        rep.expect(spans_everything(ZMat::hcat(F, JS)),
                   "forks + ideal do not span at " + tag.str());
      }
    }
  }
  return rep;
}

CheckReport verify_flatness(int n, int k, int max_qdeg) {
  CheckReport rep;
  auto states = all_states(n, k, true);
  std::vector<int> vars(n);
  for (int i = 0; i < n; ++i) vars[i] = i + 1;
  std::vector<UPoly> egens;
  for (int j = 1; j <= k; ++j)
    egens.push_back(sym_poly(SymKind::elementary, j, vars, n));
  for (auto& x : states) {
    for (auto& y : states) {
      if (too_far(x, y)) continue;
      PairContext ctx(x, y);
      for (int qd = ctx.info.dist; qd <= max_qdeg; qd += 2) {
        std::ostringstream tag;
        tag << "n=" << n << " k=" << k << " x=" << x.str() << " y=" << y.str()
            << " qdeg=" << qd;
        auto M = slice_monomials(n, (qd - ctx.info.dist) / 2, ctx.info);
        std::map<UMono, int> midx;
        for (size_t i = 0; i < M.size(); ++i) midx[M[i]] = (int)i;
        std::vector<std::vector<Int>> cols;
        bool fits = true;
        for (size_t i = 0; i < ctx.forks.size(); ++i) {
          int rest = qd - ctx.fdeg[i];
          if (rest < 0 || rest % 2) continue;
          for (auto& eps : eps_exponents(k, rest)) {
            UPoly p = UPoly::mono(ctx.fork_osz[i]);
            for (int j = 1; j <= k; ++j)
              for (int t = 0; t < eps[j - 1]; ++t) p *= egens[j - 1];
            p = reduce_mod_monomial_ideal(p, ctx.info.ideal);
            std::vector<Int> col(M.size());
            for (auto& [mono, coef] : p.terms()) {
              auto it = midx.find(mono);
              if (it == midx.end()) {
                fits = false;
                break;
              }
              col[it->second] = coef;
            }
            cols.push_back(std::move(col));
          }
        }
        rep.expect(fits, "product escapes the slice at " + tag.str());
        rep.expect(cols.size() == M.size(),
                   "basis count mismatch at " + tag.str());
        ZMat A((int)M.size(), (int)cols.size());
        for (size_t jj = 0; jj < cols.size(); ++jj)
          for (size_t r = 0; r < M.size(); ++r) A.at((int)r, (int)jj) = cols[jj][r];
        rep.expect(spans_everything(A),
                   "products are not unimodular at " + tag.str());
      }
    }
  }
  return rep;
}

CheckReport xi_psi_compatibility(int n, int k) {
  CheckReport rep;
  auto check = [&](const OszElt& a, const std::string& what) {
    rep.expect(xi(psi_osz(a)) == psi_s(xi(a)), "xi/psi mismatch on " + what);
  };
  std::vector<OszElt> gens;
  std::vector<std::string> names;
  for (auto& x : all_states(n, k, true)) {
    gens.push_back(osz_idempotent(x));
    names.push_back("I_" + x.str());
  }
  for (int i = 1; i <= n; ++i) {
    gens.push_back(osz_R(n, k, i));
    names.push_back("R_" + std::to_string(i));
    gens.push_back(osz_L(n, k, i));
    names.push_back("L_" + std::to_string(i));
    gens.push_back(osz_U(n, k, i));
    names.push_back("U_" + std::to_string(i));
  }
  for (size_t i = 0; i < gens.size(); ++i) check(gens[i], names[i]);
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = 0; j < gens.size(); ++j)
      check(gens[i] * gens[j], names[i] + "*" + names[j]);
  auto states = all_states(n, k, true);
  for (auto& x : states)
    for (auto& y : states) {
      if (too_far(x, y)) continue;
      for (auto& m : basis_piece(x, y, distance(x, y) + 4))
        check(osz_monomial(x, y, UPoly::mono(m)),
              "monomial term at " + x.str() + "," + y.str());
    }
  return rep;
}

}  // namespace forkalg
