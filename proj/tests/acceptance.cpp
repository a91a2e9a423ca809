// Acceptance gate: one line per criterion, wall-clock limit pinned next
// to each, exit status counts the failures.  Every expected value here
// is frozen; nothing is recomputed from the code under test.

#include "forkalg/functors.hpp"
#include "forkalg/rep.hpp"
#include "forkalg/xi.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>

using namespace forkalg;

namespace {

int failures = 0;

void criterion(int id, const char* what, double limit_s,
               const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    ok = false;
    note = std::string("threw: ") + e.what();
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                  .count();
  bool pass = ok && dt <= limit_s;
  std::printf("%s  [%2d] %-52s %8.2fs / %gs%s%s\n", pass ? "pass" : "FAIL", id,
              what, dt, limit_s, note.empty() ? "" : "  ", note.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

RepVector stdv(const char* w) { return standard_vector(UpDownSeq::parse(w)); }

QRat lq(int e) { return QRat(Laurent::q(e)); }

bool expect(bool cond, long& cases, std::string& note, const char* what) {
  ++cases;
  if (!cond && note.empty()) note = what;
  return cond;
}

}  // namespace

int main() {
  // 1. Canonical basis of the three-fold tensor power.
  criterion(1, "canonical basis table, n = 3", 1.0, [](std::string& note) {
    long cases = 0;
    bool ok = true;
    ok &= expect(canonical_vector(UpDownSeq::parse("uuu")) == stdv("uuu"),
                 cases, note, "uuu");
    ok &= expect(canonical_vector(UpDownSeq::parse("duu")) ==
                     stdv("duu") + lq(1) * stdv("udu") + lq(2) * stdv("uud"),
                 cases, note, "duu");
    ok &= expect(canonical_vector(UpDownSeq::parse("udu")) ==
                     stdv("udu") + lq(1) * stdv("uud"),
                 cases, note, "udu");
    ok &= expect(canonical_vector(UpDownSeq::parse("uud")) == stdv("uud"),
                 cases, note, "uud");
    ok &= expect(canonical_vector(UpDownSeq::parse("ddu")) ==
                     stdv("ddu") + lq(1) * stdv("dud"),
                 cases, note, "ddu");
    ok &= expect(canonical_vector(UpDownSeq::parse("dud")) ==
                     stdv("dud") + lq(1) * stdv("udd"),
                 cases, note, "dud");
    ok &= expect(canonical_vector(UpDownSeq::parse("udd")) == stdv("udd"),
                 cases, note, "udd");
    ok &= expect(canonical_vector(UpDownSeq::parse("ddd")) == stdv("ddd"),
                 cases, note, "ddd");
    return ok;
  });

  // 2. Both form matrices on canonical vectors, every weight of n = 3.
  criterion(2, "form matrices, n = 3, both sides", 1.0, [](std::string& note) {
    long cases = 0;
    bool ok = true;
    Laurent one(1), zero, om = one - Laurent::q(2);
    Laurent k2[3][3] = {
        {one + Laurent::q(2) + Laurent::q(4), Laurent::q(1) + Laurent::q(3),
         Laurent::q(2)},
        {Laurent::q(1) + Laurent::q(3), one + Laurent::q(2), Laurent::q(1)},
        {Laurent::q(2), Laurent::q(1), one}};
    Laurent k1[3][3] = {{one + Laurent::q(2), Laurent::q(1), zero},
                        {Laurent::q(1), one + Laurent::q(2), Laurent::q(1)},
                        {zero, Laurent::q(1), one}};
    auto canon = [](int k) {
      std::vector<RepVector> v;
      for (const auto& s : all_seqs_down_order(3, k))
        v.push_back(canonical_vector(s));
      return v;
    };
    auto v3 = canon(3), v2 = canon(2), v1 = canon(1), v0 = canon(0);
    ok &= expect(form(FormKind::sartori, v3[0], v3[0]) == QRat(qfact2(3)),
                 cases, note, "sartori k=3");
    ok &= expect(form(FormKind::osz, v3[0], v3[0]) == QRat(one, om * om * om),
                 cases, note, "osz k=3");
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        ok &= expect(form(FormKind::sartori, v2[i], v2[j]) ==
                         QRat(qfact2(2) * k2[i][j]),
                     cases, note, "sartori k=2");
        ok &= expect(form(FormKind::osz, v2[i], v2[j]) ==
                         QRat(k2[i][j], om * om),
                     cases, note, "osz k=2");
        ok &= expect(form(FormKind::sartori, v1[i], v1[j]) == QRat(k1[i][j]),
                     cases, note, "sartori k=1");
        ok &= expect(form(FormKind::osz, v1[i], v1[j]) == QRat(k1[i][j], om),
                     cases, note, "osz k=1");
      }
    ok &= expect(form(FormKind::sartori, v0[0], v0[0]) == QRat(one), cases,
                 note, "sartori k=0");
    ok &= expect(form(FormKind::osz, v0[0], v0[0]) == QRat(one), cases, note,
                 "osz k=0");
    return ok;
  });

  // 3. The worked hom-space example at n = 4.
  criterion(3, "hom space worked example, n = 4", 1.0, [](std::string& note) {
    long cases = 0;
    bool ok = true;
    UpDownSeq mu = UpDownSeq::parse("uddu"), la = UpDownSeq::parse("duud");
    auto x = [](int i, int p = 1) { return UMono::var(4, i, p); };
    ok &= expect(mu.b_seq().b == std::vector<int>{2, 2, 2, 1}, cases, note,
                 "b^mu");
    ok &= expect(la.b_seq().b == std::vector<int>{3, 2, 1, 1}, cases, note,
                 "b^lambda");
    ok &= expect(hom_floor(mu, la) == std::vector<int>{0, 0, 1, 0}, cases,
                 note, "floor");
    ok &= expect(hom_basis(mu, la) ==
                     std::vector<UMono>{x(3), x(1) * x(3), x(2) * x(3),
                                        x(1) * x(2) * x(3)},
                 cases, note, "hom basis");
    ok &= expect(w_generators(mu, la) ==
                     std::vector<UMono>{x(2) * x(3), x(3) * x(4)},
                 cases, note, "W generators");
    ok &= expect(w_tilde_generators(mu, la) ==
                     std::vector<UMono>{x(1) * x(2) * x(3), x(3) * x(4)},
                 cases, note, "W tilde generators");
    // x_3 x_4 equals h_2(x_1, x_2) in the target ring and both die
    // there; x_2 x_3 separates the two sweep submodules.
    BSeq bmu({2, 2, 2, 1});
    ok &= expect(reduce_mod_Ib(UPoly::mono(x(3) * x(4)), bmu).is_zero(),
                 cases, note, "x3 x4 dies mod I");
    ok &= expect(reduce_mod_Ib(sym_poly(SymKind::complete, 2, {1, 2}, 4), bmu)
                     .is_zero(),
                 cases, note, "h2 dies mod I");
    ok &= expect(in_w_span(mu, la, UPoly::mono(x(2) * x(3))), cases, note,
                 "x2 x3 in W");
    ok &= expect(!in_w_span(mu, la, UPoly::mono(x(2) * x(3)), true), cases,
                 note, "x2 x3 not in W tilde");
    ok &= expect(fork_basis(mu, la) == std::vector<UMono>{x(3), x(1) * x(3)},
                 cases, note, "fork basis");
    ok &= expect(graded_rank(mu, la) == Laurent::q(2) + Laurent::q(4), cases,
                 note, "graded rank");
    return ok;
  });

  // 4. Graded ranks two ways, and the strands basis against the series.
  criterion(4, "rank double route + basis vs series, n <= 6", 300.0,
            [](std::string& note) {
              long cases = 0;
              bool ok = true;
              for (int n = 1; n <= 6; ++n)
                for (int k = 0; k <= n; ++k) {
                  for (const auto& mu : all_seqs(n, k))
                    for (const auto& la : all_seqs(n, k)) {
                      Laurent byforks;
                      for (const auto& f : oriented_enhanced_forks(mu, la))
                        byforks = byforks +
                                  Laurent::q(fork_degree(mu, la, f));
                      ok &= expect(byforks == graded_rank(mu, la), cases,
                                   note, "fork sum vs closed form");
                    }
                  for (const auto& x : all_states(n, k, true))
                    for (const auto& y : all_states(n, k, true)) {
                      Laurent ps;
                      int d = too_far(x, y) ? 0 : distance(x, y);
                      for (const auto& m : basis_piece(x, y, 12))
                        ps = ps + Laurent::q(m.qdeg() + d);
                      ok &= expect(ps == graded_dim(x, y).series_truncate(12),
                                   cases, note, "basis vs series");
                    }
                }
              return ok;
            });

  // 5. The surjection is an isomorphism after the ideal, degreewise.
  criterion(5, "kernel = symmetric ideal, n <= 5, deg <= 10", 600.0,
            [](std::string& note) {
              bool ok = true;
              for (int n = 1; n <= 5; ++n)
                for (int k = 0; k <= n; ++k) {
                  CheckReport rep = verify_iso(n, k, 10);
                  if (!rep.ok() && note.empty())
                    note = rep.summary("iso", 2);
                  ok &= rep.ok();
                }
              return ok;
            });

  // 6. Degreewise freeness over the symmetric base.
  criterion(6, "flatness over the symmetric base, n <= 5, deg <= 10", 600.0,
            [](std::string& note) {
              bool ok = true;
              for (int n = 1; n <= 5; ++n)
                for (int k = 0; k <= n; ++k) {
                  CheckReport rep = verify_flatness(n, k, 10);
                  if (!rep.ok() && note.empty())
                    note = rep.summary("flat", 2);
                  ok &= rep.ok();
                }
              return ok;
            });

  // 7. Presentations and anti-automorphisms.
  criterion(7, "relations n <= 6; psi, theta sweeps n <= 5", 300.0,
            [](std::string& note) {
              long cases = 0;
              bool ok = true;
              for (int n = 1; n <= 6; ++n)
                for (int k = 0; k <= n; ++k) {
                  CheckReport rep = osz_relations(n, k);
                  if (!rep.ok() && note.empty())
                    note = rep.summary("relations", 2);
                  ok &= rep.ok();
                }
              for (int n = 1; n <= 5; ++n)
                for (int k = 0; k <= n; ++k) {
                  CheckReport rep = xi_psi_compatibility(n, k);
                  if (!rep.ok() && note.empty())
                    note = rep.summary("xi-psi", 2);
                  ok &= rep.ok();
                  rep = theta_equivalence(n, k, 8);
                  if (!rep.ok() && note.empty())
                    note = rep.summary("theta", 2);
                  ok &= rep.ok();
                  for (const auto& x : all_states(n, k, true))
                    for (const auto& y : all_states(n, k, true))
                      for (const auto& m : basis_piece(x, y, 8)) {
                        OszElt e = osz_monomial(x, y, UPoly::mono(m));
                        ok &= expect(psi_osz(psi_osz(e)) == e, cases, note,
                                     "psi_osz involution");
                      }
                  for (const auto& mu : all_seqs(n, k))
                    for (const auto& la : all_seqs(n, k))
                      for (int d = 0; d <= 8; ++d)
                        for (const auto& m : hom_basis_of_degree(mu, la, d)) {
                          SarElt h = sar_monomial(mu, la, UPoly::mono(m));
                          ok &= expect(psi_s(psi_s(h)) == h, cases, note,
                                       "psi_s involution");
                        }
                }
              return ok;
            });

  // 8. Representation suite.
  criterion(8, "tensor power suite, n <= 4", 60.0, [](std::string& note) {
    bool ok = true;
    for (int n = 1; n <= 4; ++n) {
      CheckReport rep = rep_suite(n);
      if (!rep.ok() && note.empty()) note = rep.summary("rep", 2);
      ok &= rep.ok();
    }
    return ok;
  });

  // 9. A large single piece stays closed-form fast.
  criterion(9, "single piece at n = 12, k = 8", 1.0, [](std::string& note) {
    long cases = 0;
    bool ok = true;
    IState x(12, {1, 2, 4, 6, 7, 8, 10, 11});
    IState y(12, {1, 3, 5, 6, 8, 9, 10, 11});
    UpDownSeq mu = UpDownSeq::from_state(x), la = UpDownSeq::from_state(y);
    ok &= expect(distance(x, y) == 4, cases, note, "distance");
    ok &= expect(generating_intervals(x, y) ==
                     std::vector<Interval>{{1, 2}, {4, 4}, {6, 7}, {10, 12}},
                 cases, note, "intervals");
    ok &= expect(oriented_etas(mu, la).size() == 12, cases, note, "etas");
    ok &= expect(oriented_enhanced_forks(mu, la).size() == 483840, cases,
                 note, "enhanced forks");
    Laurent want = Laurent::q(4) * qfact2(8) * qnum2(2) * qnum2(1) *
                   qnum2(2) * qnum2(3);
    ok &= expect(graded_rank(mu, la) == want, cases, note, "graded rank");
    return ok;
  });

  // 10. The truncation square commutes through the surjection.
  criterion(10, "truncation square, n <= 4, deg <= 8", 120.0,
            [](std::string& note) {
              bool ok = true;
              for (int n = 1; n <= 4; ++n)
                for (int k = 0; k < n; ++k) {
                  CheckReport rep = verify_commuting_square(n, k, 8);
                  if (!rep.ok() && note.empty())
                    note = rep.summary("square", 2);
                  ok &= rep.ok();
                  rep = truncation_multiplicativity(n, k, 8);
                  if (!rep.ok() && note.empty())
                    note = rep.summary("trunc-mult", 2);
                  ok &= rep.ok();
                }
              return ok;
            });

  std::printf("%d %s failed\n", failures,
              failures == 1 ? "criterion" : "criteria");
  return failures;
}
