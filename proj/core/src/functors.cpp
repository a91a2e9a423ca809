#include "forkalg/functors.hpp"

#include "forkalg/rep.hpp"
#include "forkalg/xi.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace forkalg {

namespace {

IState drop_region0(const IState& x) {
  std::vector<int> rest(x.x.begin() + 1, x.x.end());
  return IState(x.n, rest);
}

UpDownSeq drop_leading_up(const UpDownSeq& s) {
  std::vector<int> ups(s.ups.begin() + 1, s.ups.end());
  return UpDownSeq(s.n, ups);
}

std::vector<IState> states_with_region0(int n, int k) {
  std::vector<IState> out;
  for (const IState& x : all_states(n, k, /*left_only=*/true))
    if (x.contains(0)) out.push_back(x);
  return out;
}

}  // namespace

OszElt psi_prime(const OszElt& a) {
  OszElt r = osz_zero(a.n, a.k > 0 ? a.k - 1 : 0);
  for (const auto& [key, p] : a.terms) {
    if (!key.first.contains(0) || !key.second.contains(0))
      throw std::invalid_argument("psi_prime: term without region 0");
    r = r + osz_monomial(drop_region0(key.first), drop_region0(key.second), p);
  }
  return r;
}

SarElt psi_sartori(const SarElt& h) {
  SarElt r = sar_zero(h.n, h.k > 0 ? h.k - 1 : 0);
  for (const auto& [key, p] : h.terms) {
    if (!key.first.is_up(1) || !key.second.is_up(1))
      throw std::invalid_argument("psi_sartori: term without a leading up");
    r = r + sar_monomial(drop_leading_up(key.first),
                         drop_leading_up(key.second), p);
  }
  return r;
}

std::optional<IState> functor_F_on_projective(const IState& x) {
  if (!x.contains(0)) return std::nullopt;
  return drop_region0(x);
}

CheckReport verify_commuting_square(int n, int k, int max_qdeg) {
  CheckReport rep;
  auto label = [&](const IState& x, const IState& y, const UMono& m) {
    std::ostringstream os;
    os << "square n=" << n << " k=" << k << " " << x.str() << "->" << y.str()
       << " " << m.str();
    return os.str();
  };

  // Rule on projectives against the decategorified matrix: column mu of
  // the weight k+1 source has its single 1 exactly at the dropped state.
  std::vector<UpDownSeq> target = all_seqs_down_order(n, k);
  std::vector<UpDownSeq> source = all_seqs_down_order(n, k + 1);
  std::vector<std::vector<Laurent>> fmat = functor_F_matrix(n, k);
  for (std::size_t j = 0; j < source.size(); ++j) {
    std::optional<IState> image = functor_F_on_projective(source[j].to_state());
    for (std::size_t i = 0; i < target.size(); ++i) {
      bool hit = image && UpDownSeq::from_state(*image) == target[i];
      rep.expect(fmat[i][j] == (hit ? Laurent(1) : Laurent(0)),
                 "square n=" + std::to_string(n) + " k=" + std::to_string(k) +
                     " projective rule vs matrix at " + source[j].str());
    }
    if (image)
      rep.expect(!functor_F_on_projective(*image).has_value(),
                 "square n=" + std::to_string(n) +
                     " applying the rule twice must vanish at " +
                     source[j].str());
  }

  for (const IState& x : states_with_region0(n, k + 1))
    for (const IState& y : states_with_region0(n, k + 1)) {
      if (too_far(x, y)) continue;
      for (const UMono& m : basis_piece(x, y, max_qdeg)) {
        OszElt a = osz_monomial(x, y, UPoly::mono(m));
        SarElt via_prime = xi(psi_prime(a));
        SarElt via_surj = psi_sartori(xi(a));
        // The two routes produce hom-space representatives that can differ
        // by sweep elements; the square commutes at the level of classes.
        rep.expect(equal_mod_w(via_prime, via_surj), label(x, y, m));
      }
    }
  return rep;
}

CheckReport truncation_multiplicativity(int n, int k, int max_qdeg) {
  CheckReport rep;
  std::vector<IState> states = states_with_region0(n, k + 1);
  for (const IState& x : states)
    for (const IState& y : states) {
      if (too_far(x, y)) continue;
      std::vector<UMono> left = basis_piece(x, y, max_qdeg);
      for (const IState& z : states) {
        if (too_far(y, z)) continue;
        std::vector<UMono> right = basis_piece(y, z, max_qdeg);
        for (const UMono& ma : left)
          for (const UMono& mb : right) {
            OszElt a = osz_monomial(x, y, UPoly::mono(ma));
            OszElt b = osz_monomial(y, z, UPoly::mono(mb));
            rep.expect(psi_prime(a * b) == psi_prime(a) * psi_prime(b),
                       "psi_prime multiplicative n=" + std::to_string(n) +
                           " " + x.str() + "->" + y.str() + "->" + z.str());
            SarElt ha = xi(a), hb = xi(b);
            rep.expect(psi_sartori(ha * hb) ==
                           psi_sartori(ha) * psi_sartori(hb),
                       "psi_sartori multiplicative n=" + std::to_string(n) +
                           " " + x.str() + "->" + y.str() + "->" + z.str());
          }
      }
    }
  return rep;
}

}  // namespace forkalg
