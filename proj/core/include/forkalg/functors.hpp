#pragma once
// Truncation maps connecting adjacent weights: dropping region 0 from
// both states of a big-step element, swapping the leading up of a hom
// pair to a down, the induced rule on projectives, and the commuting
// square showing the two truncations match through the surjection.

#include "forkalg/osz.hpp"
#include "forkalg/report.hpp"
#include "forkalg/sartori.hpp"
#include "forkalg/states.hpp"

#include <optional>

namespace forkalg {

// Drop region 0 from both states of every term.  The target pair gains
// one generating interval at the left, so the polynomial is re-reduced
// and may shrink or vanish.  Throws std::invalid_argument unless every
// term has 0 in both states.
OszElt psi_prime(const OszElt& a);

// Swap the leading up of both sequences of every term to a down.  The
// b-sequences and divisibility floors do not change, so the polynomial
// carries over unreduced.  The target pair's sweep submodule grows by
// one interval, so distinct representatives can map to the same class.
// Throws std::invalid_argument unless every key starts with an up on
// both sides.
SarElt psi_sartori(const SarElt& h);

// x without region 0 when present, otherwise nothing.
std::optional<IState> functor_F_on_projective(const IState& x);

// The square: surjecting to the hom algebra and then truncating equals
// truncating and then surjecting, as classes mod W, on every basis
// monomial of every piece with 0 in both states, up to max_qdeg.  k
// names the target weight; sources live at weight k + 1.  Also checks
// the rule on projectives against the decategorified matrix.
CheckReport verify_commuting_square(int n, int k, int max_qdeg);

// Both truncations respect products of composable basis elements, up
// to max_qdeg on each factor.
CheckReport truncation_multiplicativity(int n, int k, int max_qdeg);

}  // namespace forkalg
