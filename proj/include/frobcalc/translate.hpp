#ifndef FROBCALC_TRANSLATE_HPP_
#define FROBCALC_TRANSLATE_HPP_

#include "frobcalc/diagram.hpp"
#include "frobcalc/terms.hpp"

namespace frobcalc {

/// I : Frob -> S_A, doubling objects.
SelfAdjTerm frob_to_selfadj(const FrobTerm& t);
/// J : S -> Frob, with J(2n) = n and J(2n+1) = n+1. Defined on every typable
/// self-adjunction term.
FrobTerm selfadj_to_frob(const SelfAdjTerm& t);

/// I : free monad -> B side of the free adjunction.
AdjTerm monad_to_adj(const MonadTerm& t);
/// J : free adjunction -> free monad.
MonadTerm adj_to_monad(const AdjTerm& t);

enum class BijSide { A, B };

/// K : free bijunction -> free self-adjunction (objects unchanged).
SelfAdjTerm bij_to_selfadj(const BijTerm& t);
/// H_C : self-adjunction terms with endpoints of the side's parity (A even,
/// B odd) -> bijunction. Throws TypeError on a parity mismatch.
BijTerm selfadj_to_bij(const SelfAdjTerm& t, BijSide side);

/// Lifts a term by the functor that applies to its endpoints, `times`
/// times, alternating sides where the language has two functors.
AdjTerm adj_lift(AdjTerm t, unsigned times);
BijTerm bij_lift(BijTerm t, unsigned times);
SelfAdjTerm selfadj_lift(SelfAdjTerm t, unsigned times);

/// Diagram of a self-adjunction term through J.
Diagram eval_selfadj(const SelfAdjTerm& t);

}  // namespace frobcalc

#endif  // FROBCALC_TRANSLATE_HPP_
