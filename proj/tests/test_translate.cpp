#include <doctest.h>

#include "frobcalc/diagram.hpp"
#include "frobcalc/error.hpp"
#include "frobcalc/prover.hpp"
#include "frobcalc/terms.hpp"
#include "frobcalc/translate.hpp"

using namespace frobcalc;

namespace {
template <class L>
Term<L> P(const char* s) {
  return parse_term<L>(s);
}
}  // namespace

TEST_CASE("monad and adjunction") {
  CHECK(monad_to_adj(P<MonadLang>("ed 0")) == P<AdjLang>("gam 0"));
  CHECK(monad_to_adj(P<MonadLang>("M ed 0")) == P<AdjLang>("G F gam 0"));
  CHECK(monad_to_adj(P<MonadLang>("dd 1")) == P<AdjLang>("G phi 3"));
  CHECK(adj_to_monad(P<AdjLang>("G phi 1")) == P<MonadLang>("dd 0"));
  CHECK(adj_to_monad(P<AdjLang>("phi 1")) == P<MonadLang>("dd 0"));
  for (const char* text : {"dd 0 . M ed 0", "M (dd 0 . ed 1) . ed 1 . ed 0", "id 2"}) {
    MonadTerm t = P<MonadLang>(text);
    CHECK(adj_to_monad(monad_to_adj(t)) == t);
  }
}

TEST_CASE("bijunction and self-adjunction") {
  CHECK(selfadj_to_bij(P<SelfAdjLang>("phi 0"), BijSide::A) == P<BijLang>("phiA 0"));
  CHECK(selfadj_to_bij(P<SelfAdjLang>("F phi 0"), BijSide::B) ==
        P<BijLang>("U phiA 0"));
  CHECK_THROWS_AS(selfadj_to_bij(P<SelfAdjLang>("F phi 0"), BijSide::A), TypeError);
  CHECK_THROWS_AS(selfadj_to_bij(P<SelfAdjLang>("gam 0"), BijSide::B), TypeError);
  CHECK(bij_to_selfadj(P<BijLang>("P gamB 1")) == P<SelfAdjLang>("F gam 1"));
  SelfAdjTerm t = P<SelfAdjLang>("phi 2 . F F gam 0 . gam 0");
  CHECK(bij_to_selfadj(selfadj_to_bij(t, BijSide::A)) == t);
}

TEST_CASE("Frob and the even self-adjunction") {
  CHECK(frob_to_selfadj(P<FrobLang>("db 2")) == P<SelfAdjLang>("F gam 5"));
  CHECK(frob_to_selfadj(P<FrobLang>("eb 1")) == P<SelfAdjLang>("phi 2"));
  CHECK(frob_to_selfadj(P<FrobLang>("M ed 0")) == P<SelfAdjLang>("F F gam 0"));
  CHECK(selfadj_to_frob(P<SelfAdjLang>("gam 3")) == P<FrobLang>("db 1"));
  CHECK(selfadj_to_frob(P<SelfAdjLang>("F gam 0")) == P<FrobLang>("M ed 0"));
  CHECK(selfadj_to_frob(P<SelfAdjLang>("F gam 1")) == P<FrobLang>("db 0"));
  CHECK(type_of(selfadj_to_frob(P<SelfAdjLang>("id 3"))) == ArrowType{2, 2});
  for (const auto& t : enumerate_terms(3, 1)) {
    SelfAdjTerm s = frob_to_selfadj(t);
    CHECK(selfadj_to_frob(s) == t);
    CHECK(type_of(s).src == 2 * type_of(t).src);
    CHECK(type_of(s).tgt == 2 * type_of(t).tgt);
  }
}

TEST_CASE("triangular equations hold under J") {
  auto F = [](SelfAdjTerm t) {
    return SelfAdjTerm::apply(SelfAdjLang::Functor::F, t);
  };
  auto gam = [](unsigned n) {
    return SelfAdjTerm::generator(SelfAdjLang::Gen::gamma, n);
  };
  auto phi = [](unsigned n) {
    return SelfAdjTerm::generator(SelfAdjLang::Gen::phi, n);
  };
  for (unsigned n = 0; n <= 5; ++n) {
    Diagram one = eval_selfadj(SelfAdjTerm::identity(n + 1));
    CHECK(eval_selfadj(SelfAdjTerm::compose(phi(n + 1), F(gam(n)))) == one);
    CHECK(eval_selfadj(SelfAdjTerm::compose(F(phi(n)), gam(n + 1))) == one);
  }
}

TEST_CASE("kappa loops correspond to Phi") {
  // J(phi_2n . F kappa^k . gam_2n) against Phi_n^k.
  for (unsigned n = 0; n <= 2; ++n) {
    for (unsigned k = 0; k <= 3; ++k) {
      SelfAdjTerm body = SelfAdjTerm::apply(SelfAdjLang::Functor::F, kappa_term(n, k));
      SelfAdjTerm loop = SelfAdjTerm::compose(
          SelfAdjTerm::generator(SelfAdjLang::Gen::phi, 2 * n),
          SelfAdjTerm::compose(body,
                               SelfAdjTerm::generator(SelfAdjLang::Gen::gamma, 2 * n)));
      CHECK(eval_selfadj(loop) == eval_frob(phi_term(n, k)));
    }
  }
}
