#include "frobcalc/translate.hpp"

#include "frobcalc/error.hpp"

namespace frobcalc {

namespace {

using SG = SelfAdjLang::Gen;
using FG = FrobLang::Gen;

SelfAdjTerm F(SelfAdjTerm t) {
  return SelfAdjTerm::apply(SelfAdjLang::Functor::F, std::move(t));
}

bool even_endpoints(ArrowType t) { return t.src % 2 == 0; }

}  // namespace

SelfAdjTerm frob_to_selfadj(const FrobTerm& t) {
  switch (t.kind()) {
    case TermKind::id:
      return SelfAdjTerm::identity(2 * t.index());
    case TermKind::gen: {
      unsigned n = t.index();
      switch (t.gen()) {
        case FG::eps_box:
          return SelfAdjTerm::generator(SG::phi, 2 * n);
        case FG::eps_dia:
          return SelfAdjTerm::generator(SG::gamma, 2 * n);
        case FG::delta_box:
          return F(SelfAdjTerm::generator(SG::gamma, 2 * n + 1));
        case FG::delta_dia:
          return F(SelfAdjTerm::generator(SG::phi, 2 * n + 1));
      }
      break;
    }
    case TermKind::compose:
      return SelfAdjTerm::compose(frob_to_selfadj(t.outer()),
                                  frob_to_selfadj(t.inner()));
    case TermKind::apply:
      return F(F(frob_to_selfadj(t.inner())));
  }
  throw TypeError("corrupt term");
}

FrobTerm selfadj_to_frob(const SelfAdjTerm& t) {
  switch (t.kind()) {
    case TermKind::id: {
      unsigned k = t.index();
      return FrobTerm::identity(k % 2 == 0 ? k / 2 : k / 2 + 1);
    }
    case TermKind::gen: {
      unsigned k = t.index();
      unsigned n = k / 2;
      bool even = k % 2 == 0;
      if (t.gen() == SG::gamma) {
        return FrobTerm::generator(even ? FG::eps_dia : FG::delta_box, n);
      }
      return FrobTerm::generator(even ? FG::eps_box : FG::delta_dia, n);
    }
    case TermKind::compose:
      return FrobTerm::compose(selfadj_to_frob(t.outer()),
                               selfadj_to_frob(t.inner()));
    case TermKind::apply: {
      FrobTerm inner = selfadj_to_frob(t.inner());
      if (even_endpoints(type_of(t.inner()))) {
        return frob::lift(std::move(inner));
      }
      return inner;
    }
  }
  throw TypeError("corrupt term");
}

AdjTerm monad_to_adj(const MonadTerm& t) {
  using AG = AdjLang::Gen;
  using AF = AdjLang::Functor;
  switch (t.kind()) {
    case TermKind::id:
      return AdjTerm::identity(2 * t.index());
    case TermKind::gen: {
      unsigned n = t.index();
      if (t.gen() == MonadLang::Gen::eps_dia) {
        return AdjTerm::generator(AG::gamma, 2 * n);
      }
      return AdjTerm::apply(AF::G, AdjTerm::generator(AG::phi, 2 * n + 1));
    }
    case TermKind::compose:
      return AdjTerm::compose(monad_to_adj(t.outer()),
                              monad_to_adj(t.inner()));
    case TermKind::apply:
      return AdjTerm::apply(
          AF::G, AdjTerm::apply(AF::F, monad_to_adj(t.inner())));
  }
  throw TypeError("corrupt term");
}

MonadTerm adj_to_monad(const AdjTerm& t) {
  using MG = MonadLang::Gen;
  switch (t.kind()) {
    case TermKind::id: {
      unsigned k = t.index();
      return MonadTerm::identity(k % 2 == 0 ? k / 2 : k / 2 + 1);
    }
    case TermKind::gen: {
      // gam needs an even object 2k, phi an odd object 2k+1.
      type_of(t);
      unsigned k = t.index() / 2;
      if (t.gen() == AdjLang::Gen::gamma) {
        return MonadTerm::generator(MG::eps_dia, k);
      }
      return MonadTerm::generator(MG::delta_dia, k);
    }
    case TermKind::compose:
      return MonadTerm::compose(adj_to_monad(t.outer()),
                                adj_to_monad(t.inner()));
    case TermKind::apply: {
      MonadTerm inner = adj_to_monad(t.inner());
      if (t.functor() == AdjLang::Functor::F) {
        return MonadTerm::apply(MonadLang::Functor::M, std::move(inner));
      }
      return inner;
    }
  }
  throw TypeError("corrupt term");
}

SelfAdjTerm bij_to_selfadj(const BijTerm& t) {
  using BG = BijLang::Gen;
  switch (t.kind()) {
    case TermKind::id:
      return SelfAdjTerm::identity(t.index());
    case TermKind::gen: {
      type_of(t);
      bool unit = t.gen() == BG::gamma_a || t.gen() == BG::gamma_b;
      return SelfAdjTerm::generator(unit ? SG::gamma : SG::phi, t.index());
    }
    case TermKind::compose:
      return SelfAdjTerm::compose(bij_to_selfadj(t.outer()),
                                  bij_to_selfadj(t.inner()));
    case TermKind::apply:
      return F(bij_to_selfadj(t.inner()));
  }
  throw TypeError("corrupt term");
}

namespace {

BijTerm to_bij(const SelfAdjTerm& t) {
  using BG = BijLang::Gen;
  using BF = BijLang::Functor;
  switch (t.kind()) {
    case TermKind::id:
      return BijTerm::identity(t.index());
    case TermKind::gen: {
      bool a_side = t.index() % 2 == 0;
      if (t.gen() == SG::gamma) {
        return BijTerm::generator(a_side ? BG::gamma_a : BG::gamma_b,
                                  t.index());
      }
      return BijTerm::generator(a_side ? BG::phi_a : BG::phi_b, t.index());
    }
    case TermKind::compose:
      return BijTerm::compose(to_bij(t.outer()), to_bij(t.inner()));
    case TermKind::apply: {
      bool a_side = even_endpoints(type_of(t.inner()));
      return BijTerm::apply(a_side ? BF::U : BF::P, to_bij(t.inner()));
    }
  }
  throw TypeError("corrupt term");
}

}  // namespace

BijTerm selfadj_to_bij(const SelfAdjTerm& t, BijSide side) {
  ArrowType ty = type_of(t);
  bool want_even = side == BijSide::A;
  if (even_endpoints(ty) != want_even) {
    throw TypeError("term of type " + to_string(ty) + " does not live on the " +
                    (want_even ? "A (even)" : "B (odd)") + " side");
  }
  return to_bij(t);
}

AdjTerm adj_lift(AdjTerm t, unsigned times) {
  for (unsigned i = 0; i < times; ++i) {
    bool even = even_endpoints(type_of(t));
    t = AdjTerm::apply(even ? AdjLang::Functor::F : AdjLang::Functor::G,
                       std::move(t));
  }
  return t;
}

BijTerm bij_lift(BijTerm t, unsigned times) {
  for (unsigned i = 0; i < times; ++i) {
    bool even = even_endpoints(type_of(t));
    t = BijTerm::apply(even ? BijLang::Functor::U : BijLang::Functor::P,
                       std::move(t));
  }
  return t;
}

SelfAdjTerm selfadj_lift(SelfAdjTerm t, unsigned times) {
  for (unsigned i = 0; i < times; ++i) {
    t = F(std::move(t));
  }
  return t;
}

Diagram eval_selfadj(const SelfAdjTerm& t) {
  return eval_frob(selfadj_to_frob(t));
}

}  // namespace frobcalc
