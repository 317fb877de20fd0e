#include <doctest.h>

#include <string>

#include "frobcalc/error.hpp"
#include "frobcalc/terms.hpp"

using namespace frobcalc;
using namespace frobcalc::frob;

namespace {
ArrowType T(unsigned s, unsigned t) { return {s, t}; }
}  // namespace

TEST_CASE("typing of primitive terms") {
  CHECK(type_of(eps_box(0)) == T(1, 0));
  CHECK(type_of(eps_dia(2)) == T(2, 3));
  CHECK(type_of(delta_box(1)) == T(2, 3));
  CHECK(type_of(delta_dia(1)) == T(3, 2));
  CHECK(type_of(id(5)) == T(5, 5));
  CHECK(type_of(compose(delta_dia(1), delta_box(1))) == T(2, 2));
  CHECK(type_of(lift(delta_box(1))) == T(3, 4));
}

TEST_CASE("ill-typed compositions name both sides") {
  try {
    type_of(compose(eps_box(0), eps_box(0)));
    FAIL("expected a TypeError");
  } catch (const TypeError& e) {
    std::string msg = e.what();
    CHECK(msg.find("eb 0") != std::string::npos);
    CHECK(msg.find("1 -> 0") != std::string::npos);
  }
}

TEST_CASE("parse and print") {
  CHECK(parse_term<FrobLang>("eb 0 . ed 0") == compose(eps_box(0), eps_dia(0)));
  FrobTerm m = parse_term<FrobLang>("M (db 1)");
  CHECK(m == lift(delta_box(1)));
  CHECK(type_of(m) == T(3, 4));
  CHECK(to_string(parse_term<FrobLang>("dd 0 . db 0")) == "(dd 0 . db 0)");
  // right associative
  CHECK(parse_term<FrobLang>("eb 0 . eb 1 . ed 1") ==
        compose(eps_box(0), compose(eps_box(1), eps_dia(1))));
  CHECK(to_string(lift(compose(eps_box(0), eps_dia(0)))) == "M (eb 0 . ed 0)");
  for (const char* text : {"id 3", "M (M (eb 0))", "(eb 0 . (eb 1 . ed 1))",
                           "M (eb 0 . ed 0)"}) {
    FrobTerm t = parse_term<FrobLang>(text);
    CHECK(parse_term<FrobLang>(to_string(t)) == t);
  }
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_term<FrobLang>("eb 0 . foo 1");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 7);
    CHECK(std::string(e.what()).find("foo") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_term<FrobLang>("gam 0"), ParseError);
  CHECK_THROWS_AS(parse_term<FrobLang>("eb"), ParseError);
  CHECK_THROWS_AS(parse_term<FrobLang>("(eb 0"), ParseError);
  CHECK_THROWS_AS(parse_term<FrobLang>("eb 0 . eb 0"), TypeError);
  CHECK_THROWS_AS(parse_term<SelfAdjLang>("eb 0"), ParseError);
}

TEST_CASE("tensor") {
  FrobTerm f = compose(delta_dia(0), delta_box(0));
  CHECK(tensor_term(id(0), f) == f);
  CHECK(tensor_term(eps_box(0), id(1)) == eps_box(1));
  CHECK(tensor_term(id(1), eps_box(0)) == lift(eps_box(0)));
  CHECK(type_of(tensor_term(f, eps_box(0))) == T(2, 1));
  CHECK(parse_term<FrobLang>("eb 0 x id 1") == eps_box(1));
}

TEST_CASE("subscript shift") {
  FrobTerm f = parse_term<FrobLang>("M (dd 0) . db 1");
  CHECK(subscript_shift(f, 0) == f);
  CHECK(subscript_shift(subscript_shift(f, 1), 2) == subscript_shift(f, 3));
  CHECK(subscript_shift(f, 1) == parse_term<FrobLang>("M (dd 1) . db 2"));
}

TEST_CASE("Phi and kappa builders") {
  CHECK(phi_term(0, 0) == compose(eps_box(0), eps_dia(0)));
  CHECK(type_of(phi_term(2, 0)) == T(2, 2));
  CHECK(phi_term(0, 1) ==
        compose(eps_box(0),
                compose(delta_dia(0), compose(delta_box(0), eps_dia(0)))));
  CHECK(type_of(phi_term(1, 3)) == T(1, 1));
  // (db_0)^2 = db_1 . db_0, (dd_0)^2 = dd_0 . dd_1
  CHECK(phi_term(0, 2) ==
        parse_term<FrobLang>("eb 0 . dd 0 . dd 1 . db 1 . db 0 . ed 0"));
  CHECK(kappa_term(0, 0) == SelfAdjTerm::identity(1));
  CHECK(kappa_term(1, 1) == parse_term<SelfAdjLang>("phi 3 . gam 3"));
  CHECK(type_of(kappa_term(0, 2)) == T(1, 1));
  CHECK(generator_count(kappa_term(2, 3)) == 6);
}

TEST_CASE("sibling languages") {
  CHECK(type_of(parse_term<SelfAdjLang>("gam 1")) == T(1, 3));
  CHECK(type_of(parse_term<SelfAdjLang>("F phi 0")) == T(3, 1));
  CHECK(type_of(parse_term<AdjLang>("G F gam 0")) == T(2, 4));
  CHECK_THROWS_AS(parse_term<AdjLang>("gam 1"), TypeError);
  CHECK_THROWS_AS(parse_term<AdjLang>("F phi 1"), TypeError);
  CHECK(type_of(parse_term<BijLang>("U phiA 0")) == T(3, 1));
  CHECK_THROWS_AS(parse_term<BijLang>("phiA 1"), TypeError);
  CHECK(type_of(parse_term<MonadLang>("dd 0 . M ed 0")) == T(1, 1));
  CHECK_THROWS_AS(parse_term<MonadLang>("eb 0"), ParseError);
  CHECK_THROWS_AS(parse_term<FrobLang>("eb 0 . F id 0"), ParseError);
}
