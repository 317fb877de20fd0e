#include <doctest.h>

#include <random>
#include <vector>

#include "frobcalc/diagram.hpp"
#include "frobcalc/prover.hpp"
#include "frobcalc/terms.hpp"
#include "frobcalc/theories.hpp"

using namespace frobcalc;
using namespace frobcalc::frob;

namespace {

constexpr Theory kAll[] = {Theory::frob, Theory::frob_phi, Theory::frob_sep,
                           Theory::sep_matrix};

Diagram D(unsigned n, unsigned m, std::vector<std::vector<int>> classes,
          std::vector<Ordinal> labels = {}) {
  return Diagram::from_classes({n, m}, classes, std::move(labels));
}

Ordinal nat(unsigned n) { return Ordinal::natural(n); }
Ordinal W() { return omega_pow(nat(1)); }

FrobTerm P(const char* s) { return parse_term<FrobLang>(s); }

}  // namespace

TEST_CASE("theory names") {
  for (Theory th : kAll) CHECK(parse_theory(theory_name(th)) == th);
  CHECK(theory_name(Theory::frob_phi) == "frob-phi");
  CHECK_FALSE(parse_theory("frob_phi").has_value());
}

TEST_CASE("frob-phi moves odd labels to the leftmost gap") {
  Diagram c3 = generator_diagram({GenFamily::c, 3, W()});
  CHECK(normalize(c3, Theory::frob_phi) ==
        D(1, 1, {{1, -1}, {2, -2}, {3, -3}}, {W(), {}, {}}));
  // even label w^2 # 1 -> 2 summands, collapse(2) # collapse(0) = 1 + 1 moved
  Diagram c2 = generator_diagram({GenFamily::c, 2, nat_sum(omega_pow(nat(2)), nat(1))});
  Diagram got = normalize(c2, Theory::frob_phi);
  CHECK(got == D(1, 1, {{1, -1}, {2, -2}, {3, -3}},
                 {nat(2), nat(2), {}}));
  CHECK(normalize(c2, Theory::frob) == c2);
}

TEST_CASE("frob-sep and sep-matrix passes") {
  Diagram wire = generator_diagram({GenFamily::c, 2, nat(1)});
  CHECK(normalize(wire, Theory::frob_sep) == Diagram::identity(1));
  Diagram gap = generator_diagram(
      {GenFamily::c, 1, nat_sum(omega_pow(nat(3)), W())});
  CHECK(normalize(gap, Theory::sep_matrix) == D(0, 0, {{1, -1}}, {nat(2)}));
}

TEST_CASE("decision examples") {
  FrobTerm phi11 = phi_term(1, 1);
  FrobTerm mphi01 = lift(phi_term(0, 1));
  CHECK_FALSE(decide(phi11, mphi01, Theory::frob).equal);
  CHECK(decide(phi11, mphi01, Theory::frob_phi).equal);
  CHECK_FALSE(decide(P("dd 0 . db 0"), id(1), Theory::frob_phi).equal);
  CHECK(decide(P("dd 0 . db 0"), id(1), Theory::frob_sep).equal);
  Decision mismatch = decide(id(0), id(1), Theory::frob);
  CHECK_FALSE(mismatch.equal);
  CHECK_FALSE(mismatch.note.empty());
  for (Theory th : kAll) CHECK(decide(phi11, phi11, th).equal);
}

TEST_CASE("Phi stays position dependent without the Phi equations") {
  for (unsigned k = 0; k <= 3; ++k) {
    CHECK_FALSE(decide(phi_term(1, k), lift(phi_term(0, k)), Theory::frob_sep).equal);
    for (unsigned n = 0; n <= 3; ++n) {
      FrobTerm moved = lift(phi_term(0, k), n);
      CHECK(decide(phi_term(n, k), moved, Theory::frob_phi).equal);
      CHECK(decide(phi_term(n, k), moved, Theory::sep_matrix).equal);
    }
  }
}

TEST_CASE("quotients are monotone and normalization is idempotent") {
  std::vector<FrobTerm> terms = enumerate_terms(4, 1);
  std::vector<std::vector<Diagram>> nf(4);
  for (const auto& t : terms) {
    Diagram d = eval_frob(t);
    for (int i = 0; i < 4; ++i) {
      Diagram n = normalize(d, kAll[i]);
      CHECK(normalize(n, kAll[i]) == n);
      CHECK(normalize(pad_high(d, 1), kAll[i]) == pad_high(n, 1));
      nf[i].push_back(n);
    }
    Diagram sm = nf[3].back();
    for (std::size_t c = 0; c < sm.class_count(); ++c) {
      if (c == sm.class_of(1)) {
        CHECK(sm.label(c).is_finite());
      } else {
        CHECK(sm.label(c).is_zero());
      }
    }
  }
  std::mt19937_64 rng(31);
  for (int s = 0; s < 3000; ++s) {
    std::size_t a = rng() % terms.size();
    std::size_t b = rng() % terms.size();
    if (!(nf[0][a].type() == nf[0][b].type())) continue;
    bool eq[4];
    for (int i = 0; i < 4; ++i) eq[i] = nf[i][a] == nf[i][b];
    if (eq[0]) CHECK((eq[1] && eq[2] && eq[3]));
    if (eq[1] || eq[2]) CHECK(eq[3]);
  }
}

TEST_CASE("decisions are congruences") {
  std::vector<std::pair<FrobTerm, FrobTerm>> pairs = {
      {phi_term(1, 1), lift(phi_term(0, 1))},
      {P("dd 0 . db 0"), id(1)},
  };
  FrobTerm ctx = P("eb 0 . dd 0 . M ed 0");
  for (Theory th : kAll) {
    for (const auto& [a, b] : pairs) {
      if (!decide(a, b, th).equal) continue;
      CHECK(decide(lift(a), lift(b), th).equal);
      CHECK(decide(compose(ctx, a), compose(ctx, b), th).equal);
    }
  }
}

TEST_CASE("normalize rejects invalid diagrams") {
  Diagram bad = D(1, 1, {{1, -1}, {3, -3}, {2}, {-2}});
  CHECK_THROWS_AS(normalize(bad, Theory::frob_phi), std::invalid_argument);
}
