#include <doctest.h>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "frobcalc/diagram.hpp"
#include "frobcalc/error.hpp"
#include "frobcalc/matrix.hpp"
#include "frobcalc/prover.hpp"
#include "frobcalc/terms.hpp"
#include "frobcalc/theories.hpp"

using namespace frobcalc;
using namespace frobcalc::frob;

namespace {

FrobTerm P(const char* s) { return parse_term<FrobLang>(s); }

IntMatrix rows(std::vector<std::vector<int>> r) {
  IntMatrix m(r.size(), r.empty() ? 0 : r[0].size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r[i].size(); ++j) m.at(i, j) = r[i][j];
  }
  return m;
}

std::vector<unsigned> digits(std::size_t index, unsigned count, unsigned p) {
  std::vector<unsigned> d(count);
  for (unsigned w = count; w-- > 0;) {
    d[w] = index % p;
    index /= p;
  }
  return d;
}

// Oracle: a lifted generator M^lift(g_sub) built entrywise. Wires below the
// generator (sub of them) and above it (lift of them) pass straight through.
IntMatrix generator_oracle(FrobLang::Gen g, unsigned sub, unsigned lift,
                           unsigned p) {
  unsigned in_local = 0;
  unsigned out_local = 0;
  switch (g) {
    case FrobLang::Gen::eps_box: in_local = 1; out_local = 0; break;
    case FrobLang::Gen::eps_dia: in_local = 0; out_local = 1; break;
    case FrobLang::Gen::delta_box: in_local = 1; out_local = 2; break;
    case FrobLang::Gen::delta_dia: in_local = 2; out_local = 1; break;
  }
  unsigned n = sub + in_local + lift;
  unsigned m = sub + out_local + lift;
  std::size_t R = 1, C = 1;
  for (unsigned i = 0; i < m; ++i) R *= p;
  for (unsigned i = 0; i < n; ++i) C *= p;
  IntMatrix out(R, C);
  for (std::size_t r = 0; r < R; ++r) {
    for (std::size_t c = 0; c < C; ++c) {
      auto od = digits(r, m, p);
      auto id = digits(c, n, p);
      bool ok = true;
      for (unsigned w = 0; w < sub; ++w) ok = ok && od[w] == id[w];
      for (unsigned w = 0; w < lift; ++w) {
        ok = ok && od[sub + out_local + w] == id[sub + in_local + w];
      }
      // every local wire carries the same value
      std::vector<unsigned> local;
      for (unsigned w = 0; w < in_local; ++w) local.push_back(id[sub + w]);
      for (unsigned w = 0; w < out_local; ++w) local.push_back(od[sub + w]);
      for (std::size_t k = 1; k < local.size(); ++k) ok = ok && local[k] == local[0];
      out.at(r, c) = ok ? 1 : 0;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("small matrices") {
  CHECK(matrix_of_term(P("eb 0 . ed 0"), 3) == rows({{3}}));
  CHECK(matrix_of_term(id(1), 2) == IntMatrix::identity(2));
  CHECK(matrix_of_term(P("eb 0"), 2) == rows({{1, 1}}));
  CHECK(matrix_of_term(P("ed 0"), 2) == rows({{1}, {1}}));
  CHECK(matrix_of_term(P("dd 0"), 2) == rows({{1, 0, 0, 0}, {0, 0, 0, 1}}));
  CHECK(matrix_of_term(P("db 0"), 2) == rows({{1, 0}, {0, 0}, {0, 0}, {0, 1}}));
  CHECK(to_string(matrix_of_term(P("eb 0 . ed 0"), 3)) == "1 x 1\n3");
  CHECK(to_string(matrix_of_term(P("dd 0"), 2)) == "2 x 4\n1 0 0 0\n0 0 0 1");
  CHECK_THROWS_AS(matrix_of_term(id(0), 1), std::invalid_argument);
  CHECK_THROWS_AS(matrix_of_term(id(21), 2), ResourceError);
}

TEST_CASE("generator matrices match the entrywise oracle") {
  for (unsigned p : {2u, 3u}) {
    for (auto g : {FrobLang::Gen::eps_box, FrobLang::Gen::eps_dia,
                   FrobLang::Gen::delta_box, FrobLang::Gen::delta_dia}) {
      for (unsigned sub = 0; sub <= 2; ++sub) {
        for (unsigned l = 0; l <= 2; ++l) {
          FrobTerm t = lift(FrobTerm::generator(g, sub), l);
          CHECK(matrix_of_term(t, p) == generator_oracle(g, sub, l, p));
        }
      }
    }
  }
}

TEST_CASE("Frobenius sides agree as 4 x 4 matrices") {
  IntMatrix a = matrix_of_term(P("M dd 0 . db 1"), 2);
  IntMatrix b = matrix_of_term(P("dd 1 . M db 0"), 2);
  IntMatrix c = matrix_of_term(P("db 0 . dd 0"), 2);
  CHECK(a.rows() == 4);
  CHECK(a.cols() == 4);
  CHECK(a == b);
  CHECK(b == c);
}

TEST_CASE("Mat validates Phi and separability") {
  for (unsigned p : {2u, 3u}) {
    for (unsigned n = 0; n <= 3; ++n) {
      CHECK(matrix_of_term(compose(delta_dia(n), delta_box(n)), p) ==
            IntMatrix::identity(matrix_of_term(id(n + 1), p).rows()));
      for (unsigned k = 0; k <= 3; ++k) {
        CHECK(matrix_of_term(phi_term(n, k), p) ==
              matrix_of_term(lift(phi_term(0, k), n), p));
      }
    }
  }
}

TEST_CASE("matrices of canonical diagrams") {
  Diagram dd = normalize(eval_frob(P("dd 0")), Theory::sep_matrix);
  CHECK(matrix_of_diagram(dd, 2) == rows({{1, 0, 0, 0}, {0, 0, 0, 1}}));
  CHECK(matrix_of_diagram(Diagram::identity(1), 3) == IntMatrix::identity(3));
  Diagram two = generator_diagram({GenFamily::c, 1, Ordinal::natural(2)});
  CHECK(matrix_of_diagram(two, 3) == rows({{9}}));
  Diagram not_canonical = generator_diagram({GenFamily::c, 2, Ordinal::natural(1)});
  CHECK_THROWS_AS(matrix_of_diagram(not_canonical, 2), std::invalid_argument);
}

TEST_CASE("term and diagram matrices agree") {
  std::vector<FrobTerm> terms = enumerate_terms(4, 2);
  std::mt19937_64 rng(41);
  for (int i = 0; i < 150; ++i) {
    const FrobTerm& t = terms[rng() % terms.size()];
    Diagram d = normalize(eval_frob(t), Theory::sep_matrix);
    for (unsigned p : {2u, 3u}) CHECK(matrix_of_term(t, p) == matrix_of_diagram(d, p));
  }
}

TEST_CASE("kron and multiply") {
  IntMatrix a = rows({{1, 2}, {3, 4}});
  IntMatrix b = rows({{0, 1}, {1, 0}});
  CHECK(multiply(a, b) == rows({{2, 1}, {4, 3}}));
  CHECK(kron(a, b) == rows({{0, 1, 0, 2}, {1, 0, 2, 0}, {0, 3, 0, 4}, {3, 0, 4, 0}}));
  CHECK(scale(a, 3) == rows({{3, 6}, {9, 12}}));
  CHECK_THROWS_AS(multiply(a, rows({{1, 2, 3}})), std::invalid_argument);
}

TEST_CASE("collision search") {
  CollisionReport frob4 = collision_search(Theory::frob, 2, 4,
                                           {2, 400'000, 100'000});
  CHECK(frob4.complete);
  CHECK(frob4.equal_diagram_count == 0);
  bool witness = false;
  Spine a = spine_of(phi_term(1, 0));
  Spine b = spine_of(lift(phi_term(0, 0)));
  for (const auto& c : frob4.equal_matrix) {
    Spine x = spine_of(c.first);
    Spine y = spine_of(c.second);
    witness |= (x == a && y == b) || (x == b && y == a);
  }
  CHECK(witness);
  CollisionReport sm = collision_search(Theory::sep_matrix, 2, 5);
  CHECK(sm.complete);
  CHECK(sm.equal_matrix_count == 0);
  CHECK(sm.equal_diagram_count == 0);
  CollisionReport empty = collision_search(Theory::frob_phi, 3, 0);
  CHECK(empty.equal_matrix_count == 0);
  CHECK(empty.equal_diagram_count == 0);
  CollisionReport capped = collision_search(Theory::frob, 2, 6, {2, 1000, 5});
  CHECK_FALSE(capped.complete);
}
