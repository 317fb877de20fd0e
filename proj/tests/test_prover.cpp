#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "frobcalc/diagram.hpp"
#include "frobcalc/prover.hpp"
#include "frobcalc/terms.hpp"
#include "frobcalc/theories.hpp"

using namespace frobcalc;
using namespace frobcalc::frob;

namespace {

FrobTerm P(const char* s) { return parse_term<FrobLang>(s); }

// Oracle: composable chains of lifted generators counted by a transfer
// recurrence over objects, plus the identities.
std::size_t count_oracle(unsigned max_size, unsigned max_object) {
  std::vector<std::pair<unsigned, unsigned>> steps;
  for (unsigned sub = 0; sub <= max_object; ++sub) {
    for (unsigned l = 0; sub + l <= max_object; ++l) {
      unsigned n = sub + l;
      steps.push_back({n + 1, n});
      steps.push_back({n, n + 1});
      steps.push_back({n + 1, n + 2});
      steps.push_back({n + 2, n + 1});
    }
  }
  std::size_t total = max_object + 1;
  std::map<unsigned, std::size_t> ending;
  for (auto [a, b] : steps) ending[b] += 1;
  for (unsigned len = 1; len <= max_size; ++len) {
    for (auto& [o, c] : ending) total += c;
    std::map<unsigned, std::size_t> next;
    for (auto [a, b] : steps) {
      auto it = ending.find(a);
      if (it != ending.end()) next[b] += it->second;
    }
    ending = std::move(next);
  }
  return total;
}

}  // namespace

TEST_CASE("enumeration") {
  std::vector<FrobTerm> small = enumerate_terms(1, 1);
  for (const char* text : {"id 0", "id 1", "eb 0", "ed 0", "db 0", "dd 0"}) {
    bool found = false;
    for (const auto& t : small) found |= t == P(text);
    CHECK(found);
  }
  CHECK(small.size() == 14);
  CHECK(enumerate_terms(0, 3).size() == 4);
  for (const auto& t : enumerate_terms(0, 3)) CHECK(t.is_identity());
  CHECK(enumerate_terms(2, 2).size() == count_oracle(2, 2));
  CHECK(enumerate_terms(2, 2).size() == 181);
  CHECK(enumerate_terms(4, 2).size() == count_oracle(4, 2));
  std::size_t n = 0;
  for_each_spine(6, 1, [&](const Spine&) { ++n; return true; });
  CHECK(n == count_oracle(6, 1));
}

TEST_CASE("enumeration is duplicate free and deterministic") {
  std::vector<FrobTerm> a = enumerate_terms(3, 2);
  std::vector<FrobTerm> b = enumerate_terms(3, 2);
  REQUIRE(a.size() == b.size());
  std::set<std::string> seen;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    seen.insert(to_string(a[i]));
  }
  CHECK(seen.size() == a.size());
  std::size_t k = 0;
  for_each_spine(5, 2, [&](const Spine&) { return ++k < 10; });
  CHECK(k == 10);
}

TEST_CASE("spines") {
  FrobTerm t = P("M M (eb 0 . ed 0) . id 2 . (M dd 0 . db 1)");
  Spine s = spine_of(t);
  CHECK(s.source == 2);
  CHECK(s.steps.size() == 4);
  CHECK(eval_frob(term_of(s)) == eval_frob(t));
  CHECK(spine_of(term_of(s)) == s);
  CHECK(spine_of(P("M M id 0")) == Spine{2, {}});
  CHECK(type_of(s) == type_of(t));
}

TEST_CASE("every rewrite move preserves the diagram") {
  std::vector<FrobTerm> terms = enumerate_terms(4, 1);
  for (Theory th : {Theory::frob, Theory::frob_phi, Theory::frob_sep,
                    Theory::sep_matrix}) {
    std::size_t moves = 0;
    std::size_t bad = 0;
    for (std::size_t i = 0; i < terms.size(); i += 7) {
      Spine s = spine_of(terms[i]);
      Diagram d = normalize(eval_frob(terms[i]), th);
      for (const auto& mv : rewrite_moves(s, th)) {
        ++moves;
        if (!(normalize(eval_frob(term_of(mv.result)), th) == d)) ++bad;
      }
    }
    CHECK(moves > 1000);
    CHECK(bad == 0);
  }
}

TEST_CASE("proof search examples") {
  SearchOptions one;
  one.depth = 1;
  SearchResult beta = rewrite_search(P("eb 1 . db 0"), id(1), Theory::frob, one);
  REQUIRE(beta.status == SearchResult::Status::found);
  CHECK(beta.trace.size() == 1);
  CHECK(beta.trace[0].rule == "box-beta");

  SearchOptions two;
  two.depth = 2;
  SearchResult fr = rewrite_search(P("M dd 0 . db 1"), P("db 0 . dd 0"),
                                   Theory::frob, two);
  CHECK(fr.status == SearchResult::Status::found);
  SearchResult fr2 = rewrite_search(P("M dd 0 . db 1"), P("dd 1 . M db 0"),
                                    Theory::frob, two);
  CHECK(fr2.status == SearchResult::Status::found);

  SearchResult phi = rewrite_search(phi_term(1, 1), lift(phi_term(0, 1)),
                                    Theory::frob);
  CHECK(phi.status != SearchResult::Status::found);
  CHECK_FALSE(decide(phi_term(1, 1), lift(phi_term(0, 1)), Theory::frob).equal);
  SearchResult phi_ok = rewrite_search(phi_term(1, 1), lift(phi_term(0, 1)),
                                       Theory::frob_phi);
  CHECK(phi_ok.status == SearchResult::Status::found);

  SearchResult sep = rewrite_search(P("dd 0 . db 0"), id(1), Theory::frob_sep);
  CHECK(sep.status == SearchResult::Status::found);
  SearchResult nosep = rewrite_search(P("dd 0 . db 0"), id(1), Theory::frob);
  CHECK(nosep.status != SearchResult::Status::found);

  SearchResult same = rewrite_search(P("eb 0 . ed 0"), P("eb 0 . id 1 . ed 0"),
                                     Theory::frob);
  CHECK(same.status == SearchResult::Status::found);
  CHECK(same.trace.empty());
}

TEST_CASE("redundant associativity equations are derivable") {
  SearchResult r = rewrite_search(P("M db 0 . db 0"), P("db 1 . db 0"),
                                  Theory::frob);
  CHECK(r.status == SearchResult::Status::found);
}

TEST_CASE("naturality moves") {
  // eb_1 . M(dd 0) . M M(eb 0)... a naturality instance with a lifted f
  SearchResult r = rewrite_search(P("dd 0 . eb 2"), P("eb 1 . M dd 0"),
                                  Theory::frob);
  CHECK(r.status == SearchResult::Status::found);
}

TEST_CASE("trace format") {
  SearchResult r = rewrite_search(P("eb 1 . db 0"), id(1), Theory::frob);
  CHECK(format_trace(r) == "(eb 1 . db 0)\n= id 1   [box-beta -> @0]");
}

TEST_CASE("proofs found on random diagram-equal pairs are valid") {
  std::vector<FrobTerm> terms = enumerate_terms(4, 2);
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    groups[serialize(eval_frob(terms[i]))].push_back(i);
  }
  std::vector<const std::vector<std::size_t>*> multi;
  for (const auto& [k, v] : groups) {
    if (v.size() > 1) multi.push_back(&v);
  }
  std::mt19937_64 rng(51);
  for (int i = 0; i < 40; ++i) {
    const auto& g = *multi[rng() % multi.size()];
    const FrobTerm& a = terms[g[rng() % g.size()]];
    const FrobTerm& b = terms[g[rng() % g.size()]];
    SearchResult r = rewrite_search(a, b, Theory::frob);
    REQUIRE(r.status == SearchResult::Status::found);
    for (const auto& st : r.trace) CHECK(eval_frob(st.term) == eval_frob(a));
    if (!r.trace.empty()) CHECK(spine_of(r.trace.back().term) == spine_of(b));
  }
}

TEST_CASE("node cap gives an incomplete result") {
  SearchOptions tiny;
  tiny.node_cap = 5;
  SearchResult r = rewrite_search(phi_term(1, 2), lift(phi_term(0, 2)),
                                  Theory::frob, tiny);
  CHECK(r.status == SearchResult::Status::incomplete);
}
