#ifndef FROBCALC_PROVER_HPP_
#define FROBCALC_PROVER_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "frobcalc/terms.hpp"
#include "frobcalc/theories.hpp"

namespace frobcalc {

/// One lifted generator M^lift(g_sub) of a composition chain.
struct SpineStep {
  FrobLang::Gen gen = FrobLang::Gen::eps_box;
  unsigned sub = 0;
  unsigned lift = 0;

  friend auto operator<=>(const SpineStep&, const SpineStep&) = default;
};

/// A term taken modulo the categorical and functorial equations: a chain of
/// lifted generators in application order (first applied first), starting
/// at `source`.
struct Spine {
  unsigned source = 0;
  std::vector<SpineStep> steps;

  friend bool operator==(const Spine&, const Spine&) = default;
};

ArrowType step_type(const SpineStep& s);
/// Throws TypeError when consecutive steps do not compose.
ArrowType type_of(const Spine& s);

/// Flattens compositions, pushes M through them and drops identities.
Spine spine_of(const FrobTerm& t);
/// The right-nested composite of the steps, or the identity on `source`.
FrobTerm term_of(const Spine& s);

/// Calls `visit` on every spine with at most `max_size` steps whose steps
/// satisfy sub + lift <= max_object, and on the identities 0..max_object.
/// Order: by size, then lexicographically by steps (a step compares by
/// generator eb < ed < db < dd, then subscript, then lift). Stops early
/// when `visit` returns false.
void for_each_spine(unsigned max_size, unsigned max_object,
                    const std::function<bool(const Spine&)>& visit);

/// The same corpus as terms.
std::vector<FrobTerm> enumerate_terms(unsigned max_size, unsigned max_object);

/// A single rule application.
struct RewriteMove {
  std::string rule;
  /// True when the left side of the rule was replaced by the right side.
  bool forward = true;
  /// Index of the first spine step touched.
  std::size_t position = 0;
  Spine result;
};

struct MoveLimits {
  /// Longest spine a move may produce.
  std::size_t max_length = 64;
  /// Largest object a move may pass through.
  unsigned max_object = 64;
  /// Whether moves that lengthen the spine are allowed.
  bool insertions = true;
};

/// Every application of every rule of the theory to `s`, in a fixed order.
std::vector<RewriteMove> rewrite_moves(const Spine& s, Theory th,
                                       const MoveLimits& limits = {});

struct ProofStep {
  std::string rule;
  bool forward = true;
  std::size_t position = 0;
  /// The term after this step.
  FrobTerm term;
};

struct SearchOptions {
  /// Total number of rule applications allowed in a proof.
  unsigned depth = 12;
  /// Bound on stored search nodes over both directions.
  std::size_t node_cap = 3'000'000;
  /// Extra length and object room the search may use above the inputs.
  unsigned length_slack = 2;
  unsigned object_slack = 2;
};

struct SearchResult {
  enum class Status { found, not_found, incomplete };
  Status status = Status::not_found;
  FrobTerm start = FrobTerm::identity(0);
  std::vector<ProofStep> trace;
  std::size_t nodes = 0;
};

/// Bidirectional breadth-first search for an equational proof of t1 = t2
/// in the theory. `not_found` and `incomplete` are inconclusive.
/// Throws TypeError for ill-typed terms.
SearchResult rewrite_search(const FrobTerm& t1, const FrobTerm& t2, Theory th,
                            const SearchOptions& options = {});

/// One line per step: "<term>" first, then "= <term>   [rule <dir> @pos]".
std::string format_trace(const SearchResult& r);

}  // namespace frobcalc

#endif  // FROBCALC_PROVER_HPP_
