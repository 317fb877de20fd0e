#ifndef FROBCALC_THEORIES_HPP_
#define FROBCALC_THEORIES_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "frobcalc/diagram.hpp"
#include "frobcalc/terms.hpp"

namespace frobcalc {

/// Equational theories, from the plain free Frobenius monad up to the
/// separable matrix theory. Stronger theories identify more arrows.
enum class Theory { frob, frob_phi, frob_sep, sep_matrix };

std::string_view theory_name(Theory th);
/// Accepts the CLI tokens frob, frob-phi, frob-sep and sep-matrix.
std::optional<Theory> parse_theory(std::string_view name);

/// Label-only normalization pass for the theory; the partition is never
/// changed. Throws std::invalid_argument when the input is not a Frobenius
/// split equivalence, std::logic_error if the sep-matrix shape is violated.
Diagram normalize(const Diagram& d, Theory th);

struct Decision {
  bool equal = false;
  /// Explains a negative answer caused by differing types.
  std::string note;
};

/// Equality of two terms in the theory. Throws TypeError for ill-typed
/// operands.
Decision decide(const FrobTerm& t1, const FrobTerm& t2, Theory th);

}  // namespace frobcalc

#endif  // FROBCALC_THEORIES_HPP_
