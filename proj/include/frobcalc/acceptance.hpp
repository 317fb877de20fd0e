#ifndef FROBCALC_ACCEPTANCE_HPP_
#define FROBCALC_ACCEPTANCE_HPP_

#include <string>
#include <vector>

#include "frobcalc/terms.hpp"

namespace frobcalc {

struct CriterionResult {
  std::string id;
  bool passed = false;
  /// Short deterministic summary of what was checked.
  std::string detail;
};

/// "A1" .. "A9".
std::vector<std::string> criterion_ids();

/// Runs one acceptance criterion. Unknown ids throw std::invalid_argument.
CriterionResult run_criterion(const std::string& id);

/// "<id> PASS <detail>" or "<id> FAIL <detail>".
std::string format_result(const CriterionResult& r);

/// One instance of an equation schema of the free Frobenius monad.
struct EquationInstance {
  std::string name;
  FrobTerm lhs;
  FrobTerm rhs;
};

/// The instantiated equation suite: naturality, monad and comonad laws,
/// the Frobenius and Lawvere equations and the transported triangular
/// equations.
std::vector<EquationInstance> equation_instances();

}  // namespace frobcalc

#endif  // FROBCALC_ACCEPTANCE_HPP_
