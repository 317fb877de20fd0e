#include "frobcalc/theories.hpp"

#include <stdexcept>
#include <vector>

namespace frobcalc {

std::string_view theory_name(Theory th) {
  switch (th) {
    case Theory::frob:
      return "frob";
    case Theory::frob_phi:
      return "frob-phi";
    case Theory::frob_sep:
      return "frob-sep";
    case Theory::sep_matrix:
      return "sep-matrix";
  }
  return "?";
}

std::optional<Theory> parse_theory(std::string_view name) {
  for (Theory th : {Theory::frob, Theory::frob_phi, Theory::frob_sep,
                    Theory::sep_matrix}) {
    if (theory_name(th) == name) {
      return th;
    }
  }
  return std::nullopt;
}

namespace {

Diagram phi_pass(const Diagram& d) {
  std::vector<Ordinal> labels(d.class_count());
  std::vector<Ordinal> moved;
  const std::size_t leftmost = d.class_of(1);
  for (std::size_t c = 0; c < d.class_count(); ++c) {
    const Ordinal& l = d.label(c);
    if (d.is_even_class(c)) {
      labels[c] = Ordinal::natural(l.summand_count());
      for (const auto& e : l.exponents()) {
        moved.push_back(collapse(e));
      }
    } else if (c != leftmost) {
      moved.push_back(collapse(l));
    }
  }
  moved.push_back(collapse(d.label(leftmost)));
  labels[leftmost] = nat_sum(moved);
  return d.with_labels(std::move(labels));
}

Diagram sep_pass(const Diagram& d) {
  std::vector<Ordinal> labels(d.class_count());
  for (std::size_t c = 0; c < d.class_count(); ++c) {
    labels[c] = sep_norm(d.label(c), d.is_even_class(c) ? RegionParity::even
                                                        : RegionParity::odd);
  }
  return d.with_labels(std::move(labels));
}

}  // namespace

Diagram normalize(const Diagram& d, Theory th) {
  auto problems = check_invariants(d);
  if (!problems.empty()) {
    throw std::invalid_argument("normalize: " + problems.front());
  }
  switch (th) {
    case Theory::frob:
      return d;
    case Theory::frob_phi:
      return phi_pass(d);
    case Theory::frob_sep:
      return sep_pass(d);
    case Theory::sep_matrix: {
      Diagram out = sep_pass(phi_pass(sep_pass(d)));
      const std::size_t leftmost = out.class_of(1);
      for (std::size_t c = 0; c < out.class_count(); ++c) {
        const Ordinal& l = out.label(c);
        if (c == leftmost ? !l.is_finite() : !l.is_zero()) {
          throw std::logic_error("sep-matrix normal form has a stray label " +
                                 to_string(l));
        }
      }
      return out;
    }
  }
  return d;
}

Decision decide(const FrobTerm& t1, const FrobTerm& t2, Theory th) {
  ArrowType a = type_of(t1);
  ArrowType b = type_of(t2);
  if (a != b) {
    return {false, "types differ: " + to_string(a) + " versus " + to_string(b)};
  }
  bool eq = normalize(eval_frob(t1), th) == normalize(eval_frob(t2), th);
  return {eq, {}};
}

}  // namespace frobcalc
