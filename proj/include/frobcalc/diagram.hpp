#ifndef FROBCALC_DIAGRAM_HPP_
#define FROBCALC_DIAGRAM_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "frobcalc/ordinal.hpp"
#include "frobcalc/terms.hpp"

namespace frobcalc {

/// A Frobenius split equivalence of type n -> m.
///
/// Source positions are +1..+(2n+1) and target positions -1..-(2m+1). Wire w
/// sits at magnitude 2w, gaps at odd magnitudes. Classes are numbered in
/// canonical order: scanning magnitudes 1, 2, ... and visiting +k before -k,
/// the class first met gets the next number. Two diagrams are equal exactly
/// when their representations are.
class Diagram {
 public:
  /// The identity on 0.
  Diagram();

  /// The identity on n: vertical classes {+i, -i}, all labels 0.
  static Diagram identity(unsigned n);

  /// Builds a diagram from explicit classes. Every position of the type must
  /// occur in exactly one class; `labels` is either empty (all 0) or has one
  /// entry per class. Structural invariants are not checked here (see
  /// `check_invariants`). Throws std::invalid_argument on a malformed
  /// partition.
  static Diagram from_classes(ArrowType type,
                              const std::vector<std::vector<int>>& classes,
                              std::vector<Ordinal> labels = {});

  ArrowType type() const noexcept { return type_; }
  std::size_t class_count() const noexcept { return labels_.size(); }

  /// Class number of a position; the position must be in range.
  std::size_t class_of(int position) const;
  /// Positions of a class: positives ascending, then negatives by magnitude.
  std::vector<int> positions(std::size_t cls) const;
  const Ordinal& label(std::size_t cls) const { return labels_[cls]; }
  const std::vector<Ordinal>& labels() const noexcept { return labels_; }
  /// Classes made of even magnitudes are wire material.
  bool is_even_class(std::size_t cls) const;

  /// Same partition, new labels (one per class).
  Diagram with_labels(std::vector<Ordinal> labels) const;

  std::size_t hash() const noexcept { return hash_; }

  friend bool operator==(const Diagram& a, const Diagram& b) noexcept;

 private:
  explicit Diagram(ArrowType type) : type_(type) {}  // empty storage
  std::size_t slot(int position) const;
  void finish();  // renumbers classes canonically and recomputes the hash

  ArrowType type_;
  std::vector<std::uint32_t> class_of_;  // tops, then bottoms, by magnitude
  std::vector<Ordinal> labels_;
  std::size_t hash_ = 0;

  friend Diagram compose(const Diagram& g, const Diagram& f);
  friend Diagram pad_high(const Diagram& d, unsigned n);
  friend Diagram pad_low(const Diagram& d, unsigned n);
  friend Diagram mirror(const Diagram& d);
};

struct DiagramHash {
  std::size_t operator()(const Diagram& d) const noexcept { return d.hash(); }
};

enum class GenFamily { a, b, c };

/// a_k (caps), b_k (cups) and c_k (labelled identities), k >= 1.
struct GeneratorSymbol {
  GenFamily family = GenFamily::c;
  unsigned index = 1;
  Ordinal label;
};

/// The generator at its minimal type: a_{2n+1} : n+1 -> n,
/// a_{2n+2} : n+2 -> n+1, b_k mirrored, c_{2n+1} : n -> n,
/// c_{2n+2} : n+1 -> n+1. Throws std::invalid_argument for index 0.
Diagram generator_diagram(const GeneratorSymbol& g);

/// g after f. Throws TypeError when tgt(f) != src(g).
Diagram compose(const Diagram& g, const Diagram& f);

/// Adds n wire/gap pairs at the high end (M^n).
Diagram pad_high(const Diagram& d, unsigned n);

/// Shifts everything up by n wires and inserts n identity pairs at the low
/// end (subscript increase by n).
Diagram pad_low(const Diagram& d, unsigned n);

/// Top/bottom mirror image (swaps the sign of every position).
Diagram mirror(const Diagram& d);

/// Diagram of a Frob term. Throws TypeError for an ill-typed term.
Diagram eval_frob(const FrobTerm& t);

bool equal_diagrams(const Diagram& a, const Diagram& b);

/// True when the two differ only by high-end padding.
bool equal_up_to_pad(const Diagram& a, const Diagram& b);

/// Every violated structural invariant, one message each. Empty means the
/// diagram is a Frobenius split equivalence.
std::vector<std::string> check_invariants(const Diagram& d);

enum class RenderFormat { ascii, svg };

std::string render(const Diagram& d, RenderFormat format);

/// Line format: "type: N -> M" then one "class: <pos>... [: <ordinal>]"
/// line per class in canonical order, zero labels omitted. No trailing
/// newline.
std::string serialize(const Diagram& d);

/// Inverse of `serialize`. Throws ParseError on malformed text, on a bad
/// partition, or when the result violates an invariant.
Diagram parse_diagram(std::string_view text);

}  // namespace frobcalc

#endif  // FROBCALC_DIAGRAM_HPP_
