#ifndef FROBCALC_TERMS_HPP_
#define FROBCALC_TERMS_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace frobcalc {

/// Source and target objects of an arrow. Objects are naturals.
struct ArrowType {
  unsigned src = 0;
  unsigned tgt = 0;

  friend auto operator<=>(const ArrowType&, const ArrowType&) = default;
};

std::string to_string(ArrowType t);

// ---------------------------------------------------------------------------
// Language traits.
//
// Each language lists its generator constructors (each carrying a natural
// subscript) and its functor constructors. For the two-sorted languages the
// objects are numbered by the length of the functor word applied to the
// generating object, so the sort of an object is its parity.

struct FrobLang {
  enum class Gen : std::uint8_t { eps_box, eps_dia, delta_box, delta_dia };
  enum class Functor : std::uint8_t { M };
  static constexpr std::string_view name = "frob";
  static constexpr std::array<std::string_view, 4> gen_keywords = {"eb", "ed",
                                                                   "db", "dd"};
  static constexpr std::array<std::string_view, 1> functor_keywords = {"M"};

  static std::optional<ArrowType> gen_type(Gen g, unsigned n);
  static std::optional<ArrowType> apply_type(Functor f, ArrowType t);
};

/// The free monad: the diamond half of Frob.
struct MonadLang {
  enum class Gen : std::uint8_t { eps_dia, delta_dia };
  enum class Functor : std::uint8_t { M };
  static constexpr std::string_view name = "monad";
  static constexpr std::array<std::string_view, 2> gen_keywords = {"ed", "dd"};
  static constexpr std::array<std::string_view, 1> functor_keywords = {"M"};

  static std::optional<ArrowType> gen_type(Gen g, unsigned n);
  static std::optional<ArrowType> apply_type(Functor f, ArrowType t);
};

/// The free self-adjunction: gam n : n -> n+2, phi n : n+2 -> n.
struct SelfAdjLang {
  enum class Gen : std::uint8_t { gamma, phi };
  enum class Functor : std::uint8_t { F };
  static constexpr std::string_view name = "selfadj";
  static constexpr std::array<std::string_view, 2> gen_keywords = {"gam",
                                                                   "phi"};
  static constexpr std::array<std::string_view, 1> functor_keywords = {"F"};

  static std::optional<ArrowType> gen_type(Gen g, unsigned n);
  static std::optional<ArrowType> apply_type(Functor f, ArrowType t);
};

/// The free adjunction F -| G generated on the B side. Even objects are the
/// B-side objects (GF)^k 0, odd objects the A-side objects F(GF)^k 0.
struct AdjLang {
  enum class Gen : std::uint8_t { gamma, phi };
  enum class Functor : std::uint8_t { F, G };
  static constexpr std::string_view name = "adj";
  static constexpr std::array<std::string_view, 2> gen_keywords = {"gam",
                                                                   "phi"};
  static constexpr std::array<std::string_view, 2> functor_keywords = {"F",
                                                                       "G"};

  static std::optional<ArrowType> gen_type(Gen g, unsigned n);
  static std::optional<ArrowType> apply_type(Functor f, ArrowType t);
};

/// The free bijunction P -| U -| P generated on the A side. Even objects are
/// A-side objects (PU)^k 0, odd objects B-side objects U(PU)^k 0.
struct BijLang {
  enum class Gen : std::uint8_t { gamma_a, gamma_b, phi_a, phi_b };
  enum class Functor : std::uint8_t { P, U };
  static constexpr std::string_view name = "bij";
  static constexpr std::array<std::string_view, 4> gen_keywords = {
      "gamA", "gamB", "phiA", "phiB"};
  static constexpr std::array<std::string_view, 2> functor_keywords = {"P",
                                                                       "U"};

  static std::optional<ArrowType> gen_type(Gen g, unsigned n);
  static std::optional<ArrowType> apply_type(Functor f, ArrowType t);
};

// ---------------------------------------------------------------------------

enum class TermKind : std::uint8_t { id, gen, compose, apply };

/// Immutable arrow term. `compose(g, f)` applies f first.
template <class Lang>
class Term {
 public:
  using Gen = typename Lang::Gen;
  using Functor = typename Lang::Functor;

  static Term identity(unsigned n);
  static Term generator(Gen g, unsigned n);
  static Term compose(Term g, Term f);
  static Term apply(Functor functor, Term f);

  TermKind kind() const noexcept { return node_->kind; }
  /// Subscript of an identity or generator.
  unsigned index() const noexcept { return node_->index; }
  Gen gen() const noexcept { return static_cast<Gen>(node_->tag); }
  Functor functor() const noexcept { return static_cast<Functor>(node_->tag); }
  /// The left operand of a composition (applied second).
  const Term& outer() const noexcept { return *node_->left; }
  /// The right operand of a composition (applied first), or the argument of
  /// a functor application.
  const Term& inner() const noexcept { return *node_->right; }

  bool is_identity() const noexcept { return kind() == TermKind::id; }

  friend bool operator==(const Term& a, const Term& b) noexcept {
    return a.equals(b);
  }

 private:
  struct Node {
    TermKind kind;
    std::uint8_t tag = 0;
    unsigned index = 0;
    std::shared_ptr<const Term> left;
    std::shared_ptr<const Term> right;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  bool equals(const Term& other) const noexcept;

  std::shared_ptr<const Node> node_;
};

using FrobTerm = Term<FrobLang>;
using MonadTerm = Term<MonadLang>;
using SelfAdjTerm = Term<SelfAdjLang>;
using AdjTerm = Term<AdjLang>;
using BijTerm = Term<BijLang>;

/// Types a term; throws TypeError naming the ill-composed pair.
template <class Lang>
ArrowType type_of(const Term<Lang>& t);

/// Number of generator occurrences.
template <class Lang>
std::size_t generator_count(const Term<Lang>& t);

/// Parses the language's term grammar. "." is right-associative and binds
/// loosest; functors are prefix; "x" (Frob only) is left-associative tensor
/// and is desugared with `tensor_term`. Throws ParseError (also for a
/// constructor that belongs to another language) and TypeError.
template <class Lang>
Term<Lang> parse_term(std::string_view text);

/// Fully parenthesized canonical text.
template <class Lang>
std::string to_string(const Term<Lang>& t);

// ---------------------------------------------------------------------------
// Frob builders

namespace frob {

FrobTerm id(unsigned n);
FrobTerm eps_box(unsigned n);
FrobTerm eps_dia(unsigned n);
FrobTerm delta_box(unsigned n);
FrobTerm delta_dia(unsigned n);
FrobTerm lift(FrobTerm f);
FrobTerm lift(FrobTerm f, unsigned times);
FrobTerm compose(FrobTerm g, FrobTerm f);

}  // namespace frob

/// Adds n to every subscript (f (x) 1_n); M-depth unchanged.
FrobTerm subscript_shift(const FrobTerm& f, unsigned n);

/// f1 (x) f2 = (f1 (x) 1_{m2}) . (1_{n1} (x) f2), with identity factors
/// elided.
FrobTerm tensor_term(const FrobTerm& f1, const FrobTerm& f2);

/// eps_box_n . (delta_dia_n)^k . (delta_box_n)^k . eps_dia_n : n -> n, where
/// (delta_box_n)^(k+1) = delta_box_{n+k} . (delta_box_n)^k and
/// (delta_dia_n)^(k+1) = (delta_dia_n)^k . delta_dia_{n+k}.
FrobTerm phi_term(unsigned n, unsigned k);

/// kappa^0_{2n+1} = 1_{2n+1}, kappa^{k+1} = kappa^k . phi_{2n+1} . gam_{2n+1}.
SelfAdjTerm kappa_term(unsigned n, unsigned k);

}  // namespace frobcalc

#endif  // FROBCALC_TERMS_HPP_
