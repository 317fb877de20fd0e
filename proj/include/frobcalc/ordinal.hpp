#ifndef FROBCALC_ORDINAL_HPP_
#define FROBCALC_ORDINAL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace frobcalc {

using BigInt = boost::multiprecision::cpp_int;

/// An ordinal below epsilon_0 in hereditary Cantor normal form.
///
/// The value w^a1 # ... # w^an is stored as the sequence of exponents
/// a1 >= ... >= an with repetitions kept (no coefficient compression), so
/// that natural sum is a sorted merge and equality of values is structural
/// equality. The empty sequence is 0. Instances are immutable and share
/// their exponent storage.
class Ordinal {
 public:
  /// Zero.
  Ordinal() = default;

  /// The finite ordinal n, i.e. n copies of w^0.
  static Ordinal natural(std::uint64_t n);

  /// Builds from exponents in any order; sorts them nonincreasing.
  static Ordinal from_exponents(std::vector<Ordinal> exponents);

  bool is_zero() const noexcept { return rep_ == nullptr; }
  /// True when every exponent is 0.
  bool is_finite() const noexcept;
  /// The value as a natural, when finite.
  std::optional<std::uint64_t> finite_value() const noexcept;

  /// Exponents in nonincreasing order.
  std::span<const Ordinal> exponents() const noexcept;
  std::size_t summand_count() const noexcept { return exponents().size(); }

  std::size_t hash() const noexcept { return rep_ ? rep_->hash : 0x9e3779b9u; }

  friend bool operator==(const Ordinal& a, const Ordinal& b) noexcept;
  friend std::strong_ordering operator<=>(const Ordinal& a,
                                          const Ordinal& b) noexcept;

 private:
  struct Rep {
    std::vector<Ordinal> exponents;
    std::size_t hash;
  };
  explicit Ordinal(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  static Ordinal from_sorted(std::vector<Ordinal> exponents);

  std::shared_ptr<const Rep> rep_;

  friend Ordinal nat_sum(const Ordinal& a, const Ordinal& b);
};

/// Total CNF order.
std::strong_ordering compare(const Ordinal& a, const Ordinal& b) noexcept;

/// Hessenberg natural sum: union of exponent multisets.
Ordinal nat_sum(const Ordinal& a, const Ordinal& b);
Ordinal nat_sum(std::span<const Ordinal> terms);

/// w^a.
Ordinal omega_pow(const Ordinal& a);

/// The hierarchy-collapsing homomorphism from epsilon_0 onto w^w.
///
/// 0 maps to 0, natural sums map to natural sums, a summand w^0 maps to 1,
/// and a summand w^e with e = w^g1 # ... # w^gk (k >= 1) maps to
/// w^k # collapse(g1) # ... # collapse(gk).
Ordinal collapse(const Ordinal& a);

enum class HeightParity { even, odd, inhomogeneous };

/// 0 has even height; a natural sum of powers whose exponents all have even
/// (odd) height has odd (even) height; anything else is inhomogeneous.
HeightParity height_parity(const Ordinal& a);

enum class RegionParity { even, odd };

/// Normal form of a region label under separability.
///
/// In an odd region every summand w^e is kept as w^(sep_norm(e, even)).
/// In an even region summands w^0 (empty holes) are dropped and the rest
/// become w^(sep_norm(e, odd)). The result has homogeneous height matching
/// the region (or is 0).
Ordinal sep_norm(const Ordinal& a, RegionParity region);

/// Largest prime index `prime_code` will sieve for.
inline constexpr std::uint64_t kDefaultPrimeIndexCap = 1'000'000;

/// Injective monoid homomorphism (#, 0) -> (*, 1) with w^a -> p_{code(a)},
/// p_1 = 2. Throws ResourceError when a prime index beyond the cap is needed.
BigInt prime_code(const Ordinal& a,
                  std::uint64_t prime_index_cap = kDefaultPrimeIndexCap);

/// The n-th prime, 1-based (nth_prime(1) == 2).
std::uint64_t nth_prime(std::uint64_t n);

/// Parses `ord := atom ("#" atom)*`, `atom := NAT | "w" | "w^" atom |
/// "(" ord ")"`. Throws ParseError.
Ordinal parse_ordinal(std::string_view text);

/// Canonical minimal text: decimals for naturals, "w" for w^1, summands
/// nonincreasing, finite tail folded into one decimal.
std::string to_string(const Ordinal& a);

struct OrdinalHash {
  std::size_t operator()(const Ordinal& a) const noexcept { return a.hash(); }
};

}  // namespace frobcalc

#endif  // FROBCALC_ORDINAL_HPP_
