#include "frobcalc/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>

#include "frobcalc/error.hpp"

namespace frobcalc {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) noexcept {
  return seed ^ (value + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

}  // namespace

Ordinal Ordinal::from_sorted(std::vector<Ordinal> exponents) {
  if (exponents.empty()) {
    return Ordinal();
  }
  std::size_t h = exponents.size();
  for (const auto& e : exponents) {
    h = mix(h, e.hash());
  }
  return Ordinal(std::make_shared<const Rep>(Rep{std::move(exponents), h}));
}

Ordinal Ordinal::natural(std::uint64_t n) {
  return from_sorted(std::vector<Ordinal>(n));
}

Ordinal Ordinal::from_exponents(std::vector<Ordinal> exponents) {
  std::sort(exponents.begin(), exponents.end(), std::greater<>());
  return from_sorted(std::move(exponents));
}

std::span<const Ordinal> Ordinal::exponents() const noexcept {
  if (rep_ == nullptr) {
    return {};
  }
  return rep_->exponents;
}

bool Ordinal::is_finite() const noexcept {
  // Sorted nonincreasing, so the first exponent is the largest.
  return rep_ == nullptr || rep_->exponents.front().is_zero();
}

std::optional<std::uint64_t> Ordinal::finite_value() const noexcept {
  if (!is_finite()) {
    return std::nullopt;
  }
  return summand_count();
}

bool operator==(const Ordinal& a, const Ordinal& b) noexcept {
  if (a.rep_ == b.rep_) {
    return true;
  }
  if (a.rep_ == nullptr || b.rep_ == nullptr || a.rep_->hash != b.rep_->hash) {
    return false;
  }
  return a.rep_->exponents == b.rep_->exponents;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) noexcept {
  if (a.rep_ == b.rep_) {
    return std::strong_ordering::equal;
  }
  auto ea = a.exponents();
  auto eb = b.exponents();
  std::size_t n = std::min(ea.size(), eb.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = ea[i] <=> eb[i];
    if (c != 0) {
      return c;
    }
  }
  return ea.size() <=> eb.size();
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) noexcept {
  return a <=> b;
}

Ordinal nat_sum(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero()) {
    return b;
  }
  if (b.is_zero()) {
    return a;
  }
  std::vector<Ordinal> merged;
  auto ea = a.exponents();
  auto eb = b.exponents();
  merged.reserve(ea.size() + eb.size());
  std::merge(ea.begin(), ea.end(), eb.begin(), eb.end(),
             std::back_inserter(merged), std::greater<>());
  return Ordinal::from_sorted(std::move(merged));
}

Ordinal nat_sum(std::span<const Ordinal> terms) {
  std::vector<Ordinal> all;
  for (const auto& t : terms) {
    auto e = t.exponents();
    all.insert(all.end(), e.begin(), e.end());
  }
  return Ordinal::from_exponents(std::move(all));
}

Ordinal omega_pow(const Ordinal& a) {
  return Ordinal::from_exponents({a});
}

Ordinal collapse(const Ordinal& a) {
  std::vector<Ordinal> out;
  for (const auto& e : a.exponents()) {
    if (e.is_zero()) {
      out.emplace_back();
      continue;
    }
    auto inner = e.exponents();
    out.push_back(Ordinal::natural(inner.size()));
    for (const auto& g : inner) {
      auto c = collapse(g);
      auto ce = c.exponents();
      out.insert(out.end(), ce.begin(), ce.end());
    }
  }
  return Ordinal::from_exponents(std::move(out));
}

HeightParity height_parity(const Ordinal& a) {
  if (a.is_zero()) {
    return HeightParity::even;
  }
  std::optional<HeightParity> seen;
  for (const auto& e : a.exponents()) {
    HeightParity summand;
    switch (height_parity(e)) {
      case HeightParity::even:
        summand = HeightParity::odd;
        break;
      case HeightParity::odd:
        summand = HeightParity::even;
        break;
      default:
        return HeightParity::inhomogeneous;
    }
    if (seen && *seen != summand) {
      return HeightParity::inhomogeneous;
    }
    seen = summand;
  }
  return *seen;
}

Ordinal sep_norm(const Ordinal& a, RegionParity region) {
  std::vector<Ordinal> out;
  for (const auto& e : a.exponents()) {
    if (region == RegionParity::odd) {
      out.push_back(sep_norm(e, RegionParity::even));
    } else if (!e.is_zero()) {
      out.push_back(sep_norm(e, RegionParity::odd));
    }
  }
  return Ordinal::from_exponents(std::move(out));
}

// ---------------------------------------------------------------------------
// Prime coding

namespace {

class PrimeTable {
 public:
  std::uint64_t nth(std::uint64_t n) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (primes_.size() < n) {
      grow();
    }
    return primes_[n - 1];
  }

 private:
  void grow() {
    limit_ = limit_ == 0 ? 1u << 16 : limit_ * 2;
    std::vector<bool> composite(limit_ + 1, false);
    primes_.clear();
    for (std::uint64_t i = 2; i <= limit_; ++i) {
      if (composite[i]) {
        continue;
      }
      primes_.push_back(i);
      for (std::uint64_t j = i * i; j <= limit_; j += i) {
        composite[j] = true;
      }
    }
  }

  std::mutex mutex_;
  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> primes_;
};

PrimeTable& prime_table() {
  static PrimeTable table;
  return table;
}

}  // namespace

std::uint64_t nth_prime(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("nth_prime: index is 1-based");
  }
  return prime_table().nth(n);
}

BigInt prime_code(const Ordinal& a, std::uint64_t prime_index_cap) {
  BigInt code = 1;
  for (const auto& e : a.exponents()) {
    BigInt index = prime_code(e, prime_index_cap);
    if (index > prime_index_cap) {
      throw ResourceError("prime_code: prime index " + index.str() +
                          " exceeds cap " + std::to_string(prime_index_cap));
    }
    code *= nth_prime(static_cast<std::uint64_t>(index));
  }
  return code;
}

// ---------------------------------------------------------------------------
// Text

namespace {

constexpr std::uint64_t kMaxLiteral = 1'000'000;

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse_all() {
    Ordinal result = ord();
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    }
    return result;
  }

 private:
  Ordinal ord() {
    std::vector<Ordinal> parts{atom()};
    while (peek() == '#') {
      ++pos_;
      parts.push_back(atom());
    }
    return nat_sum(parts);
  }

  Ordinal atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Ordinal inner = ord();
      expect(')');
      return inner;
    }
    if (c == 'w') {
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        return omega_pow(atom());
      }
      return omega_pow(Ordinal::natural(1));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      std::uint64_t value = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        if (value > kMaxLiteral) {
          throw ParseError(start, "natural literal too large");
        }
        ++pos_;
      }
      return Ordinal::natural(value);
    }
    if (pos_ >= text_.size()) {
      throw ParseError(pos_, "unexpected end of ordinal");
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "' in ordinal");
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) {
      throw ParseError(pos_, std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// An exponent prints bare when it is a natural or a single power.
std::string exponent_text(const Ordinal& e) {
  std::string s = to_string(e);
  if (e.is_finite() || e.summand_count() == 1) {
    return s;
  }
  return "(" + s + ")";
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) {
  return OrdinalParser(text).parse_all();
}

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) {
    return "0";
  }
  std::string out;
  std::uint64_t finite = 0;
  for (const auto& e : a.exponents()) {
    if (e.is_zero()) {
      ++finite;
      continue;
    }
    if (!out.empty()) {
      out += " # ";
    }
    if (e == Ordinal::natural(1)) {
      out += "w";
    } else {
      out += "w^" + exponent_text(e);
    }
  }
  if (finite > 0) {
    if (!out.empty()) {
      out += " # ";
    }
    out += std::to_string(finite);
  }
  return out;
}

}  // namespace frobcalc
