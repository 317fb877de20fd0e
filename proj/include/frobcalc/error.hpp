#ifndef FROBCALC_ERROR_HPP_
#define FROBCALC_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frobcalc {

/// Malformed textual input. `position()` is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("at position " + std::to_string(position) + ": " +
                           what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An arrow term that does not type, or an ill-sorted constructor.
class TypeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource cap (dimension, node count, prime index) was hit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace frobcalc

#endif  // FROBCALC_ERROR_HPP_
