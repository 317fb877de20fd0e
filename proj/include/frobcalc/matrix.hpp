#ifndef FROBCALC_MATRIX_HPP_
#define FROBCALC_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "frobcalc/diagram.hpp"
#include "frobcalc/ordinal.hpp"
#include "frobcalc/terms.hpp"
#include "frobcalc/theories.hpp"

namespace frobcalc {

/// Dense row-major matrix of exact integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// a * b. Throws std::invalid_argument on a shape mismatch.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
/// Kronecker product; the left factor is the more significant digit.
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);
IntMatrix scale(const IntMatrix& a, const BigInt& k);

/// "ROWS x COLS" followed by one line per row. No trailing newline.
std::string to_string(const IntMatrix& m);

struct MatrixLimits {
  /// Bound on p^n for every object n met during evaluation.
  std::uint64_t dimension_cap = 1'000'000;
  /// Bound on rows * cols of every intermediate matrix.
  std::uint64_t entry_cap = 4'000'000;
};

/// Matrix of a term in the p-dimensional Frobenius algebra with the
/// componentwise product. Throws TypeError, std::invalid_argument for
/// p < 2, and ResourceError when a limit is exceeded.
IntMatrix matrix_of_term(const FrobTerm& t, unsigned p,
                         const MatrixLimits& limits = {});

/// Brauerian matrix of a sep-matrix canonical diagram: entry 1 when the
/// wire assignment is constant on every even class, the whole matrix scaled
/// by p^k for k loops. Throws std::invalid_argument for non-canonical input.
IntMatrix matrix_of_diagram(const Diagram& d, unsigned p,
                            const MatrixLimits& limits = {});

struct CollisionPair {
  FrobTerm first;
  FrobTerm second;
};

struct CollisionReport {
  /// Different normal forms in the theory, same matrix.
  std::vector<CollisionPair> equal_matrix;
  std::size_t equal_matrix_count = 0;
  /// Same normal form, different matrices.
  std::vector<CollisionPair> equal_diagram;
  std::size_t equal_diagram_count = 0;
  std::size_t terms = 0;
  std::size_t classes = 0;
  bool complete = true;
};

struct CollisionOptions {
  unsigned max_object = 2;
  std::size_t max_terms = 400'000;
  /// Collisions stored in the report; all are counted.
  std::size_t max_reported = 20;
};

/// Enumerates terms with at most `size_bound` generators, groups them by
/// normal form and compares matrices at dimension p.
CollisionReport collision_search(Theory th, unsigned p, unsigned size_bound,
                                 const CollisionOptions& options = {});

}  // namespace frobcalc

#endif  // FROBCALC_MATRIX_HPP_
