#include "frobcalc/matrix.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "frobcalc/error.hpp"
#include "frobcalc/prover.hpp"

namespace frobcalc {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = 1;
  }
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix shapes do not compose");
  }
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& x = a.at(i, k);
      if (x.is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const BigInt& y = b.at(k, j);
        if (!y.is_zero()) {
          out.at(i, j) += x * y;
        }
      }
    }
  }
  return out;
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const BigInt& x = a.at(i, j);
      if (x.is_zero()) {
        continue;
      }
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (!b.at(k, l).is_zero()) {
            out.at(i * b.rows() + k, j * b.cols() + l) = x * b.at(k, l);
          }
        }
      }
    }
  }
  return out;
}

IntMatrix scale(const IntMatrix& a, const BigInt& k) {
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      out.at(i, j) *= k;
    }
  }
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << m.rows() << " x " << m.cols();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '\n';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) {
        os << ' ';
      }
      os << m.at(i, j);
    }
  }
  return os.str();
}

namespace {

class Evaluator {
 public:
  Evaluator(unsigned p, const MatrixLimits& limits) : p_(p), limits_(limits) {}

  IntMatrix eval(const FrobTerm& t) {
    ArrowType ty = type_of(t);
    guard(ty);
    switch (t.kind()) {
      case TermKind::id:
        return IntMatrix::identity(power(t.index()));
      case TermKind::gen:
        return kron(IntMatrix::identity(power(t.index())), base(t.gen()));
      case TermKind::compose:
        return multiply(eval(t.outer()), eval(t.inner()));
      case TermKind::apply:
        return kron(eval(t.inner()), IntMatrix::identity(p_));
    }
    throw TypeError("corrupt term");
  }

  std::uint64_t power(unsigned n) const {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < n; ++i) {
      v *= p_;
    }
    return v;
  }

  void guard(ArrowType ty) const {
    unsigned big = std::max(ty.src, ty.tgt);
    std::uint64_t dim = 1;
    for (unsigned i = 0; i < big; ++i) {
      dim *= p_;
      if (dim > limits_.dimension_cap) {
        throw ResourceError("matrix dimension " + std::to_string(p_) + "^" +
                            std::to_string(big) + " exceeds cap " +
                            std::to_string(limits_.dimension_cap));
      }
    }
    // Both dimensions are at most dimension_cap, so this cannot overflow.
    std::uint64_t entries = power(ty.src) * power(ty.tgt);
    if (entries > limits_.entry_cap) {
      throw ResourceError("matrix with " + std::to_string(entries) +
                          " entries exceeds cap " +
                          std::to_string(limits_.entry_cap));
    }
  }

 private:
  IntMatrix base(FrobLang::Gen g) const {
    using G = FrobLang::Gen;
    switch (g) {
      case G::eps_box: {
        IntMatrix m(1, p_);
        for (unsigned i = 0; i < p_; ++i) {
          m.at(0, i) = 1;
        }
        return m;
      }
      case G::eps_dia: {
        IntMatrix m(p_, 1);
        for (unsigned i = 0; i < p_; ++i) {
          m.at(i, 0) = 1;
        }
        return m;
      }
      case G::delta_dia: {
        IntMatrix m(p_, p_ * p_);
        for (unsigned j = 0; j < p_; ++j) {
          m.at(j, j * p_ + j) = 1;
        }
        return m;
      }
      case G::delta_box: {
        IntMatrix m(p_ * p_, p_);
        for (unsigned j = 0; j < p_; ++j) {
          m.at(j * p_ + j, j) = 1;
        }
        return m;
      }
    }
    throw TypeError("corrupt generator");
  }

  unsigned p_;
  MatrixLimits limits_;
};

}  // namespace

IntMatrix matrix_of_term(const FrobTerm& t, unsigned p,
                         const MatrixLimits& limits) {
  if (p < 2) {
    throw std::invalid_argument("matrix dimension p must be at least 2");
  }
  return Evaluator(p, limits).eval(t);
}

IntMatrix matrix_of_diagram(const Diagram& d, unsigned p,
                            const MatrixLimits& limits) {
  if (p < 2) {
    throw std::invalid_argument("matrix dimension p must be at least 2");
  }
  if (normalize(d, Theory::sep_matrix) != d) {
    throw std::invalid_argument(
        "matrix_of_diagram needs a sep-matrix canonical diagram");
  }
  ArrowType ty = d.type();
  Evaluator sizing(p, limits);
  sizing.guard(ty);
  const std::uint64_t loops = *d.label(d.class_of(1)).finite_value();
  BigInt factor = 1;
  for (std::uint64_t i = 0; i < loops; ++i) {
    factor *= p;
  }

  // Each even class contributes one free digit, written into every wire
  // of the class.
  struct Wires {
    std::vector<std::uint64_t> row_weights;
    std::vector<std::uint64_t> col_weights;
  };
  std::vector<Wires> classes;
  std::map<std::size_t, std::size_t> index;
  auto wires_of = [&](std::size_t cls) -> Wires& {
    auto it = index.find(cls);
    if (it == index.end()) {
      it = index.emplace(cls, classes.size()).first;
      classes.emplace_back();
    }
    return classes[it->second];
  };
  for (unsigned w = 1; w <= ty.src; ++w) {
    wires_of(d.class_of(static_cast<int>(2 * w)))
        .col_weights.push_back(sizing.power(ty.src - w));
  }
  for (unsigned w = 1; w <= ty.tgt; ++w) {
    wires_of(d.class_of(-static_cast<int>(2 * w)))
        .row_weights.push_back(sizing.power(ty.tgt - w));
  }

  IntMatrix out(sizing.power(ty.tgt), sizing.power(ty.src));
  std::vector<unsigned> digit(classes.size(), 0);
  for (;;) {
    std::uint64_t row = 0;
    std::uint64_t col = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (auto w : classes[c].row_weights) {
        row += digit[c] * w;
      }
      for (auto w : classes[c].col_weights) {
        col += digit[c] * w;
      }
    }
    out.at(row, col) = factor;
    std::size_t c = 0;
    while (c < digit.size() && ++digit[c] == p) {
      digit[c++] = 0;
    }
    if (c == digit.size()) {
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct MatrixKey {
  std::size_t rows, cols;
  std::vector<BigInt> entries;
  auto operator<=>(const MatrixKey&) const = default;
};

MatrixKey key_of(const IntMatrix& m) {
  MatrixKey k{m.rows(), m.cols(), {}};
  k.entries.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      k.entries.push_back(m.at(i, j));
    }
  }
  return k;
}

}  // namespace

CollisionReport collision_search(Theory th, unsigned p, unsigned size_bound,
                                 const CollisionOptions& options) {
  CollisionReport report;
  if (size_bound == 0) {
    return report;
  }
  struct ClassInfo {
    FrobTerm term;
    IntMatrix matrix;
  };
  std::unordered_map<Diagram, ClassInfo, DiagramHash> classes;
  std::vector<const Diagram*> order;
  MatrixLimits limits;

  for_each_spine(size_bound, options.max_object, [&](const Spine& s) {
    if (report.terms >= options.max_terms) {
      report.complete = false;
      return false;
    }
    ++report.terms;
    FrobTerm t = term_of(s);
    Diagram d = normalize(eval_frob(t), th);
    IntMatrix m = matrix_of_term(t, p, limits);
    auto [it, fresh] = classes.try_emplace(d, ClassInfo{t, m});
    if (fresh) {
      order.push_back(&it->first);
    } else if (!(it->second.matrix == m)) {
      ++report.equal_diagram_count;
      if (report.equal_diagram.size() < options.max_reported) {
        report.equal_diagram.push_back({it->second.term, t});
      }
    }
    return true;
  });
  report.classes = classes.size();

  std::map<MatrixKey, const ClassInfo*> by_matrix;
  for (const Diagram* d : order) {
    const ClassInfo& info = classes.at(*d);
    auto [it, fresh] = by_matrix.try_emplace(key_of(info.matrix), &info);
    if (!fresh) {
      ++report.equal_matrix_count;
      if (report.equal_matrix.size() < options.max_reported) {
        report.equal_matrix.push_back({it->second->term, info.term});
      }
    }
  }
  return report;
}

}  // namespace frobcalc
