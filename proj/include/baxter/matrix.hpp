#pragma once

#include <cstddef>
#include <exception>
#include <string>
#include <vector>

#include "baxter/error.hpp"
#include "baxter/semiring.hpp"

namespace baxter {

/// Square upper-triangular matrix over S. Entries below the diagonal are zero
/// by construction; only the upper triangle is stored row by row.
template <IdempotentSemiring S>
class UTMatrix {
 public:
  UTMatrix() = default;
  explicit UTMatrix(std::size_t dim) : dim_(dim), data_(dim * (dim + 1) / 2, S::zero()) {}

  static UTMatrix identity(std::size_t dim) {
    UTMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      m.set(i, i, S::one());
    }
    return m;
  }

  /// Throws PreconditionError if the rows are ragged or a lower entry is nonzero.
  static UTMatrix from_rows(std::vector<std::vector<S>> const& rows) {
    UTMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) {
        throw PreconditionError("matrix rows must all have length " +
                                std::to_string(rows.size()));
      }
      for (std::size_t j = 0; j < rows.size(); ++j) {
        m.set(i, j, rows[i][j]);
      }
    }
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }

  S operator()(std::size_t i, std::size_t j) const {
    return i > j ? S::zero() : data_[offset(i, j)];
  }

  void set(std::size_t i, std::size_t j, S value) {
    if (i >= dim_ || j >= dim_) {
      throw RangeError("matrix index out of range");
    }
    if (i > j) {
      if (value != S::zero()) {
        throw PreconditionError("nonzero entry below the diagonal at (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
      }
      return;
    }
    data_[offset(i, j)] = value;
  }

  friend bool operator==(UTMatrix const&, UTMatrix const&) = default;

 private:
  std::size_t offset(std::size_t i, std::size_t j) const {
    // rows 0..i-1 hold dim, dim-1, ..., dim-i+1 entries
    return i * dim_ - i * (i - 1) / 2 + (j - i);
  }

  std::size_t dim_ = 0;
  std::vector<S> data_;
};

namespace detail {

template <IdempotentSemiring S>
void check_same_dim(UTMatrix<S> const& a, UTMatrix<S> const& b) {
  if (a.dim() != b.dim()) {
    throw PreconditionError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
}

template <IdempotentSemiring S>
void mul_row(UTMatrix<S> const& a, UTMatrix<S> const& b, UTMatrix<S>& c, std::size_t i) {
  std::size_t n = a.dim();
  for (std::size_t j = i; j < n; ++j) {
    S acc = S::zero();
    for (std::size_t k = i; k <= j; ++k) {
      acc = acc + a(i, k) * b(k, j);
    }
    c.set(i, j, acc);
  }
}

}  // namespace detail

/// Reference product, one row after another.
template <IdempotentSemiring S>
UTMatrix<S> mat_mul_serial(UTMatrix<S> const& a, UTMatrix<S> const& b) {
  detail::check_same_dim(a, b);
  UTMatrix<S> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    detail::mul_row(a, b, c, i);
  }
  return c;
}

/// Rows are independent, so they are split across OpenMP threads. Exceptions
/// (overflow) are caught per thread and rethrown after the loop.
template <IdempotentSemiring S>
UTMatrix<S> mat_mul(UTMatrix<S> const& a, UTMatrix<S> const& b) {
  detail::check_same_dim(a, b);
  UTMatrix<S> c(a.dim());
  auto n = static_cast<long>(a.dim());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 4) if (n >= 64)
  for (long i = 0; i < n; ++i) {
    try {
      detail::mul_row(a, b, c, static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical
      if (!error) {
        error = std::current_exception();
      }
    }
  }
  if (error) {
    std::rethrow_exception(error);
  }
  return c;
}

template <IdempotentSemiring S>
UTMatrix<S> operator*(UTMatrix<S> const& a, UTMatrix<S> const& b) {
  return mat_mul(a, b);
}

/// (A^D)_{ij} = A_{n+1-j, n+1-i}.
template <IdempotentSemiring S>
UTMatrix<S> skew_transpose(UTMatrix<S> const& a) {
  std::size_t n = a.dim();
  UTMatrix<S> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      r.set(i, j, a(n - 1 - j, n - 1 - i));
    }
  }
  return r;
}

template <IdempotentSemiring S>
UTMatrix<S> block_diag(std::vector<UTMatrix<S>> const& blocks) {
  std::size_t total = 0;
  for (auto const& b : blocks) {
    total += b.dim();
  }
  UTMatrix<S> r(total);
  std::size_t at = 0;
  for (auto const& b : blocks) {
    for (std::size_t i = 0; i < b.dim(); ++i) {
      for (std::size_t j = i; j < b.dim(); ++j) {
        r.set(at + i, at + j, b(i, j));
      }
    }
    at += b.dim();
  }
  return r;
}

template <IdempotentSemiring S>
UTMatrix<S> scalar(S value) {
  UTMatrix<S> m(1);
  m.set(0, 0, value);
  return m;
}

template <IdempotentSemiring S>
UTMatrix<S> matrix_power(UTMatrix<S> const& a, unsigned k) {
  UTMatrix<S> r = UTMatrix<S>::identity(a.dim());
  for (unsigned i = 0; i < k; ++i) {
    r = mat_mul_serial(r, a);
  }
  return r;
}

/// The 2x2 generators. With s the distinguished element, 1 = one, 0 = zero:
/// P = [[s,0],[0,1]], Q = [[1,0],[0,s]], J = [[1,1],[0,0]], K = [[0,1],[0,1]].
template <IdempotentSemiring S>
struct Generators {
  static UTMatrix<S> E(std::size_t n) { return UTMatrix<S>::identity(n); }
  static UTMatrix<S> P() { return make(S::generator(), S::zero(), S::one()); }
  static UTMatrix<S> Q() { return make(S::one(), S::zero(), S::generator()); }
  static UTMatrix<S> J() { return make(S::one(), S::one(), S::zero()); }
  static UTMatrix<S> K() { return make(S::zero(), S::one(), S::one()); }
  static UTMatrix<S> s() { return scalar(S::generator()); }
  static UTMatrix<S> one() { return scalar(S::one()); }

 private:
  static UTMatrix<S> make(S a, S b, S d) {
    UTMatrix<S> m(2);
    m.set(0, 0, a);
    m.set(0, 1, b);
    m.set(1, 1, d);
    return m;
  }
};

}  // namespace baxter
