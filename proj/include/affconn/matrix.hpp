#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "affconn/scalar.hpp"

namespace affconn {

using ExactVector = std::vector<GaussRat>;

/// Dense row-major matrix over Q(i).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  ExactMatrix(std::initializer_list<std::initializer_list<GaussRat>> rows);

  static ExactMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of equal length).
  static ExactMatrix from_columns(std::span<const ExactVector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  GaussRat& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const GaussRat& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  ExactVector column(std::size_t c) const;
  ExactVector row(std::size_t r) const;

  bool is_zero() const;
  GaussRat trace() const;
  ExactMatrix transpose() const;

  ExactVector apply(std::span<const GaussRat> v) const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const GaussRat& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) {
    return a += b;
  }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) {
    return a -= b;
  }
  friend ExactMatrix operator*(ExactMatrix a, const GaussRat& s) {
    return a *= s;
  }
  friend ExactMatrix operator*(const GaussRat& s, ExactMatrix a) {
    return a *= s;
  }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussRat> data_;
};

/// [A, B] = AB - BA.
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

struct RrefResult {
  ExactMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

/// Reduced row echelon form by Gauss-Jordan elimination (exact).
RrefResult rref(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// Basis of {v : m v = 0}, one vector per free column, with a 1 in that
/// column. Empty when m has full column rank.
std::vector<ExactVector> nullspace(const ExactMatrix& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<ExactVector> solve(const ExactMatrix& m, std::span<const GaussRat> b);

std::optional<ExactMatrix> inverse(const ExactMatrix& m);

/// Determinant by fraction-free (Bareiss) elimination. Throws
/// DimensionMismatch for non-square input.
GaussRat det(const ExactMatrix& m);

/// Determinant by Laplace expansion; an independent route to det().
GaussRat det_cofactor(const ExactMatrix& m);

bool is_zero(std::span<const GaussRat> v);

}  // namespace affconn
