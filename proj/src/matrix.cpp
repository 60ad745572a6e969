#include "affconn/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "affconn/detail/laplace.hpp"
#include "affconn/errors.hpp"

namespace affconn {

namespace {

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(op) + ": shape mismatch " +
                            std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
}

void require_square(const ExactMatrix& m, const char* op) {
  if (!m.is_square()) {
    throw DimensionMismatch(std::string(op) + ": matrix is " +
                            std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", expected square");
  }
}

}  // namespace

ExactMatrix::ExactMatrix(
    std::initializer_list<std::initializer_list<GaussRat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_columns(std::span<const ExactVector> columns) {
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  ExactMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) {
      throw DimensionMismatch("from_columns: columns of unequal length");
    }
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

ExactVector ExactMatrix::column(std::size_t c) const {
  ExactVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

ExactVector ExactMatrix::row(std::size_t r) const {
  return ExactVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const GaussRat& z) { return z.is_zero(); });
}

GaussRat ExactMatrix::trace() const {
  require_square(*this, "trace");
  GaussRat t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

ExactVector ExactMatrix::apply(std::span<const GaussRat> v) const {
  if (v.size() != cols_) throw DimensionMismatch("apply: vector length mismatch");
  ExactVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    GaussRat acc;
    for (std::size_t c = 0; c < cols_; ++c) {
      const GaussRat& a = (*this)(r, c);
      if (!a.is_zero() && !v[c].is_zero()) acc += a * v[c];
    }
    out[r] = std::move(acc);
  }
  return out;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  require_same_shape(*this, o, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  require_same_shape(*this, o, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const GaussRat& s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matrix product: inner dimensions differ");
  }
  ExactMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const GaussRat& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
      }
    }
  }
  return out;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) {
  return a * b - b * a;
}

RrefResult rref(const ExactMatrix& m) {
  RrefResult res{m, {}};
  ExactMatrix& a = res.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < a.rows() && a(found, col).is_zero()) ++found;
    if (found == a.rows()) continue;
    if (found != pivot_row) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        std::swap(a(found, c), a(pivot_row, c));
      }
    }
    const GaussRat inv = GaussRat(1) / a(pivot_row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(pivot_row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a(r, col).is_zero()) continue;
      const GaussRat factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(pivot_row, c).is_zero()) a(r, c) -= factor * a(pivot_row, c);
      }
    }
    res.pivot_columns.push_back(col);
    ++pivot_row;
  }
  return res;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank(); }

std::vector<ExactVector> nullspace(const ExactMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivot_columns) is_pivot[p] = true;

  std::vector<ExactVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ExactVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivot_columns.size(); ++i) {
      v[r.pivot_columns[i]] = -r.reduced(i, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<ExactVector> solve(const ExactMatrix& m,
                                 std::span<const GaussRat> b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: rhs length mismatch");
  ExactMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const RrefResult res = rref(aug);
  if (!res.pivot_columns.empty() && res.pivot_columns.back() == m.cols()) {
    return std::nullopt;
  }
  ExactVector x(m.cols());
  for (std::size_t i = 0; i < res.pivot_columns.size(); ++i) {
    x[res.pivot_columns[i]] = res.reduced(i, m.cols());
  }
  return x;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RrefResult res = rref(aug);
  if (res.rank() < n || res.pivot_columns[n - 1] != n - 1) return std::nullopt;
  ExactMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = res.reduced(r, n + c);
  }
  return inv;
}

GaussRat det(const ExactMatrix& m) {
  require_square(m, "det");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  ExactMatrix a = m;
  GaussRat prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

GaussRat det_cofactor(const ExactMatrix& m) {
  require_square(m, "det_cofactor");
  return detail::laplace_det<GaussRat>(
      m.rows(), [&](std::size_t r, std::size_t c) -> const GaussRat& {
        return m(r, c);
      },
      GaussRat(0), GaussRat(1));
}

bool is_zero(std::span<const GaussRat> v) {
  return std::all_of(v.begin(), v.end(),
                     [](const GaussRat& z) { return z.is_zero(); });
}

}  // namespace affconn
