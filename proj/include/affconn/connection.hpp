#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "affconn/lie.hpp"
#include "affconn/scalar.hpp"

namespace affconn {

/// Dense n x n x n array, index order as written: t(a, b, c).
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t n) : n_(n), data_(n * n * n) {}

  std::size_t dim() const { return n_; }
  GaussRat& operator()(std::size_t a, std::size_t b, std::size_t c) {
    return data_[(a * n_ + b) * n_ + c];
  }
  const GaussRat& operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return data_[(a * n_ + b) * n_ + c];
  }
  bool is_zero() const { return affconn::is_zero(data_); }
  std::span<const GaussRat> flat() const { return data_; }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<GaussRat> data_;
};

/// Dense n^4 array, t(a, b, c, d).
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(std::size_t n) : n_(n), data_(n * n * n * n) {}

  std::size_t dim() const { return n_; }
  GaussRat& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return data_[((a * n_ + b) * n_ + c) * n_ + d];
  }
  const GaussRat& operator()(std::size_t a, std::size_t b, std::size_t c,
                             std::size_t d) const {
    return data_[((a * n_ + b) * n_ + c) * n_ + d];
  }
  bool is_zero() const { return affconn::is_zero(data_); }

  friend bool operator==(const Tensor4&, const Tensor4&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<GaussRat> data_;
};

/// T(i, j, k): e_k coefficient of T(e_i, e_j) = nabla_i e_j - nabla_j e_i - [e_i, e_j].
using TorsionTensor = Tensor3;

/// R(l, k, i, j): e_l coefficient of R(e_i, e_j) e_k, where
/// R(X, Y) = nabla_X nabla_Y - nabla_Y nabla_X - nabla_[X,Y].
/// Order is (output, argument of nabla, plane pair).
using CurvatureTensor = Tensor4;

/// Ric(j, k) = sum_i R(i, k, i, j), the trace of X -> R(X, e_j) e_k.
/// Not symmetric in general.
using RicciTensor = ExactMatrix;

/// Left-invariant-frame connection nabla_{e_i} e_j = sum_k gamma(i, j, k) e_k.
class InvariantConnection {
 public:
  /// Throws DimensionMismatch unless gamma has the algebra's dimension.
  InvariantConnection(LieAlgebra g, Tensor3 gamma);

  static InvariantConnection zero(const LieAlgebra& g) {
    return InvariantConnection(g, Tensor3(g.dim()));
  }

  const LieAlgebra& algebra() const { return g_; }
  const Tensor3& gamma() const { return gamma_; }
  std::size_t dim() const { return g_.dim(); }

  /// Coordinates of nabla_x y for coordinate vectors x, y.
  ExactVector covariant(std::span<const GaussRat> x, std::span<const GaussRat> y) const;

  friend bool operator==(const InvariantConnection& a, const InvariantConnection& b) {
    return a.g_.same_structure(b.g_) && a.gamma_ == b.gamma_;
  }

 private:
  LieAlgebra g_;
  Tensor3 gamma_;
};

TorsionTensor torsion(const InvariantConnection& conn);
CurvatureTensor curvature(const InvariantConnection& conn);
RicciTensor ricci(const CurvatureTensor& r);

/// nabla_x y = 1/2 [x, y].
InvariantConnection standard_connection(const LieAlgebra& g);

/// nabla'_X Y = nabla_X Y + phi(Y) X + phi(X) Y for a constant covector phi.
InvariantConnection projective_change(const InvariantConnection& conn,
                                      std::span<const GaussRat> phi);

/// Projective Weyl tensor, same index layout as CurvatureTensor:
///
///   W(X,Y)Z = R(X,Y)Z - P(Y,Z) X + P(X,Z) Y + (P(X,Y) - P(Y,X)) Z
///   P(j,k)  = (n Ric(j,k) + Ric(k,j)) / (n^2 - 1)
///
/// Throws NonzeroTorsion for connections with torsion and DimensionTooSmall
/// for n <= 2.
CurvatureTensor projective_weyl(const InvariantConnection& conn);

/// The tensor P used by projective_weyl.
ExactMatrix projective_schouten(const RicciTensor& ric);

bool is_flat(const InvariantConnection& conn);
bool is_torsion_free(const InvariantConnection& conn);
/// Same preconditions as projective_weyl.
bool is_projectively_flat(const InvariantConnection& conn);

}  // namespace affconn
