#include "affconn/connection.hpp"

#include <utility>

#include "affconn/errors.hpp"

namespace affconn {

InvariantConnection::InvariantConnection(LieAlgebra g, Tensor3 gamma)
    : g_(std::move(g)), gamma_(std::move(gamma)) {
  if (gamma_.dim() != g_.dim()) {
    throw DimensionMismatch("Christoffel array has dimension " +
                            std::to_string(gamma_.dim()) + ", algebra has " +
                            std::to_string(g_.dim()));
  }
}

ExactVector InvariantConnection::covariant(std::span<const GaussRat> x,
                                           std::span<const GaussRat> y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) {
    throw DimensionMismatch("covariant: coordinate vector length");
  }
  ExactVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const GaussRat w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!gamma_(i, j, k).is_zero()) out[k] += w * gamma_(i, j, k);
      }
    }
  }
  return out;
}

TorsionTensor torsion(const InvariantConnection& conn) {
  const std::size_t n = conn.dim();
  const Tensor3& gam = conn.gamma();
  const LieAlgebra& g = conn.algebra();
  TorsionTensor t(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        t(i, j, k) = gam(i, j, k) - gam(j, i, k) - g.c(i, j, k);
      }
    }
  }
  return t;
}

CurvatureTensor curvature(const InvariantConnection& conn) {
  const std::size_t n = conn.dim();
  const Tensor3& gam = conn.gamma();
  const LieAlgebra& g = conn.algebra();
  CurvatureTensor r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          GaussRat acc;
          for (std::size_t m = 0; m < n; ++m) {
            // nabla_i nabla_j e_k - nabla_j nabla_i e_k - nabla_[e_i,e_j] e_k
            if (!gam(j, k, m).is_zero() && !gam(i, m, l).is_zero()) {
              acc += gam(j, k, m) * gam(i, m, l);
            }
            if (!gam(i, k, m).is_zero() && !gam(j, m, l).is_zero()) {
              acc -= gam(i, k, m) * gam(j, m, l);
            }
            if (!g.c(i, j, m).is_zero() && !gam(m, k, l).is_zero()) {
              acc -= g.c(i, j, m) * gam(m, k, l);
            }
          }
          r(l, k, j, i) = -acc;
          r(l, k, i, j) = std::move(acc);
        }
      }
    }
  }
  return r;
}

RicciTensor ricci(const CurvatureTensor& r) {
  const std::size_t n = r.dim();
  RicciTensor ric(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      GaussRat acc;
      for (std::size_t i = 0; i < n; ++i) acc += r(i, k, i, j);
      ric(j, k) = std::move(acc);
    }
  }
  return ric;
}

InvariantConnection standard_connection(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const GaussRat half = GaussRat::ratio(1, 2);
  Tensor3 gam(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) gam(i, j, k) = half * g.c(i, j, k);
    }
  }
  return InvariantConnection(g, std::move(gam));
}

InvariantConnection projective_change(const InvariantConnection& conn,
                                      std::span<const GaussRat> phi) {
  const std::size_t n = conn.dim();
  if (phi.size() != n) throw DimensionMismatch("projective_change: covector length");
  Tensor3 gam = conn.gamma();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      gam(i, j, i) += phi[j];
      gam(i, j, j) += phi[i];
    }
  }
  return InvariantConnection(conn.algebra(), std::move(gam));
}

ExactMatrix projective_schouten(const RicciTensor& ric) {
  const std::size_t n = ric.rows();
  const GaussRat scale =
      GaussRat(1) / GaussRat(static_cast<long>(n * n) - 1);
  const GaussRat nn(static_cast<long>(n));
  ExactMatrix p(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      p(j, k) = (nn * ric(j, k) + ric(k, j)) * scale;
    }
  }
  return p;
}

CurvatureTensor projective_weyl(const InvariantConnection& conn) {
  const std::size_t n = conn.dim();
  if (n <= 2) throw DimensionTooSmall(n);
  if (!is_torsion_free(conn)) throw NonzeroTorsion();

  CurvatureTensor w = curvature(conn);
  const ExactMatrix p = projective_schouten(ricci(w));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const GaussRat skew = p(i, j) - p(j, i);
      for (std::size_t k = 0; k < n; ++k) {
        // W(e_i, e_j) e_k, X = e_i, Y = e_j, Z = e_k.
        w(i, k, i, j) -= p(j, k);
        w(j, k, i, j) += p(i, k);
        w(k, k, i, j) += skew;
      }
    }
  }
  return w;
}

bool is_flat(const InvariantConnection& conn) { return curvature(conn).is_zero(); }

bool is_torsion_free(const InvariantConnection& conn) {
  return torsion(conn).is_zero();
}

bool is_projectively_flat(const InvariantConnection& conn) {
  return projective_weyl(conn).is_zero();
}

}  // namespace affconn
