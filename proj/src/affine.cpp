#include "affconn/affine.hpp"

#include <string>

#include "affconn/errors.hpp"

namespace affconn {

AffElement aff_bracket(const AffElement& x, const AffElement& y) {
  const std::size_t n = x.ambient_dim();
  if (y.ambient_dim() != n || x.linear.rows() != n || x.linear.cols() != n ||
      y.linear.rows() != n || y.linear.cols() != n) {
    throw DimensionMismatch("aff_bracket: elements of different aff(n)");
  }
  AffElement out{commutator(x.linear, y.linear), x.linear.apply(y.translation)};
  const ExactVector yx = y.linear.apply(x.translation);
  for (std::size_t k = 0; k < n; ++k) out.translation[k] -= yx[k];
  return out;
}

AffMap::AffMap(LieAlgebra g, std::vector<AffElement> images)
    : g_(std::move(g)), images_(std::move(images)) {
  const std::size_t n = g_.dim();
  if (images_.size() != n) {
    throw DimensionMismatch("AffMap needs " + std::to_string(n) + " images, got " +
                            std::to_string(images_.size()));
  }
  for (const AffElement& e : images_) {
    if (e.ambient_dim() != n || e.linear.rows() != n || e.linear.cols() != n) {
      throw DimensionMismatch("AffMap image is not in aff(" + std::to_string(n) + ")");
    }
  }
}

ExactMatrix AffMap::translation_matrix() const {
  std::vector<ExactVector> cols;
  cols.reserve(images_.size());
  for (const AffElement& e : images_) cols.push_back(e.translation);
  return ExactMatrix::from_columns(cols);
}

HomomorphismVerdict check_homomorphism(const AffMap& m) {
  const std::size_t n = m.dim();
  const LieAlgebra& g = m.algebra();
  const auto& img = m.images();
  HomomorphismVerdict v;
  v.homomorphism = true;
  for (std::size_t i = 0; i < n && v.homomorphism; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const AffElement lhs = aff_bracket(img[i], img[j]);
      AffElement rhs{ExactMatrix(n, n), ExactVector(n)};
      for (std::size_t k = 0; k < n; ++k) {
        const GaussRat& ck = g.c(i, j, k);
        if (ck.is_zero()) continue;
        rhs.linear += ck * img[k].linear;
        for (std::size_t a = 0; a < n; ++a) rhs.translation[a] += ck * img[k].translation[a];
      }
      if (!(lhs == rhs)) {
        v.homomorphism = false;
        v.counterexample = std::make_pair(i, j);
        break;
      }
    }
  }

  ExactMatrix flat(n, n * n + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) flat(i, r * n + c) = img[i].linear(r, c);
      flat(i, n * n + r) = img[i].translation[r];
    }
  }
  v.injective = rank(flat) == n;
  return v;
}

bool is_etale(const AffMap& m) {
  const HomomorphismVerdict v = check_homomorphism(m);
  if (!v.homomorphism) {
    throw NotHomomorphism("affine map does not preserve the bracket at (" +
                          std::to_string(v.counterexample->first) + "," +
                          std::to_string(v.counterexample->second) + ")");
  }
  return rank(m.translation_matrix()) == m.dim();
}

AffMap catalog_embedding(CatalogEmbedding kind) {
  ExactMatrix a(3, 3);
  LieAlgebra g = builtin(kind == CatalogEmbedding::heis ? "heis3" : "sol3");
  if (kind == CatalogEmbedding::heis) {
    a(2, 1) = 1;  // A f2 = f3
  } else {
    a(1, 1) = 1;   // A f2 = f2
    a(2, 2) = -1;  // A f3 = -f3
  }
  auto basis_vector = [](std::size_t i) {
    ExactVector f(3);
    f[i] = 1;
    return f;
  };
  std::vector<AffElement> images{
      {a, basis_vector(0)},
      {ExactMatrix(3, 3), basis_vector(1)},
      {ExactMatrix(3, 3), basis_vector(2)},
  };
  return AffMap(std::move(g), std::move(images));
}

InvariantConnection lsa_from_etale(const AffMap& m) {
  if (!is_etale(m)) throw NotEtale();
  const std::size_t n = m.dim();
  const std::optional<ExactMatrix> vinv = inverse(m.translation_matrix());
  Tensor3 gam(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ExactVector coords =
          vinv->apply(m.images()[i].linear.apply(m.images()[j].translation));
      for (std::size_t k = 0; k < n; ++k) gam(i, j, k) = coords[k];
    }
  }
  return InvariantConnection(m.algebra(), std::move(gam));
}

AffMap etale_from_lsa(const InvariantConnection& conn) {
  if (!is_torsion_free(conn) || !is_flat(conn)) throw NotFlatTorsionFree();
  const std::size_t n = conn.dim();
  std::vector<AffElement> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    AffElement e{ExactMatrix(n, n), ExactVector(n)};
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) e.linear(k, j) = conn.gamma()(i, j, k);
    }
    e.translation[i] = 1;
    images.push_back(std::move(e));
  }
  return AffMap(conn.algebra(), std::move(images));
}

}  // namespace affconn
