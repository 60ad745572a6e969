#pragma once

// Test-only generators and helpers. Nothing here calls into the code paths
// it is used to check beyond constructing inputs.

#include <cstdint>
#include <random>
#include <vector>

#include "affconn/connection.hpp"
#include "affconn/lie.hpp"
#include "affconn/matrix.hpp"

namespace affconn::testing {

using Rng = std::mt19937_64;

inline GaussRat random_int(Rng& rng, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return GaussRat(d(rng));
}

/// (a + b i) / d with small integers.
inline GaussRat random_gauss(Rng& rng, long range = 3, long max_den = 3) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, max_den);
  return GaussRat(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

inline ExactMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long range) {
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_int(rng, -range, range);
  }
  return m;
}

inline ExactMatrix random_gauss_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_gauss(rng);
  }
  return m;
}

/// Unit lower triangular times unit upper triangular: always invertible.
inline ExactMatrix random_invertible(Rng& rng, std::size_t n) {
  ExactMatrix lower = ExactMatrix::identity(n);
  ExactMatrix upper = ExactMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (r > c) lower(r, c) = random_int(rng, -2, 2);
      if (r < c) upper(r, c) = random_gauss(rng, 2, 2);
    }
  }
  return lower * upper;
}

/// The same algebra in the basis e'_i = sum_a p(a, i) e_a.
inline LieAlgebra change_basis(const LieAlgebra& g, const ExactMatrix& p) {
  const std::size_t n = g.dim();
  const ExactMatrix pinv = *inverse(p);
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const ExactVector old = g.bracket(p.column(i), p.column(j));
      entries.push_back({i, j, pinv.apply(old)});
    }
  }
  return LieAlgebra::from_structure_constants(n, {}, entries);
}

/// g + C^k with the extra directions central.
inline LieAlgebra with_abelian_summand(const LieAlgebra& g, std::size_t k) {
  const std::size_t n = g.dim();
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ExactVector v = g.bracket_basis(i, j);
      v.resize(n + k);
      entries.push_back({i, j, v});
    }
  }
  return LieAlgebra::from_structure_constants(n + k, {}, entries);
}

inline Tensor3 random_gamma(Rng& rng, std::size_t n) {
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) = random_gauss(rng, 2, 2);
    }
  }
  return t;
}

/// Random torsion-free connection: c/2 plus a random symmetric part.
inline InvariantConnection random_torsion_free(Rng& rng, const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Tensor3 t(n);
  const GaussRat half = GaussRat::ratio(1, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const GaussRat s = random_gauss(rng, 2, 2);
        t(i, j, k) = half * g.c(i, j, k) + s;
        t(j, i, k) = half * g.c(j, i, k) + s;
      }
    }
  }
  return InvariantConnection(g, std::move(t));
}

inline ExactVector unit(std::size_t n, std::size_t i) {
  ExactVector v(n);
  v[i] = 1;
  return v;
}

}  // namespace affconn::testing
