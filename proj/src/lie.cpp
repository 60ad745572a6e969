#include "affconn/lie.hpp"

#include <map>
#include <utility>

#include "affconn/errors.hpp"

namespace affconn {

namespace {

// Row-reduced basis of the span of `vectors` (all of length n).
std::vector<ExactVector> span_basis(const std::vector<ExactVector>& vectors,
                                    std::size_t n) {
  if (vectors.empty()) return {};
  ExactMatrix m(vectors.size(), n);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = vectors[r][c];
  }
  const RrefResult red = rref(m);
  std::vector<ExactVector> basis;
  for (std::size_t r = 0; r < red.rank(); ++r) basis.push_back(red.reduced.row(r));
  return basis;
}

std::vector<ExactVector> bracket_span(const LieAlgebra& g,
                                      const std::vector<ExactVector>& a,
                                      const std::vector<ExactVector>& b) {
  std::vector<ExactVector> products;
  for (const auto& x : a) {
    for (const auto& y : b) {
      ExactVector z = g.bracket(x, y);
      if (!is_zero(z)) products.push_back(std::move(z));
    }
  }
  return span_basis(products, g.dim());
}

std::vector<ExactVector> standard_basis(std::size_t n) {
  std::vector<ExactVector> basis(n, ExactVector(n));
  for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;
  return basis;
}

void check_jacobi(std::size_t n, const std::vector<GaussRat>& c) {
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const GaussRat& {
    return c[(i * n + j) * n + k];
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          GaussRat sum;
          for (std::size_t m = 0; m < n; ++m) {
            sum += at(i, j, m) * at(m, k, l);
            sum += at(j, k, m) * at(m, i, l);
            sum += at(k, i, m) * at(m, j, l);
          }
          if (!sum.is_zero()) throw JacobiViolation(i, j, k, l);
        }
      }
    }
  }
}

LieAlgebra make(std::size_t n, std::vector<std::string> names,
                const std::vector<BracketEntry>& entries) {
  return LieAlgebra::from_structure_constants(n, std::move(names), entries);
}

ExactVector vec(std::initializer_list<GaussRat> xs) { return ExactVector(xs); }

}  // namespace

LieAlgebra LieAlgebra::from_structure_constants(
    std::size_t n, std::vector<std::string> names,
    std::span<const BracketEntry> brackets) {
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  }
  if (names.size() != n) {
    throw DimensionMismatch("expected " + std::to_string(n) + " basis names, got " +
                            std::to_string(names.size()));
  }

  std::vector<GaussRat> c(n * n * n);
  // Which ordered pairs were given explicitly.
  std::map<std::pair<std::size_t, std::size_t>, const ExactVector*> given;
  for (const BracketEntry& b : brackets) {
    if (b.left >= n || b.right >= n) {
      throw IndexOutOfRange("bracket index (" + std::to_string(b.left) + "," +
                            std::to_string(b.right) + ") out of range for dim " +
                            std::to_string(n));
    }
    if (b.result.size() != n) {
      throw DimensionMismatch("bracket result must have " + std::to_string(n) +
                              " coefficients");
    }
    if (b.left == b.right) {
      if (!is_zero(b.result)) {
        throw InconsistentEntry(b.left, b.right, "[e_i, e_i] must vanish");
      }
      continue;
    }
    auto key = std::make_pair(b.left, b.right);
    if (auto it = given.find(key); it != given.end()) {
      if (*it->second != b.result) {
        throw InconsistentEntry(b.left, b.right, "pair given twice with different values");
      }
      continue;
    }
    auto rev = given.find(std::make_pair(b.right, b.left));
    if (rev != given.end()) {
      for (std::size_t k = 0; k < n; ++k) {
        if ((*rev->second)[k] != -b.result[k]) {
          throw InconsistentEntry(b.left, b.right, "not antisymmetric to its reverse");
        }
      }
    }
    given.emplace(key, &b.result);
    for (std::size_t k = 0; k < n; ++k) {
      c[(b.left * n + b.right) * n + k] = b.result[k];
      c[(b.right * n + b.left) * n + k] = -b.result[k];
    }
  }
  check_jacobi(n, c);
  return LieAlgebra(n, std::move(names), std::move(c));
}

ExactVector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw IndexOutOfRange("bracket_basis index");
  return ExactVector(c_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j) * n_),
                     c_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j + 1) * n_));
}

ExactVector LieAlgebra::bracket(std::span<const GaussRat> x,
                                std::span<const GaussRat> y) const {
  if (x.size() != n_ || y.size() != n_) {
    throw DimensionMismatch("bracket: coordinate vector length");
  }
  ExactVector out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      const GaussRat coeff = x[i] * y[j];
      for (std::size_t k = 0; k < n_; ++k) {
        if (!c(i, j, k).is_zero()) out[k] += coeff * c(i, j, k);
      }
    }
  }
  return out;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& z : c_) {
    if (!z.is_zero()) return false;
  }
  return true;
}

std::vector<std::string> builtin_names() {
  return {"abelian3", "heis3", "sol3", "sl2"};
}

LieAlgebra builtin(std::string_view name) {
  if (name == "abelian3") return make(3, {}, {});
  if (name == "heis3") {
    return make(3, {}, {{0, 1, vec({0, 0, 1})}});
  }
  if (name == "sol3") {
    return make(3, {}, {{0, 1, vec({0, 1, 0})}, {0, 2, vec({0, 0, -1})}});
  }
  if (name == "sl2") {
    // Chevalley basis (h, e, f).
    return make(3, {"h", "e", "f"},
                {{0, 1, vec({0, 2, 0})},
                 {0, 2, vec({0, 0, -2})},
                 {1, 2, vec({1, 0, 0})}});
  }
  throw UnknownAlgebra(std::string(name));
}

ExactMatrix ad_matrix(const LieAlgebra& g, std::size_t i) {
  const std::size_t n = g.dim();
  if (i >= n) throw IndexOutOfRange("ad_matrix: index " + std::to_string(i));
  ExactMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) m(k, j) = g.c(i, j, k);
  }
  return m;
}

ExactMatrix killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<ExactMatrix> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_matrix(g, i));
  ExactMatrix k(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      k(i, j) = (ads[i] * ads[j]).trace();
      k(j, i) = k(i, j);
    }
  }
  return k;
}

StructuralProfile structural_profile(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  StructuralProfile p;
  p.abelian = g.is_abelian();

  p.unimodular = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!ad_matrix(g, i).trace().is_zero()) {
      p.unimodular = false;
      break;
    }
  }

  const std::vector<ExactVector> whole = standard_basis(n);

  std::vector<ExactVector> current = whole;
  p.derived_series_dims.push_back(current.size());
  while (!current.empty()) {
    std::vector<ExactVector> next = bracket_span(g, current, current);
    if (next.size() == current.size()) break;
    current = std::move(next);
    p.derived_series_dims.push_back(current.size());
  }
  p.solvable = current.empty();

  current = whole;
  p.lower_central_dims.push_back(current.size());
  while (!current.empty()) {
    std::vector<ExactVector> next = bracket_span(g, whole, current);
    if (next.size() == current.size()) break;
    current = std::move(next);
    p.lower_central_dims.push_back(current.size());
  }
  p.nilpotent = current.empty();

  p.killing_rank = rank(killing_form(g));
  p.semisimple = n > 0 && p.killing_rank == n;
  return p;
}

}  // namespace affconn
