#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "affconn/matrix.hpp"
#include "affconn/scalar.hpp"

namespace affconn {

/// One bracket relation [e_left, e_right] = sum_k result[k] e_k.
struct BracketEntry {
  std::size_t left;
  std::size_t right;
  ExactVector result;
};

/// Complex Lie algebra given by structure constants in a fixed basis:
/// [e_i, e_j] = sum_k c(i, j, k) e_k. Immutable once constructed; the
/// constructor establishes antisymmetry and the Jacobi identity exactly.
class LieAlgebra {
 public:
  /// The zero-dimensional algebra.
  LieAlgebra() = default;

  /// Unlisted pairs are zero and (j, i) is completed from (i, j).
  /// Throws InconsistentEntry when a pair and its reverse disagree, or when
  /// [e_i, e_i] is given nonzero; JacobiViolation when Jacobi fails.
  static LieAlgebra from_structure_constants(std::size_t n,
                                             std::vector<std::string> names,
                                             std::span<const BracketEntry> brackets);

  std::size_t dim() const { return n_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  const GaussRat& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }

  /// Coordinates of [e_i, e_j].
  ExactVector bracket_basis(std::size_t i, std::size_t j) const;
  /// Bracket of arbitrary coordinate vectors.
  ExactVector bracket(std::span<const GaussRat> x, std::span<const GaussRat> y) const;

  bool is_abelian() const;

  /// Exact equality of dimension and structure constants; names ignored.
  bool same_structure(const LieAlgebra& o) const {
    return n_ == o.n_ && c_ == o.c_;
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.same_structure(b) && a.names_ == b.names_;
  }

 private:
  LieAlgebra(std::size_t n, std::vector<std::string> names,
             std::vector<GaussRat> c)
      : n_(n), names_(std::move(names)), c_(std::move(c)) {}

  std::size_t n_ = 0;
  std::vector<std::string> names_;
  std::vector<GaussRat> c_;
};

/// Catalog: "abelian3", "heis3", "sol3", "sl2". Throws UnknownAlgebra.
LieAlgebra builtin(std::string_view name);
std::vector<std::string> builtin_names();

/// Column j is the coordinate vector of [e_i, e_j].
ExactMatrix ad_matrix(const LieAlgebra& g, std::size_t i);

/// K(i, j) = trace(ad e_i ad e_j).
ExactMatrix killing_form(const LieAlgebra& g);

struct StructuralProfile {
  bool abelian = false;
  bool solvable = false;
  bool nilpotent = false;
  bool unimodular = false;
  bool semisimple = false;
  std::size_t killing_rank = 0;
  /// dim g, dim [g,g], dim [[g,g],[g,g]], ... until the dimension stabilizes.
  std::vector<std::size_t> derived_series_dims;
  /// dim g, dim [g,g], dim [g,[g,g]], ... until the dimension stabilizes.
  std::vector<std::size_t> lower_central_dims;

  friend bool operator==(const StructuralProfile&,
                         const StructuralProfile&) = default;
};

StructuralProfile structural_profile(const LieAlgebra& g);

}  // namespace affconn
