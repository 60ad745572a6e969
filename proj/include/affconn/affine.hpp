#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "affconn/connection.hpp"
#include "affconn/lie.hpp"
#include "affconn/matrix.hpp"

namespace affconn {

/// Element (A, v) of aff(n) = gl(n) + C^n, the infinitesimal map p -> A p + v.
struct AffElement {
  ExactMatrix linear;       // isotropy (gl) part
  ExactVector translation;  // C^n part

  std::size_t ambient_dim() const { return translation.size(); }
  friend bool operator==(const AffElement&, const AffElement&) = default;
};

/// [(A, v), (B, w)] = (AB - BA, A w - B v).
AffElement aff_bracket(const AffElement& x, const AffElement& y);

/// Linear map g -> aff(n), n = dim g, given on the basis of g.
class AffMap {
 public:
  /// Throws DimensionMismatch unless there is one image per basis vector of
  /// g, each of ambient dimension dim g.
  AffMap(LieAlgebra g, std::vector<AffElement> images);

  const LieAlgebra& algebra() const { return g_; }
  const std::vector<AffElement>& images() const { return images_; }
  std::size_t dim() const { return g_.dim(); }

  /// Matrix with columns v_1, ..., v_n.
  ExactMatrix translation_matrix() const;

  friend bool operator==(const AffMap& a, const AffMap& b) {
    return a.g_.same_structure(b.g_) && a.images_ == b.images_;
  }

 private:
  LieAlgebra g_;
  std::vector<AffElement> images_;
};

struct HomomorphismVerdict {
  bool homomorphism = false;
  /// First basis pair (i < j) whose bracket is not preserved.
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
  /// Rank of the n x (n^2 + n) flattened image matrix equals n.
  bool injective = false;

  bool ok() const { return homomorphism && injective; }
};

HomomorphismVerdict check_homomorphism(const AffMap& m);

/// True iff the translation parts form a basis of C^n. Throws NotHomomorphism
/// if m does not preserve brackets.
bool is_etale(const AffMap& m);

enum class CatalogEmbedding { heis, sol };

/// e_1 -> (A, f_1), e_2 -> (0, f_2), e_3 -> (0, f_3) with A f_1 = 0 and
///   heis: A f_2 = f_3, A f_3 = 0
///   sol:  A f_2 = f_2, A f_3 = -f_3
AffMap catalog_embedding(CatalogEmbedding kind);

/// Connection of the left-symmetric product induced by an etale map:
/// nabla_{e_i} e_j = V^{-1} A_i v_j. Throws NotEtale (or NotHomomorphism).
InvariantConnection lsa_from_etale(const AffMap& m);

/// Inverse construction e_i -> (L_i, f_i) with L_i the matrix of
/// y -> nabla_{e_i} y. Throws NotFlatTorsionFree.
AffMap etale_from_lsa(const InvariantConnection& conn);

}  // namespace affconn
