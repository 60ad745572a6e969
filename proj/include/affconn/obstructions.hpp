#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "affconn/affine.hpp"
#include "affconn/connection.hpp"
#include "affconn/lie.hpp"
#include "affconn/matrix.hpp"
#include "affconn/poly.hpp"
#include "affconn/search.hpp"

namespace affconn {

/// Representation rho : g -> gl(V), given on the basis of g.
class LinearRep {
 public:
  /// Throws InvalidRep unless every rho(e_i) is V x V with V = rho[0]'s size
  /// and [rho_i, rho_j] = sum_k c(i, j, k) rho_k holds exactly.
  LinearRep(LieAlgebra g, std::vector<ExactMatrix> rho);

  const LieAlgebra& algebra() const { return g_; }
  std::size_t space_dim() const { return v_dim_; }
  const ExactMatrix& rho(std::size_t i) const { return rho_.at(i); }
  const std::vector<ExactMatrix>& matrices() const { return rho_; }

 private:
  LieAlgebra g_;
  std::size_t v_dim_;
  std::vector<ExactMatrix> rho_;
};

LinearRep adjoint_rep(const LieAlgebra& g);
LinearRep trivial_rep(const LieAlgebra& g, std::size_t space_dim);

struct CohomologyDims {
  std::size_t cocycles = 0;     // dim Z^1
  std::size_t coboundaries = 0; // dim B^1
  std::size_t h1() const { return cocycles - coboundaries; }
};

/// Chevalley-Eilenberg Z^1 and B^1, both by exact rank computations.
CohomologyDims first_cohomology(const LinearRep& rep);

/// dim H^1(g, V).
std::size_t h1_dim(const LinearRep& rep);

/// det [rho(e_1) p | ... | rho(e_n) p] as a polynomial in p_1..p_n.
/// Requires dim V = dim g (DimensionMismatch otherwise).
MultiPoly fundamental_det_poly(const LinearRep& rep);

/// The infinitesimal action has an open orbit iff the polynomial is nonzero.
inline bool has_open_orbit(const MultiPoly& det_poly) { return !det_poly.is_zero(); }

enum class Verdict { yes, no, unknown };

const char* to_string(Verdict v);

/// A flat torsion-free connection together with its etale affine map.
struct Certificate {
  InvariantConnection connection;
  AffMap embedding;
};

struct CertificateCheck {
  bool flat = false;
  bool torsion_free = false;
  bool homomorphism = false;
  bool injective = false;
  bool etale = false;
  /// lsa_from_etale(embedding) reproduces the connection.
  bool consistent = false;

  bool ok() const {
    return flat && torsion_free && homomorphism && injective && etale && consistent;
  }
};

/// Exact re-verification of every certificate property.
CertificateCheck verify_certificate(const Certificate& cert);

/// Computed data backing a NO verdict for a semisimple algebra.
struct SemisimpleEvidence {
  ExactMatrix killing;
  std::size_t killing_rank = 0;
  std::size_t h1_adjoint = 0;
  MultiPoly adjoint_det_poly;
};

struct SearchSummary {
  std::size_t starts = 0;
  std::size_t candidates = 0;
  std::optional<std::size_t> verified_start;
};

struct DecisionReport {
  Verdict verdict = Verdict::unknown;
  /// "abelian", "catalog", "semisimple" or "search".
  std::string branch;
  std::optional<Certificate> certificate;
  std::optional<SemisimpleEvidence> obstruction;
  std::optional<SearchSummary> search;
  std::vector<std::string> notes;
};

/// Decides whether g carries a flat torsion-free invariant connection.
/// YES always comes with a certificate that passed verify_certificate;
/// NO only for semisimple g, with the evidence bundle attached.
DecisionReport decide_existence(const LieAlgebra& g, const SearchConfig& budget);

}  // namespace affconn
