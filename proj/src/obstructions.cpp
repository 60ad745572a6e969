#include "affconn/obstructions.hpp"

#include <stdexcept>
#include <utility>

#include "affconn/errors.hpp"

namespace affconn {

LinearRep::LinearRep(LieAlgebra g, std::vector<ExactMatrix> rho)
    : g_(std::move(g)), rho_(std::move(rho)) {
  const std::size_t n = g_.dim();
  if (rho_.size() != n) {
    throw InvalidRep("representation needs " + std::to_string(n) +
                     " matrices, got " + std::to_string(rho_.size()));
  }
  v_dim_ = n == 0 ? 0 : rho_[0].rows();
  for (const ExactMatrix& m : rho_) {
    if (m.rows() != v_dim_ || m.cols() != v_dim_) {
      throw InvalidRep("representation matrices must all be " +
                       std::to_string(v_dim_) + "x" + std::to_string(v_dim_));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ExactMatrix rhs(v_dim_, v_dim_);
      for (std::size_t k = 0; k < n; ++k) {
        if (!g_.c(i, j, k).is_zero()) rhs += g_.c(i, j, k) * rho_[k];
      }
      if (commutator(rho_[i], rho_[j]) != rhs) {
        throw InvalidRep("bracket not preserved at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
    }
  }
}

LinearRep adjoint_rep(const LieAlgebra& g) {
  std::vector<ExactMatrix> rho;
  for (std::size_t i = 0; i < g.dim(); ++i) rho.push_back(ad_matrix(g, i));
  return LinearRep(g, std::move(rho));
}

LinearRep trivial_rep(const LieAlgebra& g, std::size_t space_dim) {
  return LinearRep(g, std::vector<ExactMatrix>(g.dim(), ExactMatrix(space_dim, space_dim)));
}

CohomologyDims first_cohomology(const LinearRep& rep) {
  const LieAlgebra& g = rep.algebra();
  const std::size_t n = g.dim();
  const std::size_t d = rep.space_dim();
  CohomologyDims out;

  // Unknown f(e_i)_a sits at column i*d + a. One block of d rows per pair
  // i < j encodes f([e_i,e_j]) - rho_i f(e_j) + rho_j f(e_i) = 0.
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  ExactMatrix cocycle(pairs * d, n * d);
  std::size_t block = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++block) {
      for (std::size_t a = 0; a < d; ++a) {
        const std::size_t row = block * d + a;
        for (std::size_t k = 0; k < n; ++k) {
          cocycle(row, k * d + a) += g.c(i, j, k);
        }
        for (std::size_t b = 0; b < d; ++b) {
          cocycle(row, j * d + b) -= rep.rho(i)(a, b);
          cocycle(row, i * d + b) += rep.rho(j)(a, b);
        }
      }
    }
  }
  out.cocycles = n * d - rank(cocycle);

  // v -> (rho_1 v, ..., rho_n v)
  ExactMatrix boundary(n * d, d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) boundary(i * d + a, b) = rep.rho(i)(a, b);
    }
  }
  out.coboundaries = rank(boundary);
  return out;
}

std::size_t h1_dim(const LinearRep& rep) { return first_cohomology(rep).h1(); }

MultiPoly fundamental_det_poly(const LinearRep& rep) {
  const std::size_t n = rep.algebra().dim();
  if (rep.space_dim() != n) {
    throw DimensionMismatch("fundamental_det_poly needs dim V = dim g (" +
                            std::to_string(rep.space_dim()) + " vs " +
                            std::to_string(n) + ")");
  }
  // Entry (a, i) is the a-th coordinate of rho(e_i) p, linear in p.
  PolyMatrix m(n, std::vector<MultiPoly>(n, MultiPoly(n)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const GaussRat& x = rep.rho(i)(a, b);
        if (!x.is_zero()) m[a][i] += MultiPoly::variable(n, b) * x;
      }
    }
  }
  return poly_det(m);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "YES";
    case Verdict::no: return "NO";
    case Verdict::unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

CertificateCheck verify_certificate(const Certificate& cert) {
  CertificateCheck c;
  c.flat = is_flat(cert.connection);
  c.torsion_free = is_torsion_free(cert.connection);
  const HomomorphismVerdict hv = check_homomorphism(cert.embedding);
  c.homomorphism = hv.homomorphism;
  c.injective = hv.injective;
  if (c.homomorphism) {
    c.etale = is_etale(cert.embedding);
    if (c.etale) {
      c.consistent = lsa_from_etale(cert.embedding) == cert.connection &&
                     cert.embedding.algebra().same_structure(cert.connection.algebra());
    }
  }
  return c;
}

namespace {

DecisionReport accept_certificate(DecisionReport report, Certificate cert) {
  const CertificateCheck check = verify_certificate(cert);
  if (!check.ok()) {
    // A certificate that does not re-verify is discarded, never reported.
    report.verdict = Verdict::unknown;
    report.notes.push_back("candidate certificate failed exact re-verification");
    return report;
  }
  report.verdict = Verdict::yes;
  report.certificate = std::move(cert);
  report.notes.push_back(
      "certificate re-verified exactly: flat, torsion-free, homomorphism, injective, etale");
  return report;
}

}  // namespace

DecisionReport decide_existence(const LieAlgebra& g, const SearchConfig& budget) {
  DecisionReport report;

  if (g.is_abelian()) {
    report.branch = "abelian";
    report.notes.push_back(
        "abelian algebra: the zero connection is flat and its torsion -[x,y] vanishes");
    InvariantConnection zero = InvariantConnection::zero(g);
    AffMap emb = etale_from_lsa(zero);
    return accept_certificate(std::move(report), {std::move(zero), std::move(emb)});
  }

  for (auto [name, kind] : {std::pair{"heis3", CatalogEmbedding::heis},
                            std::pair{"sol3", CatalogEmbedding::sol}}) {
    if (!g.same_structure(builtin(name))) continue;
    report.branch = "catalog";
    report.notes.push_back(std::string("structure constants equal the catalog algebra ") +
                           name + "; using its explicit etale embedding into aff(3)");
    AffMap emb = catalog_embedding(kind);
    InvariantConnection conn = lsa_from_etale(emb);
    return accept_certificate(std::move(report), {std::move(conn), std::move(emb)});
  }

  const StructuralProfile profile = structural_profile(g);
  if (profile.semisimple) {
    report.branch = "semisimple";
    report.verdict = Verdict::no;
    const LinearRep ad = adjoint_rep(g);
    report.obstruction = SemisimpleEvidence{killing_form(g), profile.killing_rank,
                                            h1_dim(ad), fundamental_det_poly(ad)};
    report.notes.push_back(
        "NO by theorem: a semisimple algebra has no etale affine representation "
        "(Whitehead lemma moves any embedding into gl(n) up to conjugation, and a "
        "unimodular linear action has no open orbit)");
    report.notes.push_back("computed evidence: Killing form nondegenerate (rank " +
                           std::to_string(profile.killing_rank) + "), dim H^1(g, ad) = " +
                           std::to_string(report.obstruction->h1_adjoint) +
                           ", adjoint determinant polynomial = " +
                           report.obstruction->adjoint_det_poly.str());
    report.notes.push_back(
        "the conjugation step into gl(n) is cited, not recomputed");
    return report;
  }

  report.branch = "search";
  SearchOutcome found = search_flat_connection(g, budget);
  report.search = SearchSummary{found.starts, found.candidates.size(), found.verified_start};
  if (!found.certificate) {
    report.verdict = Verdict::unknown;
    report.notes.push_back("search budget exhausted: " + std::to_string(found.starts) +
                           " starts, " + std::to_string(found.candidates.size()) +
                           " numeric candidates, none verified exactly");
    return report;
  }
  report.notes.push_back("exact certificate from search start " +
                         std::to_string(*found.verified_start));
  AffMap emb = etale_from_lsa(*found.certificate);
  return accept_certificate(std::move(report), {std::move(*found.certificate), std::move(emb)});
}

}  // namespace affconn
