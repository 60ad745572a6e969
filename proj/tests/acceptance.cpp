// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "affconn/affine.hpp"
#include "affconn/connection.hpp"
#include "affconn/lie.hpp"
#include "affconn/obstructions.hpp"
#include "affconn/poly.hpp"
#include "affconn/report.hpp"
#include "affconn/search.hpp"
#include "support.hpp"

using namespace affconn;
using affconn::testing::Rng;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void run(int id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail << " [exception: " << e.what() << "]";
  }
  if (!out.pass) ++failures;
  std::printf("%s  %d. %s:%s\n", out.pass ? "PASS" : "FAIL", id, title, out.detail.str().c_str());
  std::fflush(stdout);
}

bool certificate_exact(const Certificate& c) {
  return is_flat(c.connection) && is_torsion_free(c.connection) && check_homomorphism(c.embedding).ok() &&
         is_etale(c.embedding) && verify_certificate(c).ok();
}

void classification(Outcome& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = classify_dim3(SearchConfig{});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const std::pair<const char*, Verdict> expected[] = {
      {"abelian3", Verdict::yes}, {"heis3", Verdict::yes}, {"sol3", Verdict::yes}, {"sl2", Verdict::no}};
  out.require(rows.size() == 4, "four rows");
  for (std::size_t i = 0; i < rows.size() && i < 4; ++i) {
    out.detail << " " << rows[i].algebra << "=" << to_string(rows[i].verdict);
    out.require(rows[i].algebra == expected[i].first && rows[i].verdict == expected[i].second,
                "verdict for " + rows[i].algebra);
    if (rows[i].verdict == Verdict::yes) {
      const auto& cert = rows[i].report.decision.certificate;
      out.require(cert.has_value() && certificate_exact(*cert), "certificate for " + rows[i].algebra);
    } else {
      out.require(rows[i].report.decision.obstruction.has_value(), "evidence for " + rows[i].algebra);
    }
  }
  out.detail << "; runtime " << secs << " s";
  out.require(secs < 60.0, "runtime under 60 s");
}

void embeddings(Outcome& out) {
  for (const auto& [name, kind] : {std::pair{"heis", CatalogEmbedding::heis}, std::pair{"sol", CatalogEmbedding::sol}}) {
    const AffMap m = catalog_embedding(kind);
    const bool hom = check_homomorphism(m).ok();
    const bool etale = hom && is_etale(m);
    out.require(hom && etale, std::string(name) + " homomorphism/etale");
    if (etale) {
      const InvariantConnection c = lsa_from_etale(m);
      out.require(curvature(c).is_zero() && torsion(c).is_zero(), std::string(name) + " induced connection");
    }
    out.detail << " " << name << ": homomorphism=" << hom << " etale=" << etale;
  }
}

void bi_invariant(Outcome& out) {
  int matches = 0;
  for (const auto& name : builtin_names()) {
    const LieAlgebra g = builtin(name);
    const InvariantConnection zero = InvariantConnection::zero(g);
    if (curvature(zero).is_zero() && torsion(zero).is_zero() == g.is_abelian()) ++matches;
  }
  out.detail << " " << matches << "/4 match";
  out.require(matches == 4, "4/4");
}

void semisimple(Outcome& out) {
  const LieAlgebra g = builtin("sl2");
  const ExactMatrix k = killing_form(g);
  const StructuralProfile p = structural_profile(g);
  const std::size_t h1 = h1_dim(adjoint_rep(g));
  const MultiPoly d = fundamental_det_poly(adjoint_rep(g));
  out.require(p.semisimple && p.killing_rank == 3, "Killing rank 3");
  out.require(k(0, 0) == GaussRat(8) && k(1, 2) == GaussRat(4), "K(h,h)=8, K(e,f)=4");
  out.require(h1 == 0, "H1(ad) = 0");
  out.require(d.is_zero(), "adjoint det poly = 0");
  out.detail << " killing rank " << p.killing_rank << ", K(h,h)=" << k(0, 0) << ", K(e,f)=" << k(1, 2)
             << ", h1(ad)=" << h1 << ", det poly=" << d.str();
}

void unimodular_volume(Outcome& out) {
  for (const auto& name : builtin_names()) {
    const LinearRep ad = adjoint_rep(builtin(name));
    bool trace_free = true;
    for (const ExactMatrix& m : ad.matrices()) trace_free = trace_free && m.trace().is_zero();
    out.require(trace_free && structural_profile(ad.algebra()).unimodular, name + " trace-free");
    out.require(fundamental_det_poly(ad).is_zero(), name + " det poly vanishes");
  }
  std::vector<ExactMatrix> diag;
  for (std::size_t i = 0; i < 3; ++i) {
    ExactMatrix m(3, 3);
    m(i, i) = 1;
    diag.push_back(m);
  }
  const MultiPoly contrast = fundamental_det_poly(LinearRep(builtin("abelian3"), diag));
  MultiPoly p123(3);
  p123.add_term({1, 1, 1}, 1);
  out.require(contrast == p123, "contrast = p1*p2*p3");
  out.detail << " catalog adjoint det polys = 0; contrast = " << contrast.str();
}

void projective(Outcome& out) {
  const InvariantConnection std_sl2 = standard_connection(builtin("sl2"));
  out.require(is_torsion_free(std_sl2) && projective_weyl(std_sl2).is_zero(), "standard sl2 W = 0");

  Rng rng(2401);
  std::vector<InvariantConnection> conns{std_sl2,
                                         testing::random_torsion_free(rng, builtin("sl2")),
                                         testing::random_torsion_free(rng, builtin("sol3")),
                                         testing::random_torsion_free(rng, builtin("heis3")),
                                         testing::random_torsion_free(rng, builtin("abelian3"))};
  int invariant = 0;
  for (const InvariantConnection& c : conns) {
    const CurvatureTensor w = projective_weyl(c);
    bool all = true;
    for (int t = 0; t < 50; ++t) {
      ExactVector phi(3);
      for (auto& z : phi) z = testing::random_gauss(rng, 5, 7);
      all = all && projective_weyl(projective_change(c, phi)) == w;
    }
    invariant += all;
  }
  out.require(invariant == 5, "invariance on 5 connections");

  std::vector<InvariantConnection> flat{InvariantConnection::zero(builtin("abelian3"))};
  for (const auto kind : {CatalogEmbedding::heis, CatalogEmbedding::sol}) flat.push_back(lsa_from_etale(catalog_embedding(kind)));
  bool flat_ok = true;
  for (const auto& c : flat) flat_ok = flat_ok && projective_weyl(c).is_zero();
  out.require(flat_ok, "flat connections have W = 0");
  out.detail << " standard sl2 W = 0; invariant under 50 changes on " << invariant << "/5; flat W = 0 on "
             << flat.size() << " connections";
}

void search_soundness(Outcome& out) {
  SearchConfig cfg;
  cfg.seed = 1;
  cfg.starts = 200;
  for (const char* name : {"heis3", "sol3"}) {
    const SearchOutcome s = search_flat_connection(builtin(name), cfg);
    const bool ok = s.certificate && is_flat(*s.certificate) && is_torsion_free(*s.certificate) &&
                    etale_from_lsa(*s.certificate).dim() == 3;
    out.require(ok, std::string(name) + " verified certificate");
    out.detail << " " << name << ": " << s.candidates.size() << " candidates, verified at start "
               << (s.verified_start ? std::to_string(*s.verified_start) : "-") << ";";
  }
  const SearchOutcome sl2 = search_flat_connection(builtin("sl2"), cfg);
  out.require(!sl2.certificate, "sl2 has no certificate");
  out.detail << " sl2: " << sl2.candidates.size() << " candidates, 0 verified;";

  const BracketEntry b[] = {{0, 1, {0, 1, 1}}, {0, 2, {0, 0, -1}}};
  const LieAlgebra g = LieAlgebra::from_structure_constants(3, {}, b);
  SearchConfig threaded = cfg;
  threaded.threads = 4;
  const std::string a1 = report_to_json(analyze("noncatalog", g, cfg)).dump();
  const std::string a2 = report_to_json(analyze("noncatalog", g, threaded)).dump();
  const std::string s1 = search_to_json("heis3", search_flat_connection(builtin("heis3"), cfg)).dump();
  const std::string s2 = search_to_json("heis3", search_flat_connection(builtin("heis3"), cfg)).dump();
  out.require(a1 == a2 && s1 == s2, "byte-identical reports");
  out.detail << " repeated runs byte-identical";
}

void substrate(Outcome& out) {
  Rng rng(8080);
  int cases = 0, bad = 0;
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int t = 0; t < 400; ++t, ++cases) {
    const ExactMatrix m = testing::random_gauss_matrix(rng, dim(rng), dim(rng));
    const RrefResult r = rref(m);
    bool ok = rref(r.reduced).reduced == r.reduced && r.rank() + nullspace(m).size() == m.cols();
    for (const auto& v : nullspace(m)) ok = ok && is_zero(m.apply(v));
    bad += !ok;
  }
  for (int t = 0; t < 400; ++t, ++cases) {
    const std::size_t n = dim(rng);
    ExactMatrix m = testing::random_gauss_matrix(rng, n, n);
    if (t % 5 == 0) m(0, 0) = 0;
    bad += det(m) != det_cofactor(m);
  }
  for (int t = 0; t < 200; ++t, ++cases) {
    const std::size_t n = 1 + static_cast<std::size_t>(t) % 4, vars = 3;
    PolyMatrix pm(n, std::vector<MultiPoly>(n, MultiPoly(vars)));
    for (auto& row : pm) {
      for (auto& p : row) {
        p = MultiPoly::constant(vars, testing::random_gauss(rng));
        for (std::size_t v = 0; v < vars; ++v) p += MultiPoly::variable(vars, v) * testing::random_gauss(rng);
      }
    }
    ExactVector point(vars);
    for (auto& z : point) z = testing::random_gauss(rng);
    ExactMatrix ev(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) ev(r, c) = pm[r][c].evaluate(point);
    bad += poly_det(pm).evaluate(point) != det(ev);
  }
  out.detail << " " << cases - bad << "/" << cases << " cases exact";
  out.require(cases == 1000 && bad == 0, "all cases");
}

}  // namespace

int main() {
  run(1, "dimension-3 classification", classification);
  run(2, "explicit embeddings of heis3 and sol3", embeddings);
  run(3, "zero connection: flat, torsion-free iff abelian", bi_invariant);
  run(4, "semisimple obstruction on sl2", semisimple);
  run(5, "unimodular volume lemma", unimodular_volume);
  run(6, "projective flatness and Weyl invariance", projective);
  run(7, "search soundness and determinism", search_soundness);
  run(8, "randomized exact linear algebra", substrate);
  std::printf("%d/8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
