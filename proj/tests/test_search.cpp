#include "doctest.h"

#include <cmath>

#include "affconn/search.hpp"
#include "support.hpp"

using namespace affconn;
using affconn::testing::Rng;

namespace {

std::vector<GaussRat> heis_certificate_unknowns(const FlatnessSystem& sys) {
  std::vector<GaussRat> s(sys.unknown_count());
  s[sys.unknown_index(0, 1, 2)] = GaussRat::ratio(1, 2);
  return s;
}

ComplexVector to_complex(std::span<const GaussRat> s) {
  ComplexVector out;
  for (const GaussRat& z : s) out.push_back(z.to_complex());
  return out;
}

SearchConfig with_starts(std::size_t starts) {
  SearchConfig cfg;
  cfg.starts = starts;
  return cfg;
}

}  // namespace

TEST_SUITE("assemble") {
  TEST_CASE("counts for n = 3") {
    const FlatnessSystem sys = FlatnessSystem::assemble(builtin("sl2"));
    CHECK(sys.residual_count() == 27);
    CHECK(sys.unknown_count() == 18);
    CHECK(sys.unknown_index(0, 2, 1) == sys.unknown_index(2, 0, 1));
  }

  TEST_CASE("abelian3 at s = 0") {
    const FlatnessSystem sys = FlatnessSystem::assemble(builtin("abelian3"));
    const ComplexVector s(sys.unknown_count());
    for (const auto& r : sys.residual(s)) CHECK(std::abs(r) == 0.0);
  }

  TEST_CASE("heis3 at the known solution") {
    const FlatnessSystem sys = FlatnessSystem::assemble(builtin("heis3"));
    const std::vector<GaussRat> exact = heis_certificate_unknowns(sys);
    const InvariantConnection conn = sys.connection(exact);
    CHECK(conn.gamma()(0, 1, 2) == GaussRat(1));
    CHECK(conn.gamma()(1, 0, 2).is_zero());
    for (const auto& r : sys.residual(to_complex(exact))) CHECK(std::abs(r) == 0.0);
  }

  TEST_CASE("connections are torsion-free by construction") {
    Rng rng(111);
    const FlatnessSystem sys = FlatnessSystem::assemble(builtin("sol3"));
    std::vector<GaussRat> s(sys.unknown_count());
    for (auto& z : s) z = testing::random_gauss(rng);
    CHECK(is_torsion_free(sys.connection(s)));
  }

  TEST_CASE("residual agrees with exact curvature at 100 random points") {
    Rng rng(113);
    for (int t = 0; t < 100; ++t) {
      const LieAlgebra g = builtin(builtin_names()[static_cast<std::size_t>(t) % 4]);
      const FlatnessSystem sys = FlatnessSystem::assemble(g);
      std::vector<GaussRat> s(sys.unknown_count());
      for (auto& z : s) z = testing::random_gauss(rng, 5, 4);
      const CurvatureTensor r = curvature(sys.connection(s));
      const ComplexVector res = sys.residual(to_complex(s));
      for (std::size_t l = 0; l < 3; ++l)
        for (std::size_t k = 0; k < 3; ++k)
          for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) {
              const std::complex<double> expected = r(l, k, i, j).to_complex();
              const double err = std::abs(res[sys.residual_index(l, k, i, j)] - expected);
              CHECK(err <= 1e-12 * std::max(1.0, std::abs(expected)));
            }
    }
  }

  TEST_CASE("jacobian matches central differences") {
    Rng rng(115);
    const FlatnessSystem sys = FlatnessSystem::assemble(builtin("sl2"));
    ComplexVector s(sys.unknown_count());
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto& z : s) z = {u(rng), u(rng)};
    const Eigen::MatrixXcd jac = sys.jacobian(s);
    const double h = 1e-6;
    for (std::size_t v = 0; v < sys.unknown_count(); ++v) {
      ComplexVector plus = s, minus = s;
      plus[v] += h;
      minus[v] -= h;
      const ComplexVector rp = sys.residual(plus), rm = sys.residual(minus);
      for (std::size_t r = 0; r < sys.residual_count(); ++r) {
        const std::complex<double> fd = (rp[r] - rm[r]) / (2 * h);
        CHECK(std::abs(fd - jac(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(v))) < 1e-6);
      }
    }
  }
}

TEST_SUITE("newton_multistart") {
  TEST_CASE("abelian3: the zero start converges to 0") {
    const auto cands = newton_multistart(FlatnessSystem::assemble(builtin("abelian3")), with_starts(5));
    REQUIRE_FALSE(cands.empty());
    CHECK(cands[0].start == 0);
    for (const auto& z : cands[0].s) CHECK(std::abs(z) < 1e-12);
  }

  TEST_CASE("heis3 finds candidates") {
    const SearchConfig cfg;
    const auto cands = newton_multistart(FlatnessSystem::assemble(builtin("heis3")), cfg);
    CHECK(cands.size() >= 1);
    for (std::size_t i = 0; i < cands.size(); ++i) {
      CHECK(cands[i].residual_norm < cfg.residual_tol);
      if (i > 0) CHECK(cands[i - 1].start < cands[i].start);
    }
  }

  TEST_CASE("sl2 has no candidates") {
    CHECK(newton_multistart(FlatnessSystem::assemble(builtin("sl2")), SearchConfig{}).empty());
  }

  TEST_CASE("deterministic regardless of thread count") {
    const FlatnessSystem sys = FlatnessSystem::assemble(builtin("sol3"));
    SearchConfig one = with_starts(30), four = with_starts(30);
    four.threads = 4;
    const auto a = newton_multistart(sys, one);
    const auto b = newton_multistart(sys, four);
    const auto c = newton_multistart(sys, one);
    REQUIRE(a.size() == b.size());
    REQUIRE(a.size() == c.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].start == b[i].start);
      CHECK(a[i].s == b[i].s);
      CHECK(a[i].residual_norm == b[i].residual_norm);
      CHECK(a[i].s == c[i].s);
    }
  }

  TEST_CASE("seed changes the starts") {
    const FlatnessSystem sys = FlatnessSystem::assemble(builtin("heis3"));
    SearchConfig a = with_starts(10), b = with_starts(10);
    b.seed = 2;
    const auto ca = newton_multistart(sys, a), cb = newton_multistart(sys, b);
    bool differs = ca.size() != cb.size();
    for (std::size_t i = 0; !differs && i < ca.size(); ++i) differs = ca[i].start > 0 && ca[i].s != cb[i].s;
    CHECK(differs);
  }
}

TEST_SUITE("rationalize") {
  TEST_CASE("snap_rational") {
    const auto third = snap_rational(0.3333333341, 10000, 1e-6);
    REQUIRE(third.has_value());
    CHECK(*third == mpq_class(1, 3));
    CHECK(*snap_rational(-2.0, 10000, 1e-6) == mpq_class(-2));
    CHECK(*snap_rational(0.0, 10000, 1e-6) == mpq_class(0));
    CHECK_FALSE(snap_rational(M_PI, 10, 1e-9).has_value());
    // the continued-fraction oracle: 355/113 is the best approximation with q <= 113
    CHECK(*snap_rational(M_PI, 113, 1e-6) == mpq_class(355, 113));
  }

  TEST_CASE("perturbed heis solution snaps to the exact certificate") {
    const FlatnessSystem sys = FlatnessSystem::assemble(builtin("heis3"));
    Candidate cand{0, to_complex(heis_certificate_unknowns(sys)), 0.0};
    cand.s[sys.unknown_index(0, 1, 2)] += 3e-10;
    cand.s[3] += std::complex<double>(0, -2e-10);
    const auto conn = rationalize_and_verify(cand, sys, SearchConfig{});
    REQUIRE(conn.has_value());
    CHECK(is_flat(*conn));
    CHECK(is_torsion_free(*conn));
    CHECK(conn->gamma()(0, 1, 2) == GaussRat(1));
  }

  TEST_CASE("a component near 1/3 is recovered exactly") {
    // on abelian3, Gamma(0,0,0) alone is flat for any value
    const FlatnessSystem sys = FlatnessSystem::assemble(builtin("abelian3"));
    ComplexVector s(sys.unknown_count());
    s[sys.unknown_index(0, 0, 0)] = 0.3333333341;
    const auto conn = rationalize_and_verify({0, s, 0.0}, sys, SearchConfig{});
    REQUIRE(conn.has_value());
    CHECK(conn->gamma()(0, 0, 0) == GaussRat::ratio(1, 3));
  }

  TEST_CASE("a snap that fails exact verification yields nothing") {
    const FlatnessSystem sys = FlatnessSystem::assemble(builtin("sl2"));
    const Candidate cand{0, ComplexVector(sys.unknown_count()), 0.0};
    CHECK_FALSE(rationalize_and_verify(cand, sys, SearchConfig{}).has_value());
  }
}

TEST_SUITE("search_flat_connection") {
  TEST_CASE("certificates are exactly verified") {
    for (const char* name : {"abelian3", "heis3"}) {
      const SearchOutcome out = search_flat_connection(builtin(name), with_starts(20));
      CHECK(out.starts == 20);
      REQUIRE(out.certificate.has_value());
      REQUIRE(out.verified_start.has_value());
      CHECK(is_flat(*out.certificate));
      CHECK(is_torsion_free(*out.certificate));
    }
  }

  TEST_CASE("sl2 yields no certificate") {
    const SearchOutcome out = search_flat_connection(builtin("sl2"), with_starts(20));
    CHECK_FALSE(out.certificate.has_value());
    CHECK_FALSE(out.verified_start.has_value());
  }
}
