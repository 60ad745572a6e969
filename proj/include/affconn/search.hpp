#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "affconn/connection.hpp"
#include "affconn/lie.hpp"

namespace affconn {

struct SearchConfig {
  std::size_t starts = 200;
  std::size_t max_iters = 100;
  /// Euclidean norm of the complex residual vector.
  double residual_tol = 1e-10;
  // Levenberg-Marquardt damping: lambda starts at damping_initial, is
  // multiplied by damping_decrease after an accepted step and by
  // damping_increase after a rejected one.
  double damping_initial = 1e-3;
  double damping_increase = 10.0;
  double damping_decrease = 0.3;
  std::uint64_t seed = 1;
  long rationalize_denominator_bound = 10000;
  double rationalize_tol = 1e-6;
  /// Start points are uniform in [-radius, radius] per real component.
  double start_radius = 2.0;
  /// Worker threads for the starts; results do not depend on this.
  std::size_t threads = 1;
};

using ComplexVector = std::vector<std::complex<double>>;

/// Flatness equations for torsion-free invariant connections on g.
///
/// Unknowns are the symmetric part s(i, j, k) = s(j, i, k), i <= j, of
/// Gamma = c/2 + s; torsion vanishes identically in this parametrization.
/// One residual per curvature component R(l, k, i, j) with i < j.
class FlatnessSystem {
 public:
  static FlatnessSystem assemble(const LieAlgebra& g);

  const LieAlgebra& algebra() const { return g_; }
  std::size_t unknown_count() const { return unknowns_; }
  std::size_t residual_count() const { return residuals_; }

  /// Position of s(i, j, k) in the unknown vector; symmetric in (i, j).
  std::size_t unknown_index(std::size_t i, std::size_t j, std::size_t k) const;
  /// Position of R(l, k, i, j), i < j, in the residual vector.
  std::size_t residual_index(std::size_t l, std::size_t k, std::size_t i,
                             std::size_t j) const;

  ComplexVector residual(std::span<const std::complex<double>> s) const;
  /// Complex (holomorphic) Jacobian, residual_count x unknown_count.
  Eigen::MatrixXcd jacobian(std::span<const std::complex<double>> s) const;

  /// Exact connection c/2 + s for exact unknowns.
  InvariantConnection connection(std::span<const GaussRat> s) const;

 private:
  explicit FlatnessSystem(LieAlgebra g);
  ComplexVector gamma(std::span<const std::complex<double>> s) const;

  LieAlgebra g_;
  std::size_t n_;
  std::size_t unknowns_;
  std::size_t residuals_;
  ComplexVector c_;  // structure constants, c_[(i*n + j)*n + k]
};

struct Candidate {
  std::size_t start = 0;
  ComplexVector s;
  double residual_norm = 0.0;
};

/// Damped Gauss-Newton (Levenberg-Marquardt) from cfg.starts start points.
/// Start 0 is the origin; start t > 0 is drawn from a generator seeded by
/// (cfg.seed, t). Returns the converged points ordered by start index, each
/// with its residual norm recomputed from scratch.
std::vector<Candidate> newton_multistart(const FlatnessSystem& sys,
                                         const SearchConfig& cfg);

/// Best rational approximation p/q with q <= bound, if within tol of x.
std::optional<mpq_class> snap_rational(double x, long bound, double tol);

/// Turns a numeric candidate into an exactly verified flat torsion-free
/// connection, or nothing. Tries a direct snap first; otherwise pins
/// coordinates to small rationals one at a time, re-solving the remaining
/// unknowns after each pin, and snaps the result. Only connections whose
/// curvature and torsion vanish exactly are returned.
std::optional<InvariantConnection> rationalize_and_verify(const Candidate& candidate,
                                                          const FlatnessSystem& sys,
                                                          const SearchConfig& cfg);

struct SearchOutcome {
  std::size_t starts = 0;
  std::vector<Candidate> candidates;
  /// First candidate (by start index) that verified exactly.
  std::optional<std::size_t> verified_start;
  std::optional<InvariantConnection> certificate;
};

/// newton_multistart followed by rationalize_and_verify in start order.
SearchOutcome search_flat_connection(const LieAlgebra& g, const SearchConfig& cfg);

}  // namespace affconn
