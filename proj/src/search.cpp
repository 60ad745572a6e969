#include "affconn/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "affconn/errors.hpp"

namespace affconn {

namespace {

using Cplx = std::complex<double>;

double norm2(const ComplexVector& r) {
  double acc = 0.0;
  for (const Cplx& z : r) acc += std::norm(z);
  return std::sqrt(acc);
}

// Real coordinates interleave (Re s_q, Im s_q).
ComplexVector to_complex(const Eigen::VectorXd& x) {
  ComplexVector s(static_cast<std::size_t>(x.size() / 2));
  for (std::size_t q = 0; q < s.size(); ++q) {
    s[q] = {x[static_cast<Eigen::Index>(2 * q)], x[static_cast<Eigen::Index>(2 * q + 1)]};
  }
  return s;
}

Eigen::VectorXd to_real(const ComplexVector& s) {
  Eigen::VectorXd x(static_cast<Eigen::Index>(2 * s.size()));
  for (std::size_t q = 0; q < s.size(); ++q) {
    x[static_cast<Eigen::Index>(2 * q)] = s[q].real();
    x[static_cast<Eigen::Index>(2 * q + 1)] = s[q].imag();
  }
  return x;
}

Eigen::VectorXd real_residual(const FlatnessSystem& sys, const Eigen::VectorXd& x) {
  return to_real(sys.residual(to_complex(x)));
}

// Real Jacobian of the real-ified residual, restricted to the free columns.
Eigen::MatrixXd real_jacobian(const FlatnessSystem& sys, const Eigen::VectorXd& x,
                              const std::vector<Eigen::Index>& free) {
  const Eigen::MatrixXcd jc = sys.jacobian(to_complex(x));
  Eigen::MatrixXd j(2 * jc.rows(), static_cast<Eigen::Index>(free.size()));
  for (std::size_t f = 0; f < free.size(); ++f) {
    const Eigen::Index col = free[f] / 2;
    const bool imag_part = free[f] % 2 == 1;
    const auto fc = static_cast<Eigen::Index>(f);
    for (Eigen::Index r = 0; r < jc.rows(); ++r) {
      const Cplx d = jc(r, col);
      // d(r)/d(Re s) = J, d(r)/d(Im s) = iJ
      const Cplx dd = imag_part ? Cplx(-d.imag(), d.real()) : d;
      j(2 * r, fc) = dd.real();
      j(2 * r + 1, fc) = dd.imag();
    }
  }
  return j;
}

// Levenberg-Marquardt over the free real coordinates of x; fixed coordinates
// keep their values. Returns the final residual norm.
double levenberg_marquardt(const FlatnessSystem& sys, Eigen::VectorXd& x,
                           const std::vector<Eigen::Index>& free,
                           const SearchConfig& cfg) {
  Eigen::VectorXd r = real_residual(sys, x);
  double cost = r.squaredNorm();
  double lambda = cfg.damping_initial;
  for (std::size_t iter = 0; iter < cfg.max_iters; ++iter) {
    if (std::sqrt(cost) < cfg.residual_tol || free.empty()) break;
    const Eigen::MatrixXd j = real_jacobian(sys, x, free);
    const Eigen::MatrixXd h = j.transpose() * j;
    const Eigen::VectorXd grad = j.transpose() * r;
    bool accepted = false;
    while (!accepted && lambda < 1e16) {
      Eigen::MatrixXd damped = h;
      damped.diagonal().array() += lambda;
      const Eigen::VectorXd step = damped.ldlt().solve(-grad);
      Eigen::VectorXd trial = x;
      for (std::size_t f = 0; f < free.size(); ++f) {
        trial[free[f]] += step[static_cast<Eigen::Index>(f)];
      }
      const Eigen::VectorXd trial_r = real_residual(sys, trial);
      const double trial_cost = trial_r.squaredNorm();
      if (std::isfinite(trial_cost) && trial_cost < cost) {
        x = std::move(trial);
        r = trial_r;
        cost = trial_cost;
        lambda = std::max(lambda * cfg.damping_decrease, 1e-15);
        accepted = true;
      } else {
        lambda *= cfg.damping_increase;
      }
    }
    if (!accepted) break;
  }
  return std::sqrt(cost);
}

std::vector<Eigen::Index> all_indices(Eigen::Index count) {
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(count));
  for (Eigen::Index i = 0; i < count; ++i) idx[static_cast<std::size_t>(i)] = i;
  return idx;
}

Eigen::VectorXd start_point(std::size_t unknowns, std::size_t start,
                            const SearchConfig& cfg) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(2 * unknowns));
  if (start == 0) return x;
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed),
                    static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(start)};
  std::mt19937_64 gen(seq);
  std::uniform_real_distribution<double> dist(-cfg.start_radius, cfg.start_radius);
  for (Eigen::Index q = 0; q < x.size(); ++q) x[q] = dist(gen);
  return x;
}

std::optional<InvariantConnection> snap_and_verify(const Eigen::VectorXd& x,
                                                   const FlatnessSystem& sys,
                                                   const SearchConfig& cfg) {
  std::vector<GaussRat> s(sys.unknown_count());
  for (std::size_t q = 0; q < s.size(); ++q) {
    auto re = snap_rational(x[static_cast<Eigen::Index>(2 * q)],
                            cfg.rationalize_denominator_bound, cfg.rationalize_tol);
    auto im = snap_rational(x[static_cast<Eigen::Index>(2 * q + 1)],
                            cfg.rationalize_denominator_bound, cfg.rationalize_tol);
    if (!re || !im) return std::nullopt;
    s[q] = GaussRat(*re, *im);
  }
  InvariantConnection conn = sys.connection(s);
  if (!is_torsion_free(conn) || !is_flat(conn)) return std::nullopt;
  return conn;
}

}  // namespace

FlatnessSystem::FlatnessSystem(LieAlgebra g) : g_(std::move(g)) {
  n_ = g_.dim();
  unknowns_ = n_ * (n_ + 1) / 2 * n_;
  residuals_ = n_ == 0 ? 0 : n_ * n_ * (n_ * (n_ - 1) / 2);
  c_.resize(n_ * n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) c_[(i * n_ + j) * n_ + k] = g_.c(i, j, k).to_complex();
    }
  }
}

FlatnessSystem FlatnessSystem::assemble(const LieAlgebra& g) { return FlatnessSystem(g); }

std::size_t FlatnessSystem::unknown_index(std::size_t i, std::size_t j,
                                          std::size_t k) const {
  if (i > j) std::swap(i, j);
  // Pairs (i, j), i <= j, enumerated row by row.
  std::size_t p = 0;
  for (std::size_t a = 0; a < i; ++a) p += n_ - a;
  p += j - i;
  return p * n_ + k;
}

std::size_t FlatnessSystem::residual_index(std::size_t l, std::size_t k, std::size_t i,
                                           std::size_t j) const {
  std::size_t p = 0;
  for (std::size_t a = 0; a < i; ++a) p += n_ - a - 1;
  p += j - i - 1;
  return (p * n_ + k) * n_ + l;
}

ComplexVector FlatnessSystem::gamma(std::span<const Cplx> s) const {
  if (s.size() != unknowns_) throw DimensionMismatch("FlatnessSystem: unknown vector length");
  ComplexVector gam(n_ * n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        gam[(i * n_ + j) * n_ + k] = 0.5 * c_[(i * n_ + j) * n_ + k] + s[unknown_index(i, j, k)];
      }
    }
  }
  return gam;
}

ComplexVector FlatnessSystem::residual(std::span<const Cplx> s) const {
  const ComplexVector gam = gamma(s);
  const std::size_t n = n_;
  auto G = [&](std::size_t a, std::size_t b, std::size_t c) { return gam[(a * n + b) * n + c]; };
  auto C = [&](std::size_t a, std::size_t b, std::size_t c) { return c_[(a * n + b) * n + c]; };
  ComplexVector r(residuals_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          Cplx acc = 0.0;
          for (std::size_t m = 0; m < n; ++m) {
            acc += G(j, k, m) * G(i, m, l) - G(i, k, m) * G(j, m, l) - C(i, j, m) * G(m, k, l);
          }
          r[residual_index(l, k, i, j)] = acc;
        }
      }
    }
  }
  return r;
}

Eigen::MatrixXcd FlatnessSystem::jacobian(std::span<const Cplx> s) const {
  const ComplexVector gam = gamma(s);
  const std::size_t n = n_;
  auto G = [&](std::size_t a, std::size_t b, std::size_t c) { return gam[(a * n + b) * n + c]; };
  Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(residuals_),
                                                static_cast<Eigen::Index>(unknowns_));
  // Each Gamma(a, b, c) enters through s(a, b, c) with coefficient 1.
  auto add = [&](Eigen::Index row, std::size_t a, std::size_t b, std::size_t c, Cplx v) {
    jac(row, static_cast<Eigen::Index>(unknown_index(a, b, c))) += v;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          const auto row = static_cast<Eigen::Index>(residual_index(l, k, i, j));
          for (std::size_t m = 0; m < n; ++m) {
            add(row, j, k, m, G(i, m, l));
            add(row, i, m, l, G(j, k, m));
            add(row, i, k, m, -G(j, m, l));
            add(row, j, m, l, -G(i, k, m));
            add(row, m, k, l, -c_[(i * n + j) * n + m]);
          }
        }
      }
    }
  }
  return jac;
}

InvariantConnection FlatnessSystem::connection(std::span<const GaussRat> s) const {
  if (s.size() != unknowns_) throw DimensionMismatch("FlatnessSystem: unknown vector length");
  const GaussRat half = GaussRat::ratio(1, 2);
  Tensor3 gam(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        gam(i, j, k) = half * g_.c(i, j, k) + s[unknown_index(i, j, k)];
      }
    }
  }
  return InvariantConnection(g_, std::move(gam));
}

std::vector<Candidate> newton_multistart(const FlatnessSystem& sys,
                                         const SearchConfig& cfg) {
  const std::vector<Eigen::Index> free =
      all_indices(static_cast<Eigen::Index>(2 * sys.unknown_count()));
  std::vector<std::optional<Candidate>> slots(cfg.starts);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < cfg.starts; t = next++) {
      Eigen::VectorXd x = start_point(sys.unknown_count(), t, cfg);
      levenberg_marquardt(sys, x, free, cfg);
      Candidate cand{t, to_complex(x), 0.0};
      cand.residual_norm = norm2(sys.residual(cand.s));
      if (cand.residual_norm < cfg.residual_tol) slots[t] = std::move(cand);
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(cfg.threads, 1, std::max<std::size_t>(cfg.starts, 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(worker);
  }

  std::vector<Candidate> out;
  for (auto& slot : slots) {
    if (slot) out.push_back(std::move(*slot));
  }
  return out;
}

std::optional<mpq_class> snap_rational(double x, long bound, double tol) {
  if (!std::isfinite(x) || std::fabs(x) > 1e12 || bound < 1) return std::nullopt;
  const bool negative = x < 0;
  const long double target = std::fabs(static_cast<long double>(x));

  // Continued-fraction convergents p/q, stopping before q exceeds bound.
  long long p_prev = 1, q_prev = 0;  // p_{-1}/q_{-1}
  long long p = static_cast<long long>(std::floor(target)), q = 1;
  long double rest = target - std::floor(target);
  long long best_p = p, best_q = q;
  for (int step = 0; step < 64 && rest > 1e-18L; ++step) {
    const long double inv = 1.0L / rest;
    const auto a = static_cast<long long>(std::floor(inv));
    rest = inv - static_cast<long double>(a);
    const long long q_next = a * q + q_prev;
    if (q_next > bound) {
      // Largest admissible semiconvergent.
      const long long k = (bound - q_prev) / q;
      if (k > 0) {
        const long long sp = k * p + p_prev;
        const long long sq = k * q + q_prev;
        const long double err_semi = std::fabs(target - static_cast<long double>(sp) / sq);
        const long double err_conv = std::fabs(target - static_cast<long double>(p) / q);
        if (err_semi < err_conv) {
          best_p = sp;
          best_q = sq;
        }
      }
      break;
    }
    const long long p_next = a * p + p_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    best_p = p;
    best_q = q;
  }
  const long double err = std::fabs(target - static_cast<long double>(best_p) / best_q);
  if (err > tol) return std::nullopt;
  mpq_class r(mpz_class(std::to_string(negative ? -best_p : best_p)),
              mpz_class(std::to_string(best_q)));
  r.canonicalize();
  return r;
}

std::optional<InvariantConnection> rationalize_and_verify(const Candidate& candidate,
                                                          const FlatnessSystem& sys,
                                                          const SearchConfig& cfg) {
  if (candidate.s.size() != sys.unknown_count()) {
    throw DimensionMismatch("rationalize_and_verify: candidate length");
  }
  Eigen::VectorXd x = to_real(candidate.s);
  if (auto conn = snap_and_verify(x, sys, cfg)) return conn;
  if (norm2(sys.residual(candidate.s)) >= cfg.residual_tol) return std::nullopt;

  // Pin one real coordinate at a time, preferring 0 and then the nearest
  // integer, and keep a pin only if the rest of the system still solves.
  const auto count = x.size();
  std::vector<bool> pinned(static_cast<std::size_t>(count), false);
  for (Eigen::Index q = 0; q < count; ++q) {
    std::vector<double> targets{0.0};
    const double rounded = std::round(x[q]);
    if (rounded != 0.0) targets.push_back(rounded);
    for (double target : targets) {
      Eigen::VectorXd trial = x;
      trial[q] = target;
      pinned[static_cast<std::size_t>(q)] = true;
      std::vector<Eigen::Index> free;
      for (Eigen::Index f = 0; f < count; ++f) {
        if (!pinned[static_cast<std::size_t>(f)]) free.push_back(f);
      }
      if (levenberg_marquardt(sys, trial, free, cfg) < cfg.residual_tol) {
        x = std::move(trial);
        break;
      }
      pinned[static_cast<std::size_t>(q)] = false;
    }
  }
  return snap_and_verify(x, sys, cfg);
}

SearchOutcome search_flat_connection(const LieAlgebra& g, const SearchConfig& cfg) {
  const FlatnessSystem sys = FlatnessSystem::assemble(g);
  SearchOutcome out;
  out.starts = cfg.starts;
  out.candidates = newton_multistart(sys, cfg);
  for (const Candidate& cand : out.candidates) {
    if (auto conn = rationalize_and_verify(cand, sys, cfg)) {
      out.verified_start = cand.start;
      out.certificate = std::move(conn);
      break;
    }
  }
  return out;
}

}  // namespace affconn
