#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "affconn/scalar.hpp"

namespace affconn {

/// Sparse multivariate polynomial over Q(i) in at most kMaxVars variables.
/// Zero coefficients are never stored, so equality is term-map equality.
class MultiPoly {
 public:
  static constexpr std::size_t kMaxVars = 6;
  static constexpr unsigned kMaxDegree = 8;

  using Exponents = std::vector<std::uint8_t>;
  using TermMap = std::map<Exponents, GaussRat>;

  explicit MultiPoly(std::size_t nvars = 0);

  static MultiPoly constant(std::size_t nvars, const GaussRat& c);
  /// The coordinate function p_index.
  static MultiPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;

  /// Adds c * monomial(exponents); drops the term if the sum cancels.
  void add_term(const Exponents& exponents, const GaussRat& c);

  GaussRat evaluate(std::span<const GaussRat> point) const;

  /// e.g. "p1*p2*p3 - 2*p1^2" with variables named p1..pN.
  std::string str() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const GaussRat& s);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const GaussRat& s) { return a *= s; }
  /// Throws DimensionMismatch if the product exceeds kMaxDegree.
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const MultiPoly& o) const;

  std::size_t nvars_;
  TermMap terms_;
};

/// Square matrix of polynomials, row-major.
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Symbolic determinant by memoized Laplace expansion.
MultiPoly poly_det(const PolyMatrix& m);

}  // namespace affconn
