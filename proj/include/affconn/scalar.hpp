#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace affconn {

/// Exact element of Q(i): a pair of canonical GMP rationals.
///
/// Every arithmetic result is canonical (positive denominators, reduced
/// fractions, zero stored as 0/1), so equality is plain component equality.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long value) : re_(value) {}  // NOLINT: implicit integer literals
  GaussRat(mpq_class re, mpq_class im = 0);

  static GaussRat imag_unit() { return GaussRat(0, 1); }
  static GaussRat ratio(long num, long den);

  /// Parses a rational of the form `-?digits(/digits)?` per component.
  /// Throws std::invalid_argument on malformed text or a zero denominator.
  static GaussRat parse(std::string_view re, std::string_view im = "0");

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  /// |z|^2, exact.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }

  /// Component strings in the input grammar, e.g. {"-1/2", "3"}.
  std::pair<std::string, std::string> to_strings() const;
  /// Human form: "3", "-1/2", "2i", "1+i", "1/2-3/4i".
  std::string str() const;

  GaussRat operator-() const { return GaussRat(-re_, -im_); }

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  /// Throws DivisionByZero when o is zero.
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) {
    return !(a == b);
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussRat& z);

/// Parses one rational component; exposed for the file readers.
mpq_class parse_rational(std::string_view text);

}  // namespace affconn
