#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace affconn {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct UnknownAlgebra : Error {
  explicit UnknownAlgebra(const std::string& name)
      : Error("unknown builtin algebra: " + name) {}
};

/// Jacobi identity fails for basis quadruple (i, j, k, l): the e_l coefficient
/// of the cyclic sum over (i, j, k) is nonzero.
struct JacobiViolation : Error {
  JacobiViolation(std::size_t i, std::size_t j, std::size_t k, std::size_t l)
      : Error("Jacobi identity violated at (i,j,k,l) = (" + std::to_string(i) +
              "," + std::to_string(j) + "," + std::to_string(k) + "," +
              std::to_string(l) + ")"),
        where{i, j, k, l} {}
  std::array<std::size_t, 4> where;
};

struct InconsistentEntry : Error {
  InconsistentEntry(std::size_t i, std::size_t j, const std::string& why)
      : Error("inconsistent bracket entry (" + std::to_string(i) + "," +
              std::to_string(j) + "): " + why),
        left(i),
        right(j) {}
  std::size_t left;
  std::size_t right;
};

struct NonzeroTorsion : Error {
  NonzeroTorsion() : Error("connection has nonzero torsion") {}
};

struct DimensionTooSmall : Error {
  explicit DimensionTooSmall(std::size_t n)
      : Error("projective Weyl tensor needs dimension >= 3, got " +
              std::to_string(n)) {}
};

struct NotHomomorphism : Error {
  using Error::Error;
};

struct NotEtale : Error {
  NotEtale() : Error("affine map is not etale: translation parts are dependent") {}
};

struct NotFlatTorsionFree : Error {
  NotFlatTorsionFree() : Error("connection is not flat and torsion-free") {}
};

struct InvalidRep : Error {
  using Error::Error;
};

/// Input file problem. `line` is 1-based (0 when unknown); `field` is a JSON
/// pointer to the offending value when the document itself parsed.
struct ParseError : Error {
  ParseError(std::size_t line, std::string field, const std::string& what)
      : Error(format(line, field, what)), line(line), field(std::move(field)) {}

  std::size_t line;
  std::string field;

 private:
  static std::string format(std::size_t line, const std::string& field,
                            const std::string& what) {
    std::string s = "parse error";
    if (line != 0) s += " at line " + std::to_string(line);
    if (!field.empty()) s += " in field " + field;
    return s + ": " + what;
  }
};

}  // namespace affconn
