#include "affconn/poly.hpp"

#include <algorithm>
#include <numeric>

#include "affconn/detail/laplace.hpp"
#include "affconn/errors.hpp"

namespace affconn {

namespace {

unsigned degree_of(const MultiPoly::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

}  // namespace

MultiPoly::MultiPoly(std::size_t nvars) : nvars_(nvars) {
  if (nvars > kMaxVars) {
    throw DimensionMismatch("MultiPoly supports at most " +
                            std::to_string(kMaxVars) + " variables");
  }
}

MultiPoly MultiPoly::constant(std::size_t nvars, const GaussRat& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw IndexOutOfRange("MultiPoly::variable index");
  MultiPoly p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(degree_of(e)));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = degree_of(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return degree_of(t.first) == d; });
}

void MultiPoly::add_term(const Exponents& exponents, const GaussRat& c) {
  if (exponents.size() != nvars_) {
    throw DimensionMismatch("MultiPoly::add_term exponent length");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GaussRat MultiPoly::evaluate(std::span<const GaussRat> point) const {
  if (point.size() != nvars_) {
    throw DimensionMismatch("MultiPoly::evaluate point dimension");
  }
  GaussRat acc;
  for (const auto& [e, c] : terms_) {
    GaussRat term = c;
    for (std::size_t v = 0; v < nvars_; ++v) {
      for (unsigned k = 0; k < e[v]; ++k) term *= point[v];
    }
    acc += term;
  }
  return acc;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest degree first, then reverse lexicographic on exponents.
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    const unsigned da = degree_of(a->first);
    const unsigned db = degree_of(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    std::string mono;
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "p" + std::to_string(v + 1);
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    std::string coeff = c.str();
    bool negative = false;
    if (c.is_real() && sgn(c.re()) < 0) {
      negative = true;
      coeff = (-c).str();
    } else if (!c.is_real() && sgn(c.re()) != 0) {
      coeff = "(" + coeff + ")";
    }
    std::string body;
    if (mono.empty()) {
      body = coeff;
    } else if (coeff == "1") {
      body = mono;
    } else {
      body = coeff + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

void MultiPoly::require_compatible(const MultiPoly& o) const {
  if (o.nvars_ != nvars_) throw DimensionMismatch("MultiPoly variable count");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const GaussRat& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_compatible(b);
  MultiPoly out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e(a.nvars_);
      for (std::size_t v = 0; v < a.nvars_; ++v) {
        e[v] = static_cast<std::uint8_t>(ea[v] + eb[v]);
      }
      if (degree_of(e) > MultiPoly::kMaxDegree) {
        throw DimensionMismatch("MultiPoly degree exceeds " +
                                std::to_string(MultiPoly::kMaxDegree));
      }
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly poly_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw DimensionMismatch("poly_det: matrix not square");
  }
  const std::size_t nvars = n == 0 ? 0 : m[0][0].nvars();
  return detail::laplace_det<MultiPoly>(
      n, [&](std::size_t r, std::size_t c) -> const MultiPoly& { return m[r][c]; },
      MultiPoly(nvars), MultiPoly::constant(nvars, 1));
}

}  // namespace affconn
