#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "socover/fp.hpp"

namespace socover {

// Exponent vector over the t*n variables y_ij in row-major order: variable
// (i, j) sits at index (i-1)*n + (j-1) for 1 <= i <= t, 1 <= j <= n.
// std::vector's operator< is the lexicographic monomial order used
// throughout (an indexing convention only).
using Monomial = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Monomial& m);
Monomial mono_mul(const Monomial& a, const Monomial& b);

// Sparse multivariate polynomial over F_p; no zero coefficients are stored,
// so equality is structural equality of the term maps.
class PolyFp {
 public:
  using TermMap = std::map<Monomial, std::uint32_t>;

  PolyFp(PrimeField field, std::size_t nvars) : field_(field), nvars_(nvars) {}

  static PolyFp zero(PrimeField field, std::size_t nvars) { return {field, nvars}; }
  static PolyFp constant(PrimeField field, std::size_t nvars, std::uint32_t c);
  static PolyFp variable(PrimeField field, std::size_t nvars, std::size_t var);

  /// Accumulates c * m into the polynomial, dropping the term if it cancels.
  void add_term(const Monomial& m, std::uint32_t c);

  const TermMap& terms() const { return terms_; }
  PrimeField field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Total degree shared by all terms, if any; nullopt for zero or
  /// inhomogeneous polynomials.
  std::optional<std::uint32_t> homogeneous_degree() const;

  PolyFp operator+(const PolyFp& o) const;
  PolyFp operator-(const PolyFp& o) const;
  PolyFp operator*(const PolyFp& o) const;
  PolyFp negated() const;
  PolyFp scaled(std::uint32_t c) const;

  std::uint32_t eval(const std::vector<std::uint32_t>& point) const;
  PolyFp derivative(std::size_t var) const;

  std::string to_string() const;

  friend bool operator==(const PolyFp& a, const PolyFp& b) {
    return a.field_.p == b.field_.p && a.terms_ == b.terms_;
  }

 private:
  PrimeField field_;
  std::size_t nvars_;
  TermMap terms_;
};

}  // namespace socover
