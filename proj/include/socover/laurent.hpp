#pragma once

#include <vector>

#include "socover/bigint.hpp"

namespace socover {

// Laurent polynomial over Z.  Canonical form: coeffs.front() and
// coeffs.back() are nonzero; the zero polynomial has empty coeffs and
// valuation 0, so equality is plain structural equality.
struct LaurentPoly {
  int valuation = 0;           // degree of the lowest term
  std::vector<BigInt> coeffs;  // coeffs[i] is the coefficient of z^(valuation+i)

  LaurentPoly() = default;
  LaurentPoly(int val, std::vector<BigInt> c);  // canonicalizes

  static LaurentPoly zero() { return {}; }
  static LaurentPoly constant(BigInt c);
  static LaurentPoly monomial(BigInt c, int deg);

  bool is_zero() const { return coeffs.empty(); }
  int degree() const;  // valuation + size - 1; throws on the zero polynomial
  BigInt coeff(int deg) const;
  BigInt at_one() const;  // sum of coefficients
  bool palindromic() const;

  /// Coefficients reversed, placed at the given valuation.
  LaurentPoly reversed_at(int val) const;
  /// Multiplication by z^by.
  LaurentPoly shifted(int by) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace socover
