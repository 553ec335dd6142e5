#pragma once

#include <string>
#include <vector>

#include "socover/laurent.hpp"

namespace socover {

// Degree conventions.  YGrading gives every variable y_ij degree 1, so Gram
// entries y^tr y have degree 2 and maximal minors degree t.  Rescaled halves
// all degrees (Gram entries in degree 1, minors in degree t/2); it exists
// only when every occurring degree is even.
enum class GradingTag { YGrading, Rescaled };

std::string to_string(GradingTag tag);

// Hilbert series N(z) / (1-z)^dim with Laurent-polynomial numerator.  A
// YGrading series obtained by rescale_double keeps dim and doubles numerator
// exponents; its denominator reads as (1-z^2)^dim, tracked by the tag alone.
struct HilbertSeries {
  LaurentPoly numerator;
  int dim = 0;
  GradingTag grading = GradingTag::Rescaled;

  /// degree(numerator) - dim; the degree of the series as a rational function.
  int a_invariant() const { return numerator.degree() - dim; }

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

struct HVectorProfile {
  std::vector<BigInt> h;
  bool palindrome = false;
  bool unimodal = false;
  int a_invariant = 0;
};

/// Hilbert function values H(0..max_degree), exact integers.
/// Requires numerator valuation >= 0.
std::vector<BigInt> expand(const HilbertSeries& s, int max_degree);

/// Degree shift M(a)_i = M_{a+i}: multiplies the series by z^(-a).
HilbertSeries twist(const HilbertSeries& s, int a);

/// Graded dual HS(omega)(z) = (-1)^dim HS(1/z); meaningful when s is the
/// series of a Cohen-Macaulay ring or module (caller's responsibility).
HilbertSeries dual(const HilbertSeries& s);

/// h-vector of a valuation-0 series, with palindrome/unimodality flags.
/// For a palindromic vector, unimodal means nondecreasing up to the middle;
/// otherwise the standard rises-then-falls condition is used.
HVectorProfile h_vector(const HilbertSeries& s);

/// Substitute z^(1/2): H(2i) -> H'(i).  Requires YGrading and numerator
/// support in even degrees only.
HilbertSeries rescale_halve(const HilbertSeries& s);

/// Formal inverse of rescale_halve: doubles numerator exponents, keeps dim.
HilbertSeries rescale_double(const HilbertSeries& s);

/// Series of a direct sum; dims and grading tags must agree.
HilbertSeries add(const HilbertSeries& a, const HilbertSeries& b);

}  // namespace socover
