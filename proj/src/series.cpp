#include "socover/series.hpp"

#include <stdexcept>

namespace socover {

std::string to_string(GradingTag tag) {
  return tag == GradingTag::YGrading ? "ygrading" : "rescaled";
}

std::vector<BigInt> expand(const HilbertSeries& s, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("negative expansion bound");
  if (!s.numerator.is_zero() && s.numerator.valuation < 0)
    throw std::invalid_argument("not an N-graded object");
  std::vector<BigInt> values(max_degree + 1);
  if (s.numerator.is_zero()) return values;
  const int val = s.numerator.valuation;
  const int deg = s.numerator.degree();
  for (int i = 0; i <= max_degree; ++i) {
    if (s.dim == 0) {
      values[i] = s.numerator.coeff(i);
      continue;
    }
    BigInt acc = 0;
    for (int j = val; j <= deg && j <= i; ++j)
      acc += s.numerator.coeff(j) * binomial(s.dim - 1 + i - j, s.dim - 1);
    values[i] = acc;
  }
  return values;
}

HilbertSeries twist(const HilbertSeries& s, int a) {
  return {s.numerator.shifted(-a), s.dim, s.grading};
}

HilbertSeries dual(const HilbertSeries& s) {
  if (s.numerator.is_zero()) return s;
  return {s.numerator.reversed_at(s.dim - s.numerator.degree()), s.dim, s.grading};
}

namespace {

bool rises_then_falls(const std::vector<BigInt>& h) {
  std::size_t i = 0;
  while (i + 1 < h.size() && h[i] <= h[i + 1]) ++i;
  while (i + 1 < h.size() && h[i] >= h[i + 1]) ++i;
  return i + 1 == h.size();
}

}  // namespace

HVectorProfile h_vector(const HilbertSeries& s) {
  if (s.numerator.is_zero()) throw std::invalid_argument("zero series has no h-vector");
  if (s.numerator.valuation != 0) throw std::invalid_argument("numerator not normalized");
  HVectorProfile profile;
  profile.h = s.numerator.coeffs;
  profile.palindrome = s.numerator.palindromic();
  profile.a_invariant = s.a_invariant();
  if (profile.palindrome) {
    const std::size_t k = profile.h.size() - 1;
    profile.unimodal = true;
    for (std::size_t i = 0; 2 * i < k; ++i)
      if (profile.h[i] > profile.h[i + 1]) {
        profile.unimodal = false;
        break;
      }
  } else {
    profile.unimodal = rises_then_falls(profile.h);
  }
  return profile;
}

HilbertSeries rescale_halve(const HilbertSeries& s) {
  if (s.grading != GradingTag::YGrading)
    throw std::invalid_argument("grading not rescalable");
  if (s.numerator.is_zero()) return {LaurentPoly::zero(), s.dim, GradingTag::Rescaled};
  if (s.numerator.valuation % 2 != 0)
    throw std::invalid_argument("grading not rescalable");
  std::vector<BigInt> half((s.numerator.coeffs.size() + 1) / 2);
  for (std::size_t i = 0; i < s.numerator.coeffs.size(); ++i) {
    if (i % 2 == 0)
      half[i / 2] = s.numerator.coeffs[i];
    else if (s.numerator.coeffs[i] != 0)
      throw std::invalid_argument("grading not rescalable");
  }
  return {LaurentPoly(s.numerator.valuation / 2, std::move(half)), s.dim,
          GradingTag::Rescaled};
}

HilbertSeries rescale_double(const HilbertSeries& s) {
  if (s.grading != GradingTag::Rescaled)
    throw std::invalid_argument("grading not rescalable");
  if (s.numerator.is_zero()) return {LaurentPoly::zero(), s.dim, GradingTag::YGrading};
  std::vector<BigInt> doubled(2 * s.numerator.coeffs.size() - 1);
  for (std::size_t i = 0; i < s.numerator.coeffs.size(); ++i)
    doubled[2 * i] = s.numerator.coeffs[i];
  return {LaurentPoly(2 * s.numerator.valuation, std::move(doubled)), s.dim,
          GradingTag::YGrading};
}

HilbertSeries add(const HilbertSeries& a, const HilbertSeries& b) {
  if (a.dim != b.dim || a.grading != b.grading)
    throw std::invalid_argument("series dimensions or gradings do not match");
  return {a.numerator + b.numerator, a.dim, a.grading};
}

}  // namespace socover
