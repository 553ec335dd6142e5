#include "socover/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace socover {

LaurentPoly::LaurentPoly(int val, std::vector<BigInt> c)
    : valuation(val), coeffs(std::move(c)) {
  std::size_t lead = 0;
  while (lead < coeffs.size() && coeffs[lead] == 0) ++lead;
  if (lead == coeffs.size()) {
    coeffs.clear();
    valuation = 0;
    return;
  }
  std::size_t tail = coeffs.size();
  while (coeffs[tail - 1] == 0) --tail;
  if (lead > 0) coeffs.erase(coeffs.begin(), coeffs.begin() + lead);
  coeffs.resize(tail - lead);
  valuation += static_cast<int>(lead);
}

LaurentPoly LaurentPoly::constant(BigInt c) { return LaurentPoly(0, {std::move(c)}); }

LaurentPoly LaurentPoly::monomial(BigInt c, int deg) {
  return LaurentPoly(deg, {std::move(c)});
}

int LaurentPoly::degree() const {
  if (is_zero()) throw std::logic_error("degree of the zero polynomial");
  return valuation + static_cast<int>(coeffs.size()) - 1;
}

BigInt LaurentPoly::coeff(int deg) const {
  if (deg < valuation || deg >= valuation + static_cast<int>(coeffs.size())) return 0;
  return coeffs[deg - valuation];
}

BigInt LaurentPoly::at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs) s += c;
  return s;
}

bool LaurentPoly::palindromic() const {
  std::size_t k = coeffs.size();
  for (std::size_t i = 0; 2 * i < k; ++i)
    if (coeffs[i] != coeffs[k - 1 - i]) return false;
  return true;
}

LaurentPoly LaurentPoly::reversed_at(int val) const {
  std::vector<BigInt> rev(coeffs.rbegin(), coeffs.rend());
  return LaurentPoly(val, std::move(rev));
}

LaurentPoly LaurentPoly::shifted(int by) const {
  if (is_zero()) return zero();
  LaurentPoly out = *this;
  out.valuation += by;
  return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int val = std::min(a.valuation, b.valuation);
  int deg = std::max(a.degree(), b.degree());
  std::vector<BigInt> c(deg - val + 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[a.valuation - val + i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[b.valuation - val + i] += b.coeffs[i];
  return LaurentPoly(val, std::move(c));
}

}  // namespace socover
