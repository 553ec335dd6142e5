#include "socover/poly_fp.hpp"

#include <sstream>
#include <stdexcept>

namespace socover {

std::uint32_t total_degree(const Monomial& m) {
  std::uint32_t d = 0;
  for (auto e : m) d += e;
  return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

PolyFp PolyFp::constant(PrimeField field, std::size_t nvars, std::uint32_t c) {
  PolyFp out(field, nvars);
  out.add_term(Monomial(nvars, 0), c % field.p);
  return out;
}

PolyFp PolyFp::variable(PrimeField field, std::size_t nvars, std::size_t var) {
  PolyFp out(field, nvars);
  Monomial m(nvars, 0);
  m.at(var) = 1;
  out.add_term(m, 1);
  return out;
}

void PolyFp::add_term(const Monomial& m, std::uint32_t c) {
  c %= field_.p;
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<std::uint32_t> PolyFp::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  std::uint32_t d = total_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) != d) return std::nullopt;
  return d;
}

PolyFp PolyFp::operator+(const PolyFp& o) const {
  PolyFp out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

PolyFp PolyFp::operator-(const PolyFp& o) const {
  PolyFp out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, field_.neg(c));
  return out;
}

PolyFp PolyFp::operator*(const PolyFp& o) const {
  PolyFp out(field_, nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_)
      out.add_term(mono_mul(ma, mb), field_.mul(ca, cb));
  return out;
}

PolyFp PolyFp::negated() const {
  PolyFp out(field_, nvars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, field_.neg(c));
  return out;
}

PolyFp PolyFp::scaled(std::uint32_t c) const {
  PolyFp out(field_, nvars_);
  c %= field_.p;
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, field_.mul(v, c));
  return out;
}

std::uint32_t PolyFp::eval(const std::vector<std::uint32_t>& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("point has wrong arity");
  std::uint32_t acc = 0;
  for (const auto& [m, c] : terms_) {
    std::uint32_t v = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) v = field_.mul(v, field_.pow(point[i], m[i]));
    acc = field_.add(acc, v);
  }
  return acc;
}

PolyFp PolyFp::derivative(std::size_t var) const {
  PolyFp out(field_, nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    --d[var];
    out.add_term(d, field_.mul(c, m[var] % field_.p));
  }
  return out;
}

std::string PolyFp::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) {
        os << "*y" << i;
        if (m[i] > 1) os << "^" << m[i];
      }
  }
  return os.str();
}

}  // namespace socover
