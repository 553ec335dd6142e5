#pragma once

#include <cstdint>
#include <stdexcept>

namespace socover {

// F_p for an odd prime p; elements are uint32_t values reduced mod p.
struct PrimeField {
  std::uint32_t p;

  explicit PrimeField(std::uint32_t modulus = 32003) : p(modulus) {
    if (p < 3 || !is_prime(p))
      throw std::invalid_argument("modulus must be an odd prime >= 3");
  }

  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p - b;
  }

  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a) * b % p);
  }

  std::uint32_t pow(std::uint32_t base, std::uint64_t e) const {
    std::uint32_t r = 1;
    std::uint32_t b = base % p;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (a % p == 0) throw std::domain_error("inverse of zero");
    return pow(a, p - 2);
  }

  static bool is_prime(std::uint32_t m) {
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= m; d += 2)
      if (m % d == 0) return false;
    return true;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

}  // namespace socover
