#pragma once

#include <cstdint>
#include <stdexcept>

namespace socover {

// Hard limits for the brute-force linear algebra.  Callers may override.
struct SizeGuard {
  std::uint64_t max_ambient = 500000;    // monomials in the ambient graded piece
  std::uint64_t max_multisets = 200000;  // generator multisets per degree
};

struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace socover
