#include "socover/bigint.hpp"

namespace socover {

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact: r is C(n, i+1) * (i+1)! / ... at each step
  }
  return r;
}

}  // namespace socover
