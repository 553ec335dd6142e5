#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace socover {

using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

}  // namespace socover
