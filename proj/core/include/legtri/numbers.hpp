#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace legtri {

// Exact binomial coefficient; 0 outside the Pascal triangle.
inline boost::multiprecision::cpp_int binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  boost::multiprecision::cpp_int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is a running binomial
  }
  return r;
}

}  // namespace legtri
