#pragma once

#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace subdiv {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt &x) { return x.str(); }

/// log2 of a positive integer, accurate to double precision for any size.
inline double log2_of(const BigInt &x) {
  if (x <= 0) return -INFINITY;
  const auto msb = static_cast<long>(boost::multiprecision::msb(x));
  if (msb < 53) return std::log2(x.convert_to<double>());
  const BigInt top = x >> static_cast<unsigned>(msb - 52);
  return static_cast<double>(msb - 52) + std::log2(top.convert_to<double>());
}

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt power(const BigInt &base, unsigned long exp) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

} // namespace subdiv
