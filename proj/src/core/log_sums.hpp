#pragma once

#include <cmath>
#include <span>

namespace meanratio::detail {

// Accumulate in long double; on x86-64 this is the 80-bit extended format.

inline long double sum(std::span<const double> xs) {
  long double acc = 0.0L;
  for (double x : xs) acc += x;
  return acc;
}

inline long double sum_logs(std::span<const double> xs) {
  long double acc = 0.0L;
  for (double x : xs) acc += std::log(static_cast<long double>(x));
  return acc;
}

// log(exp(a) + exp(b)) without overflow.
inline long double log_add_exp(long double a, long double b) {
  if (a < b) std::swap(a, b);
  if (std::isinf(b) && b < 0) return a;
  return a + std::log1p(std::exp(b - a));
}

}  // namespace meanratio::detail
