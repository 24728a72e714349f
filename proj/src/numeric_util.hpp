#pragma once

#include <array>
#include <cmath>

namespace monogenica::detail {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr int kLogFactorialTableSize = 512;

/// log(n!) for 0 <= n < kLogFactorialTableSize, tabulated once.
inline double log_factorial(int n) {
  static const std::array<double, kLogFactorialTableSize> table = [] {
    std::array<double, kLogFactorialTableSize> t{};
    long double acc = 0.0L;
    t[0] = 0.0;
    for (int i = 1; i < kLogFactorialTableSize; ++i) {
      acc += std::log(static_cast<long double>(i));
      t[i] = static_cast<double>(acc);
    }
    return t;
  }();
  return table[n];
}

inline double power_of_two(int e) { return std::ldexp(1.0, e); }

}  // namespace monogenica::detail
