#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "cli.hpp"

namespace solvable::test {

inline std::mt19937_64 rng() { return std::mt19937_64(cli::default_seed()); }

inline std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(a + (b - a) * i / (n - 1.0));
  return v;
}

/// n points strictly inside (a, b).
inline std::vector<double> interior(double a, double b, int n) {
  std::vector<double> v;
  for (int i = 1; i <= n; ++i) v.push_back(a + (b - a) * i / (n + 1.0));
  return v;
}

inline double rel_err(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

}  // namespace solvable::test
