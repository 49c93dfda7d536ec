#pragma once

// Numerical checks shared by the CLI and the acceptance runner.

#include <vector>

#include "solvable/family.hpp"

namespace solvable::verify {

/// n interior points of the family's sampling window, endpoints excluded.
std::vector<double> interior_grid(const FamilySpec& family, int n);

/// Highest degree to test: min(L, cap) for bounded families, cap otherwise.
int degree_limit(const FamilySpec& family, int cap);

/// max over l <= ell_max, m <= l and 100 points of
/// |H_m Phi_{l,m} - lambda_l Phi_{l,m}| / (1 + |lambda_l Phi_{l,m}|).
double hm_eigen_residual(const FamilySpec& family, int ell_max);

/// max over l <= ell_max of max|R - c phi| / max|R| at 50 points, R the
/// Rodrigues polynomial and c its least-squares constant.
double rodrigues_deviation(const FamilySpec& family, int ell_max);

struct OrthogonalityEntry {
  int m;
  int ell;
  int k;
  double s_space;  ///< <Phi_{l,m}, Phi_{k,m}> / (|Phi_{l,m}| |Phi_{k,m}|)
  double x_space;  ///< same with Psi_{l,m}, Psi_{k,m} over the image interval
};

/// Normalized overlaps for m <= m_max and m <= l < k <= ell_max.
std::vector<OrthogonalityEntry> orthogonality(const FamilySpec& family, int m_max, int ell_max);

struct OrthogonalitySummary {
  double s_worst = 0.0;
  double x_worst = 0.0;
  double disagreement = 0.0;  ///< max |s_space - x_space|
  int pairs = 0;
};

OrthogonalitySummary summarize(const std::vector<OrthogonalityEntry>& entries);

}  // namespace solvable::verify
