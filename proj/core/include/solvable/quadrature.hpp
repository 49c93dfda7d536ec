#pragma once

#include <array>
#include <functional>

#include "solvable/family.hpp"

namespace solvable::oracle {

struct QuadratureResult {
  double value = 0.0;
  /// |I_d - I_{d-1}| of the final panel doubling plus the truncated-tail estimate.
  double error_estimate = 0.0;
  double abs_integral = 0.0;  ///< integral of |f|, the scale of the tolerance
  int panels = 0;
  long nodes = 0;
};

/// Composite 16-point Gauss-Legendre on geometrically graded panels. Infinite
/// ends get panels [c + 2^k, c + 2^(k+1)]; finite ends get dyadic panels that
/// shrink toward the endpoint. The window grows until the outermost panels
/// and probes are negligible, then every panel is halved until successive
/// values agree. Converged means error_estimate <= tol * max(1, abs_integral).
/// Throws QuadratureNoConverge past 2^20 nodes. f is never evaluated at an
/// endpoint.
QuadratureResult integrate(const std::function<double(double)>& f, const Interval& interval, double tol = 1e-12);

/// The 16 Gauss-Legendre nodes and weights on [-1, 1].
const std::array<double, 16>& gauss_legendre_nodes();
const std::array<double, 16>& gauss_legendre_weights();

}  // namespace solvable::oracle
