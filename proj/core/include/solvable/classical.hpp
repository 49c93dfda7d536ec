#pragma once

#include "solvable/poly.hpp"

// Classical orthogonal polynomials by three-term recurrence, in the usual
// normalizations: physicists' Hermite H_n, generalized Laguerre L_n^(p),
// Jacobi P_n^(p,q).

namespace solvable::classical {

double hermite(int n, double x);
double laguerre(int n, double p, double x);
/// Falls back to the explicit binomial sum when the recurrence denominator
/// vanishes for exceptional (p, q).
double jacobi(int n, double p, double q, double x);

/// H_n in the power basis.
Poly hermite_poly(int n);

}  // namespace solvable::classical
