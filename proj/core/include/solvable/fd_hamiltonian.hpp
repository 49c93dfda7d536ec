#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace solvable::oracle {

/// Three-point finite-difference discretization of -d^2/dx^2 + V(x) on
/// [lo, hi] with h = (hi - lo)/N. Dirichlet at both ends by default: the
/// unknowns are x_i = lo + i h, i = 1..N-1, with diagonal 2/h^2 + V(x_i) and
/// off-diagonal -1/h^2.
///
/// With a left Robin condition psi'(lo) = g psi(lo) the node x_0 = lo becomes
/// an unknown; a ghost node eliminates psi_{-1} and the first row is
/// symmetrized, giving d_0 = (2 + 2 h g)/h^2 + V(lo) and e_0 = -sqrt(2)/h^2.
class FDHamiltonian {
 public:
  FDHamiltonian(const std::function<double(double)>& potential, double lo, double hi, int n,
                std::optional<double> left_robin = std::nullopt);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  int intervals() const noexcept { return n_; }
  double step() const noexcept { return h_; }
  std::size_t size() const noexcept { return diag_.size(); }
  const std::vector<double>& diagonal() const noexcept { return diag_; }
  const std::vector<double>& off_diagonal() const noexcept { return off_; }

  /// Number of eigenvalues strictly below e (sign count of the LDL^T pivots).
  int sturm_count(double e) const;

  /// Gershgorin bounds on the spectrum.
  double lower_bound() const noexcept { return gersh_lo_; }
  double upper_bound() const noexcept { return gersh_hi_; }

  /// The index-th eigenvalue (0-based) by bisection to 1e-10 * max(1, |E|).
  double eigenvalue(int index) const;

 private:
  double lo_, hi_, h_;
  int n_;
  std::vector<double> diag_;
  std::vector<double> off_;
  double gersh_lo_ = 0.0, gersh_hi_ = 0.0;
};

/// All eigenvalues below e_max, ascending. Requires N >= 16.
std::vector<double> eigenvalues_below(const FDHamiltonian& h, double e_max);

/// The `count` lowest eigenvalues, ascending.
std::vector<double> lowest_eigenvalues(const FDHamiltonian& h, int count);

/// True when at least one eigenvalue lies in [e - tol, e + tol).
bool contains_eigenvalue_near(const FDHamiltonian& h, double e, double tol);

/// Richardson extrapolation of an O(h^2) quantity from grids N and 2N.
inline double richardson(double e_n, double e_2n) { return (4.0 * e_2n - e_n) / 3.0; }

}  // namespace solvable::oracle
