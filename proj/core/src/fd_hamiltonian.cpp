#include "solvable/fd_hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace solvable::oracle {

FDHamiltonian::FDHamiltonian(const std::function<double(double)>& potential, double lo, double hi, int n,
                             std::optional<double> left_robin)
    : lo_(lo), hi_(hi), h_((hi - lo) / n), n_(n) {
  if (n < 16) throw std::invalid_argument("finite-difference grid needs N >= 16");
  if (!(lo < hi)) throw std::invalid_argument("finite-difference grid needs lo < hi");
  const double inv_h2 = 1.0 / (h_ * h_);
  const int first = left_robin ? 0 : 1;
  for (int i = first; i <= n - 1; ++i) {
    const double x = lo + i * h_;
    const double v = potential(x);
    if (!std::isfinite(v)) throw std::invalid_argument("potential is not finite at x=" + std::to_string(x));
    diag_.push_back(2.0 * inv_h2 + v);
  }
  off_.assign(diag_.size() - 1, -inv_h2);
  if (left_robin) {
    diag_[0] += 2.0 * h_ * *left_robin * inv_h2;
    off_[0] = -std::numbers::sqrt2 * inv_h2;
  }
  gersh_lo_ = std::numeric_limits<double>::infinity();
  gersh_hi_ = -gersh_lo_;
  for (std::size_t i = 0; i < diag_.size(); ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(off_[i - 1]);
    if (i < off_.size()) r += std::abs(off_[i]);
    gersh_lo_ = std::min(gersh_lo_, diag_[i] - r);
    gersh_hi_ = std::max(gersh_hi_, diag_[i] + r);
  }
}

int FDHamiltonian::sturm_count(double e) const {
  int count = 0;
  double d = 1.0;
  const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  for (std::size_t i = 0; i < diag_.size(); ++i) {
    const double b2 = i > 0 ? off_[i - 1] * off_[i - 1] : 0.0;
    d = diag_[i] - e - (i > 0 ? b2 / d : 0.0);
    if (d == 0.0) d = -tiny;
    if (d < 0.0) ++count;
  }
  return count;
}

double FDHamiltonian::eigenvalue(int index) const {
  if (index < 0 || static_cast<std::size_t>(index) >= diag_.size())
    throw std::out_of_range("eigenvalue index out of range");
  double a = gersh_lo_, b = gersh_hi_;
  // Invariant: count(a) <= index < count(b).
  while (b - a > 1e-10 * std::max(1.0, std::max(std::abs(a), std::abs(b)))) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    if (sturm_count(mid) > index)
      b = mid;
    else
      a = mid;
  }
  return 0.5 * (a + b);
}

std::vector<double> eigenvalues_below(const FDHamiltonian& h, double e_max) {
  const int k = h.sturm_count(e_max);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out.push_back(h.eigenvalue(i));
  return out;
}

std::vector<double> lowest_eigenvalues(const FDHamiltonian& h, int count) {
  std::vector<double> out;
  const int k = std::min<int>(count, static_cast<int>(h.size()));
  for (int i = 0; i < k; ++i) out.push_back(h.eigenvalue(i));
  return out;
}

bool contains_eigenvalue_near(const FDHamiltonian& h, double e, double tol) {
  return h.sturm_count(e + tol) - h.sturm_count(e - tol) >= 1;
}

}  // namespace solvable::oracle
