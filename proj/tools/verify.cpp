#include "verify.hpp"

#include <algorithm>
#include <cmath>

#include "solvable/poly.hpp"
#include "solvable/quadrature.hpp"
#include "solvable/schrodinger.hpp"
#include "solvable/specfun.hpp"

namespace solvable::verify {

std::vector<double> interior_grid(const FamilySpec& family, int n) {
  const Interval w = sample_window(family.interval());
  std::vector<double> xs;
  for (int i = 1; i <= n; ++i) xs.push_back(w.lo + (w.hi - w.lo) * i / (n + 1.0));
  return xs;
}

int degree_limit(const FamilySpec& family, int cap) {
  const FamilyCutoff c = cutoff(family);
  return c.max_degree ? std::min(*c.max_degree, cap) : cap;
}

double hm_eigen_residual(const FamilySpec& family, int ell_max) {
  const auto grid = interior_grid(family, 100);
  double worst = 0.0;
  for (int ell = 0; ell <= ell_max; ++ell) {
    const double lambda = eigenvalue(family, ell);
    for (int m = 0; m <= ell; ++m) {
      const HmOperator op(family, m);
      const SmoothFunction f = special_function(family, ell, m).as_function();
      for (const double s : grid) {
        const double target = lambda * f.f(s);
        worst = std::max(worst, std::abs(apply_hm(op, f, s) - target) / (1.0 + std::abs(target)));
      }
    }
  }
  return worst;
}

double rodrigues_deviation(const FamilySpec& family, int ell_max) {
  const auto grid = interior_grid(family, 50);
  double worst = 0.0;
  for (int ell = 0; ell <= ell_max; ++ell) {
    const Poly p = phi(family, ell);
    const Poly r = phi_rodrigues(family, ell);
    double num = 0.0, den = 0.0, scale = 0.0;
    for (const double s : grid) {
      num += r(s) * p(s);
      den += p(s) * p(s);
      scale = std::max(scale, std::abs(r(s)));
    }
    const double c = num / den;
    double dev = 0.0;
    for (const double s : grid) dev = std::max(dev, std::abs(r(s) - c * p(s)));
    worst = std::max(worst, scale > 0.0 ? dev / scale : dev);
  }
  return worst;
}

std::vector<OrthogonalityEntry> orthogonality(const FamilySpec& family, int m_max, int ell_max) {
  std::vector<OrthogonalityEntry> out;
  const VariableMap map(family);
  for (int m = 0; m <= std::min(m_max, ell_max); ++m) {
    std::vector<SpecialFunction> fns;
    for (int ell = m; ell <= ell_max; ++ell) fns.push_back(special_function(family, ell, m));
    auto s_inner = [&](const SpecialFunction& a, const SpecialFunction& b) {
      return scalar_product(
                 family, [&](double s) { return a.value(s); }, [&](double s) { return b.value(s); })
          .value;
    };
    auto x_inner = [&](const SpecialFunction& a, const SpecialFunction& b) {
      return oracle::integrate(
                 [&](double x) { return wavefunction_value(family, a, x) * wavefunction_value(family, b, x); },
                 map.image(), 1e-12)
          .value;
    };
    std::vector<double> s_norm, x_norm;
    for (const auto& f : fns) {
      s_norm.push_back(std::sqrt(s_inner(f, f)));
      x_norm.push_back(std::sqrt(x_inner(f, f)));
    }
    for (std::size_t i = 0; i < fns.size(); ++i)
      for (std::size_t j = i + 1; j < fns.size(); ++j) {
        OrthogonalityEntry e{m, fns[i].ell(), fns[j].ell(), 0.0, 0.0};
        e.s_space = s_inner(fns[i], fns[j]) / (s_norm[i] * s_norm[j]);
        e.x_space = x_inner(fns[i], fns[j]) / (x_norm[i] * x_norm[j]);
        out.push_back(e);
      }
  }
  return out;
}

OrthogonalitySummary summarize(const std::vector<OrthogonalityEntry>& entries) {
  OrthogonalitySummary s;
  for (const auto& e : entries) {
    s.s_worst = std::max(s.s_worst, std::abs(e.s_space));
    s.x_worst = std::max(s.x_worst, std::abs(e.x_space));
    s.disagreement = std::max(s.disagreement, std::abs(e.s_space - e.x_space));
    ++s.pairs;
  }
  return s;
}

}  // namespace solvable::verify
