#include "solvable/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "solvable/error.hpp"

namespace solvable::oracle {

namespace {

struct Rule {
  std::array<double, 16> x{};
  std::array<double, 16> w{};
};

Rule make_rule() {
  Rule r;
  constexpr int n = 16;
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    r.x[static_cast<std::size_t>(i)] = z;
    r.w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return r;
}

const Rule& rule() {
  static const Rule r = make_rule();
  return r;
}

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double abs_value = 0.0;
  double max_abs = 0.0;
  double probe_a = 0.0;  ///< |f| at the node closest to a
  double probe_b = 0.0;  ///< |f| at the node closest to b
};

Panel eval_panel(const std::function<double(double)>& f, double a, double b) {
  const Rule& r = rule();
  Panel p{a, b};
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  for (std::size_t i = 0; i < 16; ++i) {
    const double fx = f(c + h * r.x[i]);
    if (!std::isfinite(fx)) throw QuadratureNoConverge("integrand is not finite at " + std::to_string(c + h * r.x[i]));
    p.value += r.w[i] * fx;
    p.abs_value += r.w[i] * std::abs(fx);
    p.max_abs = std::max(p.max_abs, std::abs(fx));
  }
  // Nodes are ordered from +1 down to -1.
  p.probe_b = std::abs(f(c + h * r.x[0]));
  p.probe_a = std::abs(f(c + h * r.x[15]));
  p.value *= h;
  p.abs_value *= std::abs(h);
  return p;
}

double sum_subdivided(const std::function<double(double)>& f, double a, double b, int parts, double& abs_acc) {
  const Rule& r = rule();
  double acc = 0.0;
  const double w = (b - a) / parts;
  for (int k = 0; k < parts; ++k) {
    const double lo = a + k * w;
    const double c = lo + 0.5 * w, h = 0.5 * w;
    double s = 0.0, sa = 0.0;
    for (std::size_t i = 0; i < 16; ++i) {
      const double fx = f(c + h * r.x[i]);
      if (!std::isfinite(fx)) throw QuadratureNoConverge("integrand is not finite at " + std::to_string(c + h * r.x[i]));
      s += r.w[i] * fx;
      sa += r.w[i] * std::abs(fx);
    }
    acc += h * s;
    abs_acc += h * sa;
  }
  return acc;
}

constexpr int kMaxOutward = 60;
constexpr int kMaxGrading = 100;
constexpr long kMaxNodes = 1L << 20;

// One end of the integration window.
struct End {
  enum Kind { Graded, Outward } kind;
  int dir;             ///< -1 for the lower end, +1 for the upper end
  double anchor;       ///< finite endpoint, or the origin of the outward panels
  std::size_t index;   ///< current innermost (Graded) or outermost (Outward) panel
  int steps = 0;
};

}  // namespace

const std::array<double, 16>& gauss_legendre_nodes() { return rule().x; }
const std::array<double, 16>& gauss_legendre_weights() { return rule().w; }

QuadratureResult integrate(const std::function<double(double)>& f, const Interval& iv, double tol) {
  if (!(iv.lo < iv.hi)) throw QuadratureNoConverge("empty integration interval");
  std::vector<Panel> panels;
  std::vector<End> ends;

  auto add = [&](double a, double b) {
    panels.push_back(eval_panel(f, a, b));
    return panels.size() - 1;
  };

  // Core region and the two ends.
  double core_lo = 0.0, core_hi = 0.0;
  if (iv.lo_finite() && iv.hi_finite()) {
    core_lo = iv.lo;
    core_hi = iv.hi;
  } else if (iv.lo_finite()) {
    core_lo = iv.lo;
    core_hi = iv.lo + 1.0;
  } else if (iv.hi_finite()) {
    core_lo = iv.hi - 1.0;
    core_hi = iv.hi;
  } else {
    core_lo = -1.0;
    core_hi = 1.0;
  }
  const double mid = 0.5 * (core_lo + core_hi);
  const double quarter = 0.25 * (core_hi - core_lo);
  add(mid - quarter, mid);
  add(mid, mid + quarter);

  if (iv.lo_finite()) {
    ends.push_back({End::Graded, -1, iv.lo, add(iv.lo, mid - quarter)});
  } else {
    add(core_lo, mid - quarter);
    std::size_t last = 0;
    for (int k = 0; k < 3; ++k) last = add(core_lo - std::ldexp(1.0, k + 1) + 1.0, core_lo - std::ldexp(1.0, k) + 1.0);
    ends.push_back({End::Outward, -1, core_lo, last, 3});
  }
  if (iv.hi_finite()) {
    ends.push_back({End::Graded, +1, iv.hi, add(mid + quarter, iv.hi)});
  } else {
    add(mid + quarter, core_hi);
    std::size_t last = 0;
    for (int k = 0; k < 3; ++k) last = add(core_hi + std::ldexp(1.0, k) - 1.0, core_hi + std::ldexp(1.0, k + 1) - 1.0);
    ends.push_back({End::Outward, +1, core_hi, last, 3});
  }

  auto totals = [&](double& value, double& abs_value, double& max_abs) {
    value = abs_value = max_abs = 0.0;
    for (const Panel& p : panels) {
      value += p.value;
      abs_value += p.abs_value;
      max_abs = std::max(max_abs, p.max_abs);
    }
  };

  // Grow the window until the end panels carry negligible weight.
  for (;;) {
    double value, abs_value, max_abs;
    totals(value, abs_value, max_abs);
    const double scale = std::max(1.0, abs_value);
    bool changed = false;
    for (End& e : ends) {
      const Panel p = panels[e.index];
      if (e.kind == End::Graded) {
        if (e.steps >= kMaxGrading || p.abs_value <= 0.125 * tol * scale) continue;
        const double inner_w = 0.5 * (p.b - p.a);
        if (inner_w <= std::abs(e.anchor) * 1e-15 || inner_w < 1e-300) continue;
        const double split = 0.5 * (p.a + p.b);
        if (e.dir < 0) {
          panels[e.index] = eval_panel(f, p.a, split);
          add(split, p.b);
        } else {
          panels[e.index] = eval_panel(f, split, p.b);
          add(p.a, split);
        }
        ++e.steps;
        changed = true;
      } else {
        const double edge_probe = e.dir < 0 ? p.probe_a : p.probe_b;
        const bool heavy = p.abs_value > 0.125 * tol * scale;
        const bool probe_big = edge_probe > 1e-14 * max_abs;
        if (e.steps >= kMaxOutward || (!heavy && !probe_big)) continue;
        const double w = p.b - p.a;
        e.index = e.dir < 0 ? add(p.a - 2.0 * w, p.a) : add(p.b, p.b + 2.0 * w);
        ++e.steps;
        changed = true;
      }
    }
    if (!changed) break;
  }

  double tail = 0.0;
  for (const End& e : ends)
    if (e.kind == End::Outward) tail += panels[e.index].abs_value;

  double prev = 0.0, prev_abs = 0.0, dummy = 0.0;
  totals(prev, prev_abs, dummy);
  QuadratureResult out;
  out.panels = static_cast<int>(panels.size());
  for (int parts = 2;; parts *= 2) {
    const long nodes = static_cast<long>(panels.size()) * parts * 16;
    if (nodes > kMaxNodes)
      throw QuadratureNoConverge("quadrature did not converge within " + std::to_string(kMaxNodes) + " nodes");
    double value = 0.0, abs_value = 0.0;
    for (const Panel& p : panels) value += sum_subdivided(f, p.a, p.b, parts, abs_value);
    const double scale = std::max(1.0, abs_value);
    const double delta = std::abs(value - prev);
    out = {value, delta + tail, abs_value, static_cast<int>(panels.size()), nodes};
    if (delta <= 0.5 * tol * scale) {
      if (out.error_estimate > tol * scale)
        throw QuadratureNoConverge("truncated tail " + std::to_string(tail) + " exceeds the tolerance");
      return out;
    }
    prev = value;
  }
}

}  // namespace solvable::oracle
