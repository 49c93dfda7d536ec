#include <algorithm>
#include <cmath>

#include "solvable/error.hpp"
#include "solvable/expr.hpp"

namespace solvable::ir {

namespace {

using K = Expr::Kind;

bool less_expr(const Expr& a, const Expr& b) { return compare(a, b) < 0; }

std::vector<Expr> flatten(K kind, std::vector<Expr> items) {
  std::vector<Expr> out;
  out.reserve(items.size());
  for (auto& it : items) {
    if (it.kind() == kind) {
      for (const auto& a : it.args()) out.push_back(a);
    } else {
      out.push_back(std::move(it));
    }
  }
  return out;
}

// Splits c * rest into (c, rest).
std::pair<double, Expr> split_coefficient(const Expr& term) {
  if (term.kind() == K::Mul && term.arg(0).is_const()) {
    std::vector<Expr> rest(term.args().begin() + 1, term.args().end());
    return {term.arg(0).value(), Expr::product(std::move(rest))};
  }
  return {1.0, term};
}

Expr scaled(double c, const Expr& rest) {
  if (c == 1.0) return rest;
  if (rest.kind() == K::Mul) {
    std::vector<Expr> f;
    f.reserve(rest.args().size() + 1);
    f.push_back(Expr::constant(c));
    for (const auto& a : rest.args()) f.push_back(a);
    return Expr::product(std::move(f));
  }
  return Expr::product({Expr::constant(c), rest});
}

Expr simplify_once(const Expr& e);

Expr simplify_add(const Expr& e) {
  std::vector<Expr> kids;
  kids.reserve(e.args().size());
  for (const auto& a : e.args()) kids.push_back(simplify_once(a));
  kids = flatten(K::Add, std::move(kids));

  double constant = 0.0;
  std::vector<std::pair<Expr, double>> groups;
  for (const auto& t : kids) {
    if (t.is_const()) {
      constant += t.value();
      continue;
    }
    auto [c, rest] = split_coefficient(t);
    groups.emplace_back(std::move(rest), c);
  }
  std::stable_sort(groups.begin(), groups.end(),
                   [](const auto& a, const auto& b) { return less_expr(a.first, b.first); });

  std::vector<Expr> terms;
  if (constant != 0.0) terms.push_back(Expr::constant(constant));
  for (std::size_t i = 0; i < groups.size();) {
    std::size_t j = i;
    double c = 0.0;
    while (j < groups.size() && compare(groups[j].first, groups[i].first) == 0) c += groups[j++].second;
    if (c != 0.0) terms.push_back(scaled(c, groups[i].first));
    i = j;
  }
  if (terms.empty()) return Expr::constant(0.0);
  return Expr::sum(std::move(terms));
}

Expr simplify_pow(const Expr& base, const Rational& q);

Expr simplify_mul(const Expr& e) {
  std::vector<Expr> kids;
  kids.reserve(e.args().size());
  for (const auto& a : e.args()) kids.push_back(simplify_once(a));
  kids = flatten(K::Mul, std::move(kids));

  double c = 1.0;
  std::vector<Expr> exp_args;
  std::vector<std::pair<Expr, Rational>> bases;
  for (const auto& f : kids) {
    switch (f.kind()) {
      case K::Const: c *= f.value(); break;
      case K::Exp: exp_args.push_back(f.arg()); break;
      case K::Pow: bases.emplace_back(f.arg(), f.exponent()); break;
      default: bases.emplace_back(f, Rational(1)); break;
    }
  }
  if (c == 0.0) return Expr::constant(0.0);

  std::vector<Expr> factors;
  if (!exp_args.empty()) {
    const Expr merged = simplify_once(Expr::sum(std::move(exp_args)));
    if (merged.is_const()) {
      c *= std::exp(merged.value());
    } else {
      factors.push_back(Expr::exp(merged));
    }
  }

  std::stable_sort(bases.begin(), bases.end(),
                   [](const auto& a, const auto& b) { return less_expr(a.first, b.first); });
  for (std::size_t i = 0; i < bases.size();) {
    std::size_t j = i;
    Rational q(0);
    while (j < bases.size() && compare(bases[j].first, bases[i].first) == 0) q = q + bases[j++].second;
    if (q.num() != 0) {
      Expr f = q == Rational(1) ? bases[i].first : simplify_pow(bases[i].first, q);
      if (f.is_const()) {
        c *= f.value();
      } else {
        factors.push_back(std::move(f));
      }
    }
    i = j;
  }
  factors = flatten(K::Mul, std::move(factors));
  std::vector<Expr> rest;
  for (auto& f : factors) {
    if (f.is_const()) {
      c *= f.value();
    } else {
      rest.push_back(std::move(f));
    }
  }
  if (c == 0.0) return Expr::constant(0.0);
  std::stable_sort(rest.begin(), rest.end(), less_expr);

  if (rest.empty()) return Expr::constant(c);
  // c * (a + b) -> c*a + c*b, so constant multiples of sums collect as like terms.
  if (rest.size() == 1 && rest.front().kind() == K::Add && c != 1.0) {
    std::vector<Expr> terms;
    for (const auto& t : rest.front().args()) terms.push_back(Expr::product({Expr::constant(c), t}));
    return simplify_add(Expr::sum(std::move(terms)));
  }
  if (c != 1.0) rest.insert(rest.begin(), Expr::constant(c));
  return Expr::product(std::move(rest));
}

Expr simplify_pow(const Expr& base, const Rational& q) {
  if (q.num() == 0) return Expr::constant(1.0);
  if (q == Rational(1)) return base;
  switch (base.kind()) {
    case K::Const: {
      const double b = base.value();
      if (b > 0.0 || (q.is_integer() && b != 0.0) || (b == 0.0 && q.num() > 0)) {
        if (q.is_integer()) return Expr::constant(std::pow(b, static_cast<double>(q.num())));
        return Expr::constant(std::pow(b, q.to_double()));
      }
      break;
    }
    case K::Pow: {
      // (v^p)^q = v^(pq) when q is an integer or p has an odd numerator; for
      // (v^2)^(1/2) = |v| it would not hold.
      const Rational& p = base.exponent();
      if (q.is_integer() || p.num() % 2 != 0) return simplify_pow(base.arg(), p * q);
      break;
    }
    case K::Mul:
      if (q.is_integer()) {
        std::vector<Expr> f;
        for (const auto& a : base.args()) f.push_back(Expr::pow(a, q));
        return simplify_mul(Expr::product(std::move(f)));
      }
      break;
    case K::Exp:
      return Expr::exp(simplify_once(Expr::product({Expr::constant(q.to_double()), base.arg()})));
    default:
      break;
  }
  return Expr::pow(base, q);
}

Expr fold_func(Fn fn, double u, const Expr& fallback) {
  try {
    return Expr::constant(evaluate(Expr::func(fn, Expr::constant(u)), 0.0));
  } catch (const DomainError&) {
    return fallback;
  }
}

Expr simplify_once(const Expr& e) {
  switch (e.kind()) {
    case K::Const:
    case K::Var:
      return e;
    case K::Add:
      return simplify_add(e);
    case K::Mul:
      return simplify_mul(e);
    case K::Pow:
      return simplify_pow(simplify_once(e.arg()), e.exponent());
    case K::Exp: {
      const Expr a = simplify_once(e.arg());
      if (a.is_const()) return Expr::constant(std::exp(a.value()));
      if (a.kind() == K::Func && a.fn() == Fn::Log) return a.arg();
      return Expr::exp(a);
    }
    case K::Func: {
      const Expr a = simplify_once(e.arg());
      const Expr rebuilt = Expr::func(e.fn(), a);
      if (a.is_const()) return fold_func(e.fn(), a.value(), rebuilt);
      if (e.fn() == Fn::Log && a.kind() == K::Exp) return a.arg();
      return rebuilt;
    }
    case K::Poly: {
      const Expr a = simplify_once(e.arg());
      std::vector<double> c(e.coeffs().begin(), e.coeffs().end());
      if (a.is_const()) {
        double acc = 0.0;
        for (std::size_t j = c.size(); j-- > 0;) acc = acc * a.value() + c[j];
        return Expr::constant(acc);
      }
      return Expr::polynomial(std::move(c), a);
    }
  }
  return e;
}

constexpr std::size_t kExpandTermCap = 4096;

Expr multiply_out(const std::vector<Expr>& factors) {
  // Cartesian product of the sums among `factors`.
  std::vector<std::vector<Expr>> acc{{}};
  for (const auto& f : factors) {
    const std::vector<Expr> parts =
        f.kind() == K::Add ? std::vector<Expr>(f.args().begin(), f.args().end()) : std::vector<Expr>{f};
    std::vector<std::vector<Expr>> next;
    next.reserve(acc.size() * parts.size());
    for (const auto& prefix : acc) {
      for (const auto& p : parts) {
        auto v = prefix;
        v.push_back(p);
        next.push_back(std::move(v));
      }
    }
    acc = std::move(next);
  }
  std::vector<Expr> terms;
  terms.reserve(acc.size());
  for (auto& v : acc) terms.push_back(Expr::product(std::move(v)));
  return Expr::sum(std::move(terms));
}

Expr expand_rec(const Expr& e) {
  switch (e.kind()) {
    case K::Add: {
      std::vector<Expr> t;
      for (const auto& a : e.args()) t.push_back(expand_rec(a));
      return simplify_once(Expr::sum(std::move(t)));
    }
    case K::Mul: {
      std::vector<Expr> f;
      std::size_t combos = 1;
      for (const auto& a : e.args()) {
        f.push_back(expand_rec(a));
        if (f.back().kind() == K::Add) combos *= f.back().args().size();
      }
      if (combos > 1 && combos <= kExpandTermCap) return simplify_once(multiply_out(f));
      return simplify_once(Expr::product(std::move(f)));
    }
    case K::Pow: {
      const Expr b = expand_rec(e.arg());
      const Rational& q = e.exponent();
      if (b.kind() == K::Add && q.is_integer() && q.num() >= 2 && q.num() <= 6) {
        std::vector<Expr> f(static_cast<std::size_t>(q.num()), b);
        std::size_t combos = 1;
        for (std::int64_t i = 0; i < q.num(); ++i) combos *= b.args().size();
        if (combos <= kExpandTermCap) return simplify_once(multiply_out(f));
      }
      return simplify_pow(b, q);
    }
    case K::Exp: return simplify_once(Expr::exp(expand_rec(e.arg())));
    case K::Func: return simplify_once(Expr::func(e.fn(), expand_rec(e.arg())));
    case K::Poly:
      return simplify_once(
          Expr::polynomial(std::vector<double>(e.coeffs().begin(), e.coeffs().end()), expand_rec(e.arg())));
    default: return e;
  }
}

template <class Step>
Expr fixpoint(const Expr& e, Step step) {
  Expr cur = step(e);
  for (int i = 0; i < 32; ++i) {
    Expr next = step(cur);
    if (structurally_equal(next, cur)) return cur;
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

Expr simplify(const Expr& e) { return fixpoint(e, simplify_once); }

Expr expand(const Expr& e) { return simplify(fixpoint(e, expand_rec)); }

}  // namespace solvable::ir
