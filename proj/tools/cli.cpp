#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "acceptance.hpp"
#include "format.hpp"
#include "solvable/error.hpp"
#include "solvable/fd_hamiltonian.hpp"
#include "solvable/generator.hpp"
#include "solvable/poly.hpp"
#include "solvable/schrodinger.hpp"
#include "solvable/specfun.hpp"
#include "verify.hpp"

namespace solvable::cli {

namespace {

using fmt::json_num;
using fmt::num;
using nlohmann::json;

std::vector<std::string> family_names() {
  std::vector<std::string> v;
  for (const SigmaCase c : kAllSigmaCases) {
    v.emplace_back(sigma_cli_name(c));
    v.emplace_back(sigma_label(c));
  }
  return v;
}

struct FamilyOpts {
  std::string family;
  double alpha = NAN;
  double beta = NAN;

  void add(CLI::App* app, bool required = true) {
    auto* f = app->add_option("--family", family, "sigma case: one, s, one-minus-s2, s2-minus-1, s2, s2-plus-1")
                  ->check(CLI::IsMember(family_names()));
    auto* a = app->add_option("--alpha", alpha, "slope of tau(s) = alpha s + beta");
    auto* b = app->add_option("--beta", beta, "intercept of tau");
    if (required) {
      f->required();
      a->required();
      b->required();
    }
  }

  FamilySpec spec() const { return FamilySpec(*parse_sigma_case(family), alpha, beta); }
};

struct GridOpts {
  int grid = 201;
  std::optional<double> lo;
  std::optional<double> hi;

  void add(CLI::App* app, const std::string& var, int default_grid) {
    grid = default_grid;
    app->add_option("--grid", grid, "number of grid points")->check(CLI::Range(2, 10000000));
    app->add_option("--" + var + "min", lo, "left end of the grid");
    app->add_option("--" + var + "max", hi, "right end of the grid");
  }

  std::vector<double> points(const Interval& window) const {
    const double a = lo.value_or(window.lo), b = hi.value_or(window.hi);
    std::vector<double> xs;
    for (int i = 0; i < grid; ++i) xs.push_back(a + (b - a) * i / (grid - 1.0));
    return xs;
  }
};

json interval_json(const Interval& iv) { return json::array({json_num(iv.lo), json_num(iv.hi)}); }

void csv_header(std::ostream& out, std::initializer_list<const char*> cols) {
  bool first = true;
  for (const char* c : cols) {
    out << (first ? "" : ",") << c;
    first = false;
  }
  out << '\n';
}

int parse_branch(const std::string& b) {
  if (b == "+" || b == "plus" || b == "+1" || b == "1") return 1;
  if (b == "-" || b == "minus" || b == "-1") return -1;
  throw CLI::ValidationError("--branch", "expected + or -");
}

}  // namespace

unsigned long long default_seed() {
  if (const char* env = std::getenv("SOLVABLE_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 42;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exactly solvable Schroedinger systems from hypergeometric-type equations", "solvable"};
  app.require_subcommand(1);
  unsigned long long seed = default_seed();
  app.add_option("--seed", seed, "seed for randomized checks (default 42, or SOLVABLE_SEED)");

  // families
  auto* families = app.add_subcommand("families", "list the six families, or describe one parameter choice");
  FamilyOpts fam_opts;
  fam_opts.add(families, false);

  // poly
  auto* poly = app.add_subcommand("poly", "coefficients of the monic polynomial Phi_l as CSV ell,j,c_j");
  FamilyOpts poly_fam;
  poly_fam.add(poly);
  int poly_ell = 0;
  bool poly_all = false, poly_rodrigues = false;
  poly->add_option("--ell", poly_ell, "degree")->required()->check(CLI::NonNegativeNumber);
  poly->add_flag("--all", poly_all, "emit every degree 0..ell");
  poly->add_flag("--rodrigues", poly_rodrigues, "use the unnormalized Rodrigues formula instead");

  // specfun eval
  auto* specfun = app.add_subcommand("specfun", "associated special functions");
  specfun->require_subcommand(1);
  auto* sf_eval = specfun->add_subcommand("eval", "Phi_{l,m}(s) on a grid as CSV s,value");
  FamilyOpts sf_fam;
  sf_fam.add(sf_eval);
  int sf_ell = 0, sf_m = 0;
  GridOpts sf_grid;
  sf_eval->add_option("--ell", sf_ell)->required()->check(CLI::NonNegativeNumber);
  sf_eval->add_option("--m", sf_m)->required()->check(CLI::NonNegativeNumber);
  sf_grid.add(sf_eval, "s", 101);

  // potential
  auto* pot = app.add_subcommand("potential", "V_m(x) on a grid as CSV x,V");
  FamilyOpts pot_fam;
  pot_fam.add(pot);
  int pot_m = 0;
  GridOpts pot_grid;
  pot->add_option("--m", pot_m)->required()->check(CLI::NonNegativeNumber);
  pot_grid.add(pot, "x", 201);

  // eigenfunction
  auto* eig = app.add_subcommand("eigenfunction", "Psi_{l,m}(x) on a grid as CSV x,psi");
  FamilyOpts eig_fam;
  eig_fam.add(eig);
  int eig_ell = 0, eig_m = 0;
  GridOpts eig_grid;
  eig->add_option("--ell", eig_ell)->required()->check(CLI::NonNegativeNumber);
  eig->add_option("--m", eig_m)->required()->check(CLI::NonNegativeNumber);
  eig_grid.add(eig, "x", 201);

  // generate
  auto* generate = app.add_subcommand("generate", "closed-form eigenpair of a generated system as JSON");
  double gen_c1 = 0.0, gen_c2 = 0.0;
  int gen_n = 0;
  std::string gen_branch = "+", gen_which = "cuberoot";
  generate->add_option("--c1", gen_c1)->required();
  generate->add_option("--c2", gen_c2)->required();
  generate->add_option("--n", gen_n)->required()->check(CLI::NonNegativeNumber);
  generate->add_option("--branch", gen_branch, "+ or - (cube-root system)")->check(CLI::IsMember({"+", "-", "plus", "minus", "+1", "-1", "1"}));
  generate->add_option("--which", gen_which, "cuberoot: c1 (3r/2)^(2/3) + c2 (2/(3r))^(2/3) - 5/(36r^2); sqrt: c1/sqrt(2r) + c2/(2r) - 3/(16r^2)")
      ->check(CLI::IsMember({"cuberoot", "sqrt"}));

  // solve-params
  auto* solve = app.add_subcommand("solve-params", "all parameter solutions with admissibility flags as JSON");
  std::string sp_mode;
  double sp_c1 = 0.0, sp_c2 = 0.0;
  int sp_n = 0;
  solve->add_option("--mode", sp_mode)->required()->check(CLI::IsMember({"quantsys", "invsqrt"}));
  solve->add_option("--c1", sp_c1)->required();
  solve->add_option("--c2", sp_c2)->required();
  solve->add_option("--n", sp_n)->required()->check(CLI::NonNegativeNumber);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "numerical oracles");
  verify_cmd->require_subcommand(1);

  auto* v_res = verify_cmd->add_subcommand("residual", "Schroedinger residual on a grid as CSV x,residual");
  std::string vr_system = "family";
  FamilyOpts vr_fam;
  vr_fam.add(v_res, false);
  int vr_ell = 0, vr_m = 0, vr_n = 0, vr_random = 0;
  double vr_c1 = 1.0, vr_c2 = 0.0;
  std::string vr_branch = "+";
  GridOpts vr_grid;
  v_res->add_option("--system", vr_system)->check(CLI::IsMember({"family", "quantsys", "invsqrt"}));
  v_res->add_option("--ell", vr_ell)->check(CLI::NonNegativeNumber);
  v_res->add_option("--m", vr_m)->check(CLI::NonNegativeNumber);
  v_res->add_option("--c1", vr_c1);
  v_res->add_option("--c2", vr_c2);
  v_res->add_option("--n", vr_n)->check(CLI::NonNegativeNumber);
  v_res->add_option("--branch", vr_branch)->check(CLI::IsMember({"+", "-", "plus", "minus", "+1", "-1", "1"}));
  v_res->add_option("--random", vr_random, "sample this many points uniformly at random (uses --seed) instead of a grid")
      ->check(CLI::NonNegativeNumber);
  vr_grid.add(v_res, "x", 101);

  auto* v_spec = verify_cmd->add_subcommand("spectrum", "finite-difference spectrum as CSV index,E_numeric,E_analytic,abs_err");
  std::string vs_system = "family";
  FamilyOpts vs_fam;
  vs_fam.add(v_spec, false);
  int vs_m = 0, vs_grid = 4000, vs_count = 5;
  double vs_c1 = 1.0, vs_c2 = 0.0;
  std::optional<double> vs_xmin, vs_xmax, vs_emax;
  v_spec->add_option("--system", vs_system)->check(CLI::IsMember({"family", "quantsys"}));
  v_spec->add_option("--m", vs_m)->check(CLI::NonNegativeNumber);
  v_spec->add_option("--grid", vs_grid, "number of intervals N")->check(CLI::Range(16, 100000000));
  v_spec->add_option("--count", vs_count, "number of eigenvalues")->check(CLI::Range(1, 1000));
  v_spec->add_option("--emax", vs_emax, "report eigenvalues below this energy instead of --count");
  v_spec->add_option("--xmin", vs_xmin);
  v_spec->add_option("--xmax", vs_xmax);
  v_spec->add_option("--c1", vs_c1);
  v_spec->add_option("--c2", vs_c2);

  auto* v_orth = verify_cmd->add_subcommand("orthogonality", "normalized overlaps as CSV m,ell,k,s_space,x_space");
  FamilyOpts vo_fam;
  vo_fam.add(v_orth);
  int vo_m = 0, vo_ell_max = 4;
  v_orth->add_option("--m", vo_m, "largest order m")->check(CLI::NonNegativeNumber);
  v_orth->add_option("--ell-max", vo_ell_max, "largest degree")->check(CLI::NonNegativeNumber);

  // reproduce-dw
  auto* dw = app.add_subcommand("reproduce-dw", "translated oscillator through the substitution pipeline as JSON");
  double dw_theta = 1.0, dw_rho = 0.0, dw_lambda = -1.0;
  int dw_which = 1;
  dw->add_option("--theta", dw_theta)->required();
  dw->add_option("--rho", dw_rho)->required();
  dw->add_option("--lambda", dw_lambda)->required();
  dw->add_option("--which", dw_which, "1: x = sqrt(2r); 2: x = (3r/2)^(2/3)")->check(CLI::IsMember({1, 2}));

  // acceptance
  auto* acc = app.add_subcommand("acceptance", "run the acceptance criteria; nonzero exit on any failure");
  std::vector<int> acc_only;
  acc->add_option("--criterion", acc_only, "run only these criteria")->check(CLI::Range(1, acceptance::kCriterionCount));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    // Help for a subcommand is reported through the same channel.
    if (e.get_exit_code() == 0) {
      for (auto* sub : app.get_subcommands()) {
        out << sub->help();
        return kOk;
      }
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (families->parsed()) {
      if (fam_opts.family.empty()) {
        json list = json::array();
        for (const SigmaCase c : kAllSigmaCases) {
          json d;
          d["case"] = std::string(sigma_label(c));
          d["name"] = std::string(sigma_cli_name(c));
          const auto co = sigma_coefficients(c);
          d["sigma"] = json::array({json_num(co.a), json_num(co.b), json_num(co.c)});
          d["constraint"] = std::string(sigma_constraint(c));
          const bool bounded = c == SigmaCase::S2Minus1 || c == SigmaCase::S2 || c == SigmaCase::S2Plus1;
          d["Lambda"] = bounded ? "(1-alpha)/2" : "inf";
          list.push_back(d);
        }
        out << list.dump(2) << '\n';
        return kOk;
      }
      if (std::isnan(fam_opts.alpha) || std::isnan(fam_opts.beta)) throw CLI::RequiredError("--alpha and --beta");
      const FamilySpec f = fam_opts.spec();
      const FamilyCutoff cut = cutoff(f);
      json d;
      d["case"] = std::string(sigma_label(f.sigma_case()));
      d["alpha"] = json_num(f.alpha());
      d["beta"] = json_num(f.beta());
      d["interval"] = interval_json(f.interval());
      d["Lambda"] = cut.lambda_cap ? json_num(*cut.lambda_cap) : json("inf");
      d["L"] = cut.max_degree ? json(*cut.max_degree) : json(nullptr);
      out << d.dump() << '\n';
      return kOk;
    }

    if (poly->parsed()) {
      const FamilySpec f = poly_fam.spec();
      csv_header(out, {"ell", "j", "c_j"});
      for (int ell = poly_all ? 0 : poly_ell; ell <= poly_ell; ++ell) {
        const Poly p = poly_rodrigues ? phi_rodrigues(f, ell) : phi(f, ell);
        for (int j = 0; j <= ell; ++j) out << ell << ',' << j << ',' << num(p.coeff(j)) << '\n';
      }
      return kOk;
    }

    if (sf_eval->parsed()) {
      const FamilySpec f = sf_fam.spec();
      const SpecialFunction sf = special_function(f, sf_ell, sf_m);
      csv_header(out, {"s", "value"});
      for (const double s : sf_grid.points(sample_window(f.interval()))) out << num(s) << ',' << num(sf.value(s)) << '\n';
      return kOk;
    }

    if (pot->parsed()) {
      const FamilySpec f = pot_fam.spec();
      const SchrodingerSystem sys = potential(f, pot_m);
      csv_header(out, {"x", "V"});
      for (const double x : pot_grid.points(plot_window(sys.interval())))
        out << num(x) << ',' << num(sys.potential_at(x)) << '\n';
      return kOk;
    }

    if (eig->parsed()) {
      const FamilySpec f = eig_fam.spec();
      const ir::Expr psi = wavefunction(f, eig_ell, eig_m);
      csv_header(out, {"x", "psi"});
      for (const double x : eig_grid.points(plot_window(VariableMap(f).image())))
        out << num(x) << ',' << num(ir::evaluate(psi, x)) << '\n';
      return kOk;
    }

    if (generate->parsed()) {
      json d;
      d["which"] = gen_which;
      d["c1"] = json_num(gen_c1);
      d["c2"] = json_num(gen_c2);
      d["n"] = gen_n;
      try {
        if (gen_which == "cuberoot") {
          const auto p = gen::solve_params_quantsys(gen_c1, gen_c2, gen_n, parse_branch(gen_branch));
          d["branch"] = p.branch > 0 ? "+" : "-";
          d["alpha"] = json_num(p.alpha);
          d["beta"] = json_num(p.beta);
          d["energy"] = json_num(p.energy);
          d["psi_expr"] = ir::to_string(p.psi, "r");
          d["potential_expr"] = ir::to_string(gen::quantsys_potential(gen_c1, gen_c2), "r");
        } else {
          const auto roots = gen::solve_params_inverse_sqrt(gen_c1, gen_c2, gen_n);
          const auto& p = roots.front();
          d["alpha"] = json_num(p.alpha);
          d["beta"] = json_num(p.beta);
          d["energy"] = json_num(p.energy);
          d["psi_expr"] = ir::to_string(p.psi, "r");
          d["potential_expr"] = ir::to_string(gen::inverse_sqrt_potential(gen_c1, gen_c2), "r");
          d["degenerate"] = p.degenerate;
          d["roots"] = roots.size();
        }
        d["admissible"] = true;
        out << d.dump(2) << '\n';
        return kOk;
      } catch (const Error& e) {
        d["admissible"] = false;
        d["reason"] = e.what();
        out << d.dump(2) << '\n';
        err << "error: " << e.what() << '\n';
        return kDomain;
      }
    }

    if (solve->parsed()) {
      json list = json::array();
      if (sp_mode == "quantsys") {
        for (const int branch : {1, -1}) {
          json d;
          d["branch"] = branch > 0 ? "+" : "-";
          try {
            const auto p = gen::solve_params_quantsys(sp_c1, sp_c2, sp_n, branch);
            d["alpha"] = json_num(p.alpha);
            d["beta"] = json_num(p.beta);
            d["energy"] = json_num(p.energy);
            d["admissible"] = true;
          } catch (const Inadmissible& e) {
            d["admissible"] = false;
            d["reason"] = e.what();
          }
          list.push_back(d);
        }
      } else {
        for (const auto& p : gen::inverse_sqrt_candidates(sp_c1, sp_c2, sp_n)) {
          json d;
          d["alpha"] = json_num(p.alpha);
          d["admissible"] = p.admissible;
          d["degenerate"] = p.degenerate;
          if (p.admissible) {
            d["beta"] = json_num(p.beta);
            d["energy"] = json_num(p.energy);
          } else {
            d["reason"] = "alpha<0 is required";
          }
          list.push_back(d);
        }
      }
      out << list.dump(2) << '\n';
      return kOk;
    }

    if (v_res->parsed()) {
      std::vector<double> xs;
      std::function<double(double)> residual;
      Interval window;
      std::optional<SchrodingerSystem> fam_sys;
      std::optional<gen::GeneratedSystem> gsys;
      ir::Expr psi, psi_dd;
      if (vr_system == "family") {
        if (vr_fam.family.empty() || std::isnan(vr_fam.alpha) || std::isnan(vr_fam.beta))
          throw CLI::RequiredError("--family, --alpha and --beta");
        const FamilySpec f = vr_fam.spec();
        fam_sys = potential(f, vr_m, std::vector<int>{vr_ell});
        window = plot_window(fam_sys->interval());
        residual = [&](double x) { return schrodinger_residual(*fam_sys, 0, x); };
      } else {
        if (vr_system == "quantsys") {
          const auto p = gen::solve_params_quantsys(vr_c1, vr_c2, vr_n, parse_branch(vr_branch));
          gsys = gen::GeneratedSystem{gen::quantsys_potential(vr_c1, vr_c2), p.energy};
          psi = p.psi;
        } else {
          const auto p = gen::solve_params_inverse_sqrt(vr_c1, vr_c2, vr_n).front();
          gsys = gen::GeneratedSystem{gen::inverse_sqrt_potential(vr_c1, vr_c2), p.energy};
          psi = p.psi;
        }
        psi_dd = ir::derivative(psi, 2);
        window = {1e-3, 30.0};
        residual = [&](double r) { return gen::generated_residual(*gsys, psi, r, psi_dd); };
      }
      if (vr_random > 0) {
        const double a = vr_grid.lo.value_or(window.lo), b = vr_grid.hi.value_or(window.hi);
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> u(a, b);
        for (int i = 0; i < vr_random; ++i) xs.push_back(u(rng));
        std::sort(xs.begin(), xs.end());
      } else {
        xs = vr_grid.points(window);
      }
      csv_header(out, {"x", "residual"});
      for (const double x : xs) out << num(x) << ',' << num(residual(x)) << '\n';
      return kOk;
    }

    if (v_spec->parsed()) {
      std::function<double(double)> vfun;
      std::vector<double> analytic;
      double lo = 0.0, hi = 0.0;
      std::optional<SchrodingerSystem> sys;
      ir::Expr vq;
      const int wanted = vs_emax ? 1000 : vs_count;
      if (vs_system == "family") {
        if (vs_fam.family.empty() || std::isnan(vs_fam.alpha) || std::isnan(vs_fam.beta))
          throw CLI::RequiredError("--family, --alpha and --beta");
        const FamilySpec f = vs_fam.spec();
        sys = potential(f, vs_m);
        const Interval w = plot_window(sys->interval());
        lo = vs_xmin.value_or(w.lo);
        hi = vs_xmax.value_or(w.hi);
        vfun = [&](double x) { return sys->potential_at(x); };
        const FamilyCutoff cut = cutoff(f);
        for (int ell = vs_m; static_cast<int>(analytic.size()) < wanted && cut.admits(ell); ++ell)
          analytic.push_back(eigenvalue(f, ell));
      } else {
        vq = gen::quantsys_potential(vs_c1, vs_c2);
        lo = vs_xmin.value_or(1e-3);
        hi = vs_xmax.value_or(40.0);
        vfun = [&](double r) { return ir::evaluate(vq, r); };
        for (int n = 0; static_cast<int>(analytic.size()) < wanted && n < 10000; ++n) {
          try {
            analytic.push_back(gen::solve_params_quantsys(vs_c1, vs_c2, n, 1).energy);
          } catch (const Inadmissible&) {
          }
        }
      }
      const oracle::FDHamiltonian h(vfun, lo, hi, vs_grid);
      const std::vector<double> numeric =
          vs_emax ? oracle::eigenvalues_below(h, *vs_emax) : oracle::lowest_eigenvalues(h, vs_count);
      csv_header(out, {"index", "E_numeric", "E_analytic", "abs_err"});
      for (std::size_t i = 0; i < numeric.size(); ++i) {
        out << i << ',' << num(numeric[i]) << ',';
        if (i < analytic.size())
          out << num(analytic[i]) << ',' << num(std::abs(numeric[i] - analytic[i])) << '\n';
        else
          out << "nan,nan\n";
      }
      return kOk;
    }

    if (v_orth->parsed()) {
      const FamilySpec f = vo_fam.spec();
      csv_header(out, {"m", "ell", "k", "s_space", "x_space"});
      for (const auto& e : verify::orthogonality(f, vo_m, verify::degree_limit(f, vo_ell_max)))
        out << e.m << ',' << e.ell << ',' << e.k << ',' << num(e.s_space) << ',' << num(e.x_space) << '\n';
      return kOk;
    }

    if (dw->parsed()) {
      const gen::GeneratedSystem sys = gen::reproduce_dw(dw_theta, dw_rho, dw_lambda, dw_which);
      const gen::CoefficientPattern pat = gen::coefficient_pattern(sys, dw_which);
      json d;
      d["which"] = dw_which;
      d["substitution"] = ir::to_string(sys.map.x_of_r, "r");
      d["potential_expr"] = ir::to_string(sys.potential, "r");
      d["energy"] = json_num(sys.energy);
      d["gauge"] = ir::to_string(sys.gauge, "r");
      json basis = json::array(), coeffs = json::array();
      for (std::size_t i = 0; i < 4; ++i) {
        basis.push_back(pat.basis[i]);
        coeffs.push_back(json_num(pat.coeffs[i]));
      }
      d["basis"] = basis;
      d["coefficients"] = coeffs;
      d["fit_residual"] = json_num(pat.max_fit_residual);
      out << d.dump(2) << '\n';
      return kOk;
    }

    if (acc->parsed()) {
      out << "seed " << seed << '\n';
      bool ok = true;
      std::vector<int> ids = acc_only;
      if (ids.empty())
        for (int i = 1; i <= acceptance::kCriterionCount; ++i) ids.push_back(i);
      int passed = 0;
      for (const int id : ids) {
        const auto r = acceptance::run_criterion(id);
        acceptance::print(out, r);
        ok = ok && r.pass;
        passed += r.pass ? 1 : 0;
      }
      out << passed << "/" << ids.size() << " criteria passed\n";
      return ok ? kOk : kDomain;
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace solvable::cli
