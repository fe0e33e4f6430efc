// kanto: convexity analysis of the Kantorovich function (x'Ax)(x'A^-1x).
//
// Exit codes: analyze returns 0 = Convex, 1 = NotConvex, 2 = Undetermined.
// Other commands return 0 on pass and 1 on fail. Malformed input exits 64.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <nlohmann/json.hpp>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kanto/boundary.hpp"
#include "kanto/classifier.hpp"
#include "kanto/error.hpp"
#include "kanto/io.hpp"
#include "kanto/kantorovich.hpp"
#include "kanto/lmi.hpp"
#include "kanto/spectral_form.hpp"

namespace {

using namespace kanto;

constexpr int kExitUsage = 64;

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += format_double(v[i]);
  }
  return s;
}

nlohmann::json report_json(const SampleReport& r) {
  return {{"worst_value", r.worst_value}, {"worst_point", r.worst_point},
          {"samples", r.samples},         {"seed", r.seed},
          {"tolerance", r.tolerance},     {"passed", r.passed},
          {"kind", "sampling certificate"}};
}

void print_report(std::ostream& os, const SampleReport& r) {
  os << "sampling certificate: " << (r.passed ? "passed" : "failed") << "\n"
     << "  worst_value: " << format_double(r.worst_value) << "\n"
     << "  worst_point: " << join(r.worst_point) << "\n"
     << "  samples: " << r.samples << "\n"
     << "  seed: " << r.seed << "\n"
     << "  tolerance: " << format_double(r.tolerance) << "\n";
}

std::string format_threshold(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

SamplePlan plan_for(std::size_t n, std::uint64_t seed, double budget,
                    std::size_t samples) {
  SamplePlan p = SamplePlan::defaults(n, seed).scaled(budget);
  if (samples > 0) {
    if (n == 2 || n == 3) {
      p.design_points = samples;
      p.random_points = 0;
    } else {
      p.design_points = 0;
      p.random_points = samples;
    }
  }
  return p;
}

struct AnalyzeArgs {
  std::string file;
  std::uint64_t seed = 42;
  double budget = 1.0;
  std::size_t samples = 0;
  std::string format = "human";
};

int cmd_analyze(const AnalyzeArgs& a) {
  const MatrixSpec spec = load_spd(a.file);
  const std::size_t n = spec.dim();
  const ConvexityVerdict v = classify(spec, plan_for(n, a.seed, a.budget, a.samples));
  const DeltaVector delta = delta_from_spec(spec);

  if (a.format == "json") {
    nlohmann::json j;
    j["dim"] = n;
    j["eigenvalues"] = spec.spectral.eigenvalues;
    j["kappa"] = spec.kappa;
    j["delta"] = std::vector<double>(delta.values().begin(), delta.values().end());
    j["status"] = to_string(v.status);
    j["certificate"] = to_string(v.certificate);
    j["thresholds"] = {{"sqrt(5+2sqrt6)", v.thresholds.general_sufficient},
                       {"2+sqrt3", v.thresholds.sufficient_3d},
                       {"3+2sqrt2", v.thresholds.necessary}};
    if (v.witness) {
      j["witness"] = {{"x", v.witness->x}, {"lambda_min", v.witness->lambda_min}};
    }
    if (v.report) j["report"] = report_json(*v.report);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "dimension: " << n << "\n"
              << "eigenvalues: " << join(spec.spectral.eigenvalues) << "\n"
              << "kappa: " << format_double(spec.kappa) << "\n"
              << "delta:";
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        std::cout << " (" << i + 1 << "," << j + 1 << ")=" << format_double(delta(i, j));
      }
    }
    std::cout << "\nthresholds:\n"
              << "  √(5+2√6) = " << format_threshold(v.thresholds.general_sufficient)
              << "  (sufficient, any n)\n"
              << "  2+√3 = " << format_threshold(v.thresholds.sufficient_3d)
              << "  (sufficient, n = 3)\n"
              << "  3+2√2 = " << format_threshold(v.thresholds.necessary)
              << "  (necessary, any n; exact for n = 2)\n"
              << "verdict: " << to_string(v.status) << "\n"
              << "certificate: " << to_string(v.certificate) << "\n";
    if (v.witness) {
      std::cout << "witness x: " << join(v.witness->x) << "\n"
                << "witness lambda_min: " << format_double(v.witness->lambda_min) << "\n";
    }
    if (v.report) print_report(std::cout, *v.report);
  }
  switch (v.status) {
    case Status::kConvex: return 0;
    case Status::kNotConvex: return 1;
    case Status::kUndetermined: return 2;
  }
  return 2;
}

struct LemmaArgs {
  std::size_t grid = 0;  // 0: per-suite defaults
  std::size_t ab_grid = 41;
  double omega_min = 2.0;
  double omega_max = 4.0;
};

int cmd_lemmas(const LemmaArgs& a) {
  const std::size_t chi_psi_nodes = a.grid ? a.grid : 41;
  const std::size_t omega_nodes = a.grid ? a.grid : 21;
  const GridSpec omega = GridSpec::cube(3, a.omega_min, a.omega_max, omega_nodes);
  const GridSpec ab = GridSpec::cube(2, -1.0, 1.0, a.ab_grid);
  const GridSpec beta = GridSpec::cube(1, -1.0, 1.0, a.ab_grid);

  bool ok = true;
  std::cout << grid_csv_header() << "\n";
  const ChiPsiReport l41 =
      chi_psi_grid_check(GridSpec::cube(3, a.omega_min, a.omega_max, chi_psi_nodes));
  for (const auto& w : l41.worst) std::cout << grid_csv_row(w) << "\n";
  ok = ok && l41.passed;
  for (Form3 f : {Form3::kM, Form3::kP, Form3::kQ}) {
    const GridReport r = robust_psd_grid(f, omega, ab);
    std::cout << grid_csv_row(r.worst) << "\n";
    ok = ok && r.passed;
  }
  const DetMAlphaReport l = det_m_alpha_check(omega, beta, a.ab_grid);
  for (const auto* w : {&l.second_derivative, &l.fourth_derivative,
                        &l.alpha0_minimizer, &l.det_alpha0}) {
    std::cout << grid_csv_row(*w) << "\n";
  }
  ok = ok && l.passed;
  std::cerr << (ok ? "all grid checks passed" : "grid check failed") << "\n";
  return ok ? 0 : 1;
}

struct BoundaryArgs {
  std::vector<std::size_t> dims{2, 3};
  std::vector<std::string> families{"two_point", "geometric"};
  std::string profile;
  double tol = kDefaultBoundaryTol;
  std::uint64_t seed = 42;
  double budget = 1.0;
  bool no_timing = false;
};

int cmd_boundary(const BoundaryArgs& a) {
  std::vector<SweepRow> rows = sweep(a.families, a.dims, a.tol, a.seed, a.budget);
  if (!a.profile.empty()) {
    const EigenFamily fam = EigenFamily::custom("custom", parse_number_list(a.profile));
    SweepRow r;
    r.family = fam.name;
    r.dim = fam.dim();
    r.tol = a.tol;
    r.seed = a.seed;
    const SamplePlan plan = SamplePlan::defaults(r.dim, a.seed).scaled(a.budget);
    r.samples = plan.total(r.dim);
    try {
      r.estimate = probe_boundary(fam, a.tol, plan);
    } catch (const Error& e) {
      r.error = e.what();
    }
    rows.push_back(std::move(r));
  }
  bool ok = true;
  std::cout << sweep_csv_header() << "\n";
  for (const auto& r : rows) {
    std::cout << sweep_csv_row(r, !a.no_timing) << "\n";
    if (!r.error.empty()) {
      std::cerr << r.family << " n=" << r.dim << ": " << r.error << "\n";
      ok = false;
    }
  }
  std::cerr << "brackets are empirical (falsification search), not convexity proofs\n";
  return ok ? 0 : 3;
}

struct LmiArgs {
  std::size_t dim = 2;
  std::string delta;
  std::uint64_t seed = 42;
  std::size_t samples = 0;
  bool intervals = false;
};

int cmd_lmi(const LmiArgs& a) {
  const SamplePlan plan = plan_for(a.dim, a.seed, 1.0, a.samples);
  if (a.intervals) {
    bool ok = true;
    for (const auto& c : solution_interval_check(a.dim, plan, 20, a.seed)) {
      std::cout << "interval " << c.label << " (upper " << format_double(c.upper)
                << "): " << (c.passed ? "passed" : "failed") << "\n"
                << "  constant worst_value: " << format_double(c.constant.worst_value)
                << "\n  random worst_value: " << format_double(c.worst_random)
                << " over " << c.random_trials << " vectors\n";
      ok = ok && c.passed;
    }
    return ok ? 0 : 1;
  }
  std::vector<double> values = parse_number_list(a.delta);
  const DeltaVector delta(a.dim, std::move(values));
  const SampleReport r = verify_h_lmi(delta, plan);
  print_report(std::cout, r);
  return r.passed ? 0 : 1;
}

struct HessianArgs {
  std::string file;
  std::size_t random_dim = 0;
  std::size_t points = 100;
  std::uint64_t seed = 42;
};

int cmd_hessian_check(const HessianArgs& a) {
  std::mt19937_64 rng(a.seed);
  std::normal_distribution<double> gauss;
  std::uniform_int_distribution<std::size_t> pick_dim(2, 5);
  std::optional<MatrixSpec> fixed;
  if (!a.file.empty()) fixed = load_spd(a.file);
  double worst = 0.0;
  for (std::size_t k = 0; k < a.points; ++k) {
    const std::size_t n = fixed ? fixed->dim() : a.random_dim ? a.random_dim : pick_dim(rng);
    const MatrixSpec spec = fixed ? *fixed : random_spd(n, 1.0, 20.0, rng);
    Vec x(n);
    for (auto& v : x) v = gauss(rng);
    worst = std::max(worst, max_relative_deviation(k_hessian(spec, x), fd_hessian(spec, x)));
  }
  const bool ok = worst < 1e-6;
  std::cout << "points: " << a.points << "\n"
            << "max relative deviation: " << format_double(worst) << "\n"
            << (ok ? "passed" : "failed") << " (threshold 1e-6)\n";
  return ok ? 0 : 1;
}

int cmd_bound(const std::string& file, const std::string& point) {
  const MatrixSpec spec = load_spd(file);
  const Vec x = parse_number_list(point);
  const KantorovichBound b = kantorovich_bound_check(spec, x);
  std::cout << "lhs: " << format_double(b.lhs) << "\n"
            << "rhs (l1+ln)^2/(4 l1 ln)|x|^4: " << format_double(b.rhs) << "\n"
            << "holds: " << (b.holds ? "true" : "false") << "\n"
            << "rhs (l1^2+ln^2)/(4 l1 ln)|x|^4: " << format_double(b.rhs_squares) << "\n"
            << "holds (squares variant): " << (b.holds_squares ? "true" : "false") << "\n";
  return b.holds ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convexity analysis of the Kantorovich function"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* c_analyze = app.add_subcommand("analyze", "Classify convexity of K for a matrix file");
  c_analyze->add_option("file", analyze.file, "Matrix file (plain text or JSON)")->required();
  c_analyze->add_option("--seed", analyze.seed, "Sampling seed");
  c_analyze->add_option("--budget", analyze.budget, "Multiplier on the default sample budget")
      ->check(CLI::PositiveNumber);
  c_analyze->add_option("--samples", analyze.samples, "Override the sample count");
  c_analyze->add_option("--format", analyze.format, "human or json")
      ->check(CLI::IsMember({"human", "json"}));

  LemmaArgs lemmas;
  auto* c_lemmas = app.add_subcommand("lemmas", "Grid checks of the 3-D inequalities; CSV out");
  c_lemmas->add_option("--grid", lemmas.grid, "Nodes per omega axis for every suite")
      ->check(CLI::PositiveNumber);
  c_lemmas->add_option("--ab-grid", lemmas.ab_grid, "Nodes per alpha/beta axis")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
  c_lemmas->add_option("--omega-min", lemmas.omega_min, "Lower omega bound");
  c_lemmas->add_option("--omega-max", lemmas.omega_max, "Upper omega bound");

  BoundaryArgs boundary;
  auto* c_boundary = app.add_subcommand("boundary", "Bisect the empirical convexity threshold");
  c_boundary->add_option("--dims", boundary.dims, "Dimensions")->delimiter(',');
  c_boundary->add_option("--families", boundary.families,
                         "two_point, geometric, pinned_pair")
      ->delimiter(',');
  c_boundary->add_option("--profile", boundary.profile,
                         "Extra custom family: exponents t_1=0,...,t_n=1");
  c_boundary->add_option("--tol", boundary.tol, "Bracket width")->check(CLI::PositiveNumber);
  c_boundary->add_option("--seed", boundary.seed, "Sampling seed");
  c_boundary->add_option("--budget", boundary.budget, "Multiplier on the default sample budget")
      ->check(CLI::PositiveNumber);
  c_boundary->add_flag("--no-timing", boundary.no_timing, "Write wall_ms as 0");

  LmiArgs lmi;
  auto* c_lmi = app.add_subcommand("lmi", "Sample H_n(delta, y) >= 0 over the unit sphere");
  c_lmi->add_option("--dim", lmi.dim, "Dimension n")->check(CLI::PositiveNumber);
  c_lmi->add_option("--delta", lmi.delta, "n(n-1)/2 comma-separated pair values, each >= 2");
  c_lmi->add_option("--seed", lmi.seed, "Sampling seed");
  c_lmi->add_option("--samples", lmi.samples, "Override the sample count");
  c_lmi->add_flag("--intervals", lmi.intervals,
                  "Check both candidate constant-delta solution intervals");

  HessianArgs hess;
  auto* c_hess = app.add_subcommand("hessian-check", "Analytic vs finite-difference Hessian");
  c_hess->add_option("file", hess.file, "Matrix file; random matrices when omitted");
  c_hess->add_option("--random", hess.random_dim, "Dimension of random matrices");
  c_hess->add_option("--points", hess.points, "Number of random points")
      ->check(CLI::PositiveNumber);
  c_hess->add_option("--seed", hess.seed, "Random seed");

  std::string bound_file, bound_point;
  auto* c_bound = app.add_subcommand("bound", "Evaluate the Kantorovich inequality at a point");
  c_bound->add_option("file", bound_file, "Matrix file")->required();
  c_bound->add_option("--point", bound_point, "Comma-separated x")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*c_analyze) return cmd_analyze(analyze);
    if (*c_lemmas) return cmd_lemmas(lemmas);
    if (*c_boundary) return cmd_boundary(boundary);
    if (*c_lmi) {
      if (lmi.delta.empty() && !lmi.intervals) {
        std::cerr << "lmi: --delta is required\n";
        return kExitUsage;
      }
      return cmd_lmi(lmi);
    }
    if (*c_hess) return cmd_hessian_check(hess);
    if (*c_bound) return cmd_bound(bound_file, bound_point);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
