#include "kanto/boundary.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <thread>

#include "kanto/classifier.hpp"
#include "kanto/error.hpp"
#include "kanto/spd.hpp"

namespace kanto {

EigenFamily EigenFamily::two_point(std::size_t n) {
  std::vector<double> t(n, 0.0);
  t.back() = 1.0;
  return {"two_point", std::move(t)};
}

EigenFamily EigenFamily::geometric(std::size_t n) {
  std::vector<double> t(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
  }
  if (n > 1) t.back() = 1.0;
  return {"geometric", std::move(t)};
}

EigenFamily EigenFamily::pinned_pair(std::size_t n) {
  std::vector<double> t(n, 1.0);
  t.front() = 0.0;
  return {"pinned_pair", std::move(t)};
}

EigenFamily EigenFamily::custom(std::string name, std::vector<double> profile) {
  if (profile.size() < 2 || profile.front() != 0.0 || profile.back() != 1.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "profile needs at least two entries, starting at 0 and ending at 1");
  }
  for (std::size_t i = 1; i < profile.size(); ++i) {
    if (!(profile[i] >= profile[i - 1])) {
      throw Error(ErrorCode::kInvalidArgument, "profile must be non-decreasing");
    }
  }
  return {std::move(name), std::move(profile)};
}

EigenFamily EigenFamily::by_name(const std::string& name, std::size_t n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "families need n >= 2");
  if (name == "two_point") return two_point(n);
  if (name == "geometric") return geometric(n);
  if (name == "pinned_pair") return pinned_pair(n);
  throw Error(ErrorCode::kInvalidArgument, "unknown family '" + name + "'");
}

std::vector<double> EigenFamily::eigenvalues(double kappa) const {
  std::vector<double> l(profile.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    l[i] = profile[i] == 0.0 ? 1.0 : profile[i] == 1.0 ? kappa : std::pow(kappa, profile[i]);
  }
  return l;
}

namespace {

constexpr double kBracketLo = 1.0;
constexpr double kBracketHi = 8.0;

BisectionStep check(const EigenFamily& family, double kappa,
                    const SamplePlan& plan) {
  const auto l = family.eigenvalues(kappa);
  const FalsifyResult f = falsify(spec_from_eigenvalues(l), plan);
  return {kappa, f.witness.has_value(), f.report.worst_value};
}

}  // namespace

BoundaryEstimate probe_boundary(const EigenFamily& family, double tol,
                                const SamplePlan& plan) {
  if (!(tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tol must be positive");
  BoundaryEstimate e;
  e.family = family.name;
  e.dim = family.dim();
  e.tol = tol;
  e.seed = plan.seed;
  e.samples_per_check = plan.total(e.dim);

  const BisectionStep lo = check(family, kBracketLo, plan);
  const BisectionStep hi = check(family, kBracketHi, plan);
  e.steps = {lo, hi};
  if (lo.witness || !hi.witness) {
    throw Error(ErrorCode::kBadInitialBracket,
                lo.witness ? "witness found at kappa = 1"
                           : "no witness at kappa = 8; budget too small");
  }
  e.kappa_lo = kBracketLo;
  e.kappa_hi = kBracketHi;
  while (e.kappa_hi - e.kappa_lo > tol) {
    const double mid = 0.5 * (e.kappa_lo + e.kappa_hi);
    const BisectionStep s = check(family, mid, plan);
    e.steps.push_back(s);
    (s.witness ? e.kappa_hi : e.kappa_lo) = mid;
  }
  return e;
}

std::vector<SweepRow> sweep(const std::vector<std::string>& families,
                            const std::vector<std::size_t>& dims, double tol,
                            std::uint64_t seed, double budget) {
  std::vector<SweepRow> rows;
  for (const auto& f : families) {
    for (std::size_t n : dims) {
      SweepRow r;
      r.family = f;
      r.dim = n;
      r.tol = tol;
      r.seed = seed;
      rows.push_back(std::move(r));
    }
  }
  auto run = [&](SweepRow& r) {
    const auto start = std::chrono::steady_clock::now();
    const SamplePlan plan = SamplePlan::defaults(r.dim, seed).scaled(budget);
    r.samples = plan.total(r.dim);
    try {
      r.estimate = probe_boundary(EigenFamily::by_name(r.family, r.dim), tol, plan);
    } catch (const Error& e) {
      r.error = std::string(to_string(e.code())) + ": " + e.what();
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  };
  if (std::thread::hardware_concurrency() > 1 && rows.size() > 1) {
    std::vector<std::future<void>> jobs;
    for (auto& r : rows) jobs.push_back(std::async(std::launch::async, run, std::ref(r)));
    for (auto& j : jobs) j.get();
  } else {
    for (auto& r : rows) run(r);
  }
  return rows;
}

std::string sweep_csv_header() {
  return "family,dim,kappa_lo,kappa_hi,tol,samples,seed,wall_ms";
}

std::string sweep_csv_row(const SweepRow& row, bool timing) {
  char buf[512];
  const double lo = row.estimate ? row.estimate->kappa_lo : std::nan("");
  const double hi = row.estimate ? row.estimate->kappa_hi : std::nan("");
  std::snprintf(buf, sizeof buf, "%s,%zu,%.17g,%.17g,%.17g,%zu,%llu,%.0f",
                row.family.c_str(), row.dim, lo, hi, row.tol, row.samples,
                static_cast<unsigned long long>(row.seed),
                timing ? row.wall_ms : 0.0);
  return buf;
}

}  // namespace kanto
