#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kanto/sampling.hpp"

namespace kanto {

// Eigenvalue profile lambda_i = kappa^{t_i} with 0 = t_1 <= ... <= t_n = 1,
// so lambda_n / lambda_1 = kappa exactly.
struct EigenFamily {
  std::string name;
  std::vector<double> profile;

  static EigenFamily two_point(std::size_t n);    // (1, ..., 1, kappa)
  static EigenFamily geometric(std::size_t n);    // kappa^{(i-1)/(n-1)}
  static EigenFamily pinned_pair(std::size_t n);  // (1, kappa, ..., kappa)
  // Validates the profile; throws InvalidArgument.
  static EigenFamily custom(std::string name, std::vector<double> profile);
  // "two_point", "geometric" or "pinned_pair".
  static EigenFamily by_name(const std::string& name, std::size_t n);

  std::size_t dim() const { return profile.size(); }
  std::vector<double> eigenvalues(double kappa) const;
};

struct BisectionStep {
  double kappa = 0.0;
  bool witness = false;
  double worst_value = 0.0;
};

// Empirical bracket for the convexity threshold of a family. kappa_lo has no
// witness at the budget, kappa_hi has one. Not a convexity claim.
struct BoundaryEstimate {
  std::string family;
  std::size_t dim = 0;
  double kappa_lo = 1.0;
  double kappa_hi = 8.0;
  double tol = 1e-4;
  std::vector<BisectionStep> steps;
  std::size_t samples_per_check = 0;
  std::uint64_t seed = 0;
};

inline constexpr double kDefaultBoundaryTol = 1e-4;

// Bisection on kappa over [1, 8]. Throws BadInitialBracket when the end
// points do not behave (witness at 1, or none at 8).
BoundaryEstimate probe_boundary(const EigenFamily& family, double tol,
                                const SamplePlan& plan);

struct SweepRow {
  std::string family;
  std::size_t dim = 0;
  std::optional<BoundaryEstimate> estimate;
  std::string error;
  double tol = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
};

// One row per (family, dim); a family name that does not fit a dimension or a
// bad bracket is recorded in the row without aborting the sweep. `budget`
// scales SamplePlan::defaults(dim).
std::vector<SweepRow> sweep(const std::vector<std::string>& families,
                            const std::vector<std::size_t>& dims, double tol,
                            std::uint64_t seed, double budget = 1.0);

std::string sweep_csv_header();
// wall_ms is printed as 0 when `timing` is false so runs compare byte-exactly.
std::string sweep_csv_row(const SweepRow& row, bool timing = true);

}  // namespace kanto
