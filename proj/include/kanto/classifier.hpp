#pragma once

#include <cmath>
#include <optional>
#include <utility>

#include "kanto/lmi.hpp"
#include "kanto/sampling.hpp"
#include "kanto/spd.hpp"
#include "kanto/spectral_form.hpp"

namespace kanto {

// Condition-number thresholds for convexity of K.
struct Thresholds {
  // kappa <= sqrt(5 + 2 sqrt6) = sqrt2 + sqrt3: convex in every dimension.
  double general_sufficient = std::sqrt(5.0 + 2.0 * std::sqrt(6.0));
  // kappa <= 2 + sqrt3: convex in dimension 3.
  double sufficient_3d = 2.0 + std::sqrt(3.0);
  // kappa <= 3 + 2 sqrt2: necessary in every dimension, exact for n = 2.
  double necessary = 3.0 + 2.0 * std::sqrt(2.0);
};

// A threshold counts as met when kappa <= t * (1 + kBoundaryRelTol).
inline constexpr double kBoundaryRelTol = 1e-12;

enum class Status { kConvex, kNotConvex, kUndetermined };

enum class Certificate {
  kGeneralSufficient,   // kappa within the any-n sufficient bound
  kExactTwoDim,         // n = 2 and kappa <= 3 + 2 sqrt2
  kSufficient3D,        // n = 3 and kappa <= 2 + sqrt3
  kNecessaryViolated,   // kappa > 3 + 2 sqrt2
  kWitnessFound,        // sampled direction with a negative Hessian eigenvalue
  kSamplingExhausted,   // no witness at the given budget
};

const char* to_string(Status s);
const char* to_string(Certificate c);

// A point x where the Hessian of f has a negative eigenvalue. `y` is the same
// direction in spectral coordinates (x = U^T y, |y| = 1).
struct Witness {
  Vec x;
  Vec y;
  double lambda_min = 0.0;  // lambda_min(k_hessian(spec, x))
};

struct ConvexityVerdict {
  Status status = Status::kUndetermined;
  Certificate certificate = Certificate::kSamplingExhausted;
  std::optional<Witness> witness;
  std::optional<SampleReport> report;
  double kappa = 1.0;
  Thresholds thresholds;
};

ConvexityVerdict classify(const MatrixSpec& spec, const SamplePlan& plan);
inline ConvexityVerdict classify(const MatrixSpec& spec) {
  return classify(spec, SamplePlan::defaults(spec.dim()));
}

// q = 9 + 3 D - 3/4 D^2 at the largest pair value; q < 0 iff D_max > 6 iff
// kappa > 3 + 2 sqrt2.
struct NecessaryProbe {
  std::pair<std::size_t, std::size_t> worst_pair{0, 1};
  double quad_value = 0.0;
  bool violated = false;
};

NecessaryProbe necessary_probe(const DeltaVector& delta);

struct FalsifyResult {
  std::optional<Witness> witness;
  SampleReport report;  // includes the refined point
};

// Searches for y with lambda_min(H_n(D, y)) < -tolerance: probes, sphere
// design, random directions, then coordinate-wise golden-section refinement
// of the best sample. A witness is kept only if k_hessian at x = U^T y also
// has lambda_min < -tolerance.
FalsifyResult falsify(const MatrixSpec& spec, const SamplePlan& plan);

// Coordinate golden-section descent on lambda_min(H_n(D, y)) over the unit
// sphere starting from y. Returns the improved unit vector and its value.
std::pair<Vec, double> refine_direction(const DeltaVector& delta, Vec y,
                                        int rounds);

}  // namespace kanto
