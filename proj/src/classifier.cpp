#include "kanto/classifier.hpp"

#include <cmath>

#include "kanto/kantorovich.hpp"

namespace kanto {

const char* to_string(Status s) {
  switch (s) {
    case Status::kConvex: return "Convex";
    case Status::kNotConvex: return "NotConvex";
    case Status::kUndetermined: return "Undetermined";
  }
  return "?";
}

const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::kGeneralSufficient: return "general_sufficient";
    case Certificate::kExactTwoDim: return "exact_2d";
    case Certificate::kSufficient3D: return "sufficient_3d";
    case Certificate::kNecessaryViolated: return "necessary_violated";
    case Certificate::kWitnessFound: return "witness_found";
    case Certificate::kSamplingExhausted: return "sampling_exhausted";
  }
  return "?";
}

NecessaryProbe necessary_probe(const DeltaVector& delta) {
  NecessaryProbe p;
  if (delta.dim() < 2) {
    p.quad_value = 12.0;
    return p;
  }
  p.worst_pair = delta.argmax();
  const double d = delta(p.worst_pair.first, p.worst_pair.second);
  p.quad_value = 9.0 + 3.0 * d - 0.75 * d * d;
  p.violated = p.quad_value < 0.0;
  return p;
}

namespace {

double normalized_value(const DeltaVector& delta, Vec& y) {
  double norm = 0.0;
  for (double v : y) norm += v * v;
  norm = std::sqrt(norm);
  if (norm == 0.0) return std::numeric_limits<double>::infinity();
  for (double& v : y) v /= norm;
  return min_eigenvalue(h_form(delta, y));
}

// Rejects witnesses that do not survive the independent Hessian route.
std::optional<Witness> make_witness(const MatrixSpec& spec, const Vec& y,
                                    double tolerance) {
  Witness w;
  w.y = y;
  w.x = spec.spectral.rotate_back(y);
  w.lambda_min = min_eigenvalue(k_hessian(spec, w.x));
  if (w.lambda_min < -tolerance) return w;
  return std::nullopt;
}

}  // namespace

std::pair<Vec, double> refine_direction(const DeltaVector& delta, Vec y,
                                        int rounds) {
  const std::size_t n = y.size();
  double best = normalized_value(delta, y);
  if (n < 2) return {y, best};
  constexpr double kInvPhi = 0.6180339887498949;
  constexpr int kGoldenSteps = 24;
  double radius = 0.25;
  Vec trial(n);
  for (int r = 0; r < rounds; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      auto g = [&](double t) {
        trial = y;
        trial[i] = t;
        return normalized_value(delta, trial);
      };
      double a = y[i] - radius, b = y[i] + radius;
      double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
      double gc = g(c), gd = g(d);
      for (int s = 0; s < kGoldenSteps; ++s) {
        if (gc < gd) {
          b = d;
          d = c;
          gd = gc;
          c = b - kInvPhi * (b - a);
          gc = g(c);
        } else {
          a = c;
          c = d;
          gc = gd;
          d = a + kInvPhi * (b - a);
          gd = g(d);
        }
      }
      const double t = gc < gd ? c : d;
      Vec cand = y;
      cand[i] = t;
      const double v = normalized_value(delta, cand);
      if (v < best) {
        best = v;
        y = std::move(cand);
      }
    }
    radius *= 0.85;
  }
  return {y, best};
}

FalsifyResult falsify(const MatrixSpec& spec, const SamplePlan& plan) {
  const DeltaVector delta = delta_from_spec(spec);
  FalsifyResult out;
  out.report = verify_h_lmi(delta, plan);
  if (plan.refine_rounds > 0 && spec.dim() >= 2 && out.report.samples > 0) {
    auto [y, v] = refine_direction(delta, out.report.worst_point, plan.refine_rounds);
    out.report.samples += 1;
    if (v < out.report.worst_value) {
      out.report.worst_value = v;
      out.report.worst_point = std::move(y);
    }
    out.report.passed = out.report.worst_value >= -out.report.tolerance;
  }
  if (!out.report.passed) {
    out.witness = make_witness(spec, out.report.worst_point, plan.tolerance);
  }
  return out;
}

ConvexityVerdict classify(const MatrixSpec& spec, const SamplePlan& plan) {
  ConvexityVerdict v;
  v.kappa = spec.kappa;
  const std::size_t n = spec.dim();
  auto within = [&](double t) { return spec.kappa <= t * (1.0 + kBoundaryRelTol); };

  if (n == 1) {
    v.status = Status::kConvex;
    v.certificate = Certificate::kGeneralSufficient;
    return v;
  }
  if (!within(v.thresholds.necessary)) {
    v.status = Status::kNotConvex;
    v.certificate = Certificate::kNecessaryViolated;
    // The (1, n) pair probe: H restricted to that pair has determinant
    // 9 + 3 D - 3/4 D^2 < 0.
    Vec y(n, 0.0);
    y.front() = 1.0 / std::sqrt(2.0);
    y.back() = 1.0 / std::sqrt(2.0);
    v.witness = make_witness(spec, y, plan.tolerance);
    return v;
  }
  if (n == 2) {
    v.status = Status::kConvex;
    v.certificate = Certificate::kExactTwoDim;
    return v;
  }
  if (n == 3 && within(v.thresholds.sufficient_3d)) {
    v.status = Status::kConvex;
    v.certificate = Certificate::kSufficient3D;
    return v;
  }
  if (within(v.thresholds.general_sufficient)) {
    v.status = Status::kConvex;
    v.certificate = Certificate::kGeneralSufficient;
    return v;
  }
  FalsifyResult f = falsify(spec, plan);
  v.report = std::move(f.report);
  if (f.witness) {
    v.status = Status::kNotConvex;
    v.certificate = Certificate::kWitnessFound;
    v.witness = std::move(f.witness);
  } else {
    v.status = Status::kUndetermined;
    v.certificate = Certificate::kSamplingExhausted;
  }
  return v;
}

}  // namespace kanto
