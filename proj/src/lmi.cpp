#include "kanto/lmi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "kanto/error.hpp"

namespace kanto {

SampleReport verify_h_lmi(const DeltaVector& delta, const SamplePlan& plan) {
  const std::size_t n = delta.dim();
  const SphereSampler sampler(n, plan);
  const MinResult best = parallel_min_with_state(sampler.size(), [&] {
    return [&, y = Vec(n)](std::size_t k) mutable {
      sampler.point(k, y);
      return min_eigenvalue(h_form(delta, y));
    };
  });
  SampleReport r;
  r.samples = sampler.size();
  r.seed = plan.seed;
  r.tolerance = plan.tolerance;
  r.worst_point.assign(n, 0.0);
  if (r.samples > 0) {
    sampler.point(best.index, r.worst_point);
    r.worst_value = best.value;
  } else {
    r.worst_value = std::numeric_limits<double>::infinity();
  }
  r.passed = r.worst_value >= -r.tolerance;
  return r;
}

double GridAxis::node(std::size_t k) const {
  if (nodes <= 1) return lo;
  if (k + 1 == nodes) return hi;
  return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(nodes - 1);
}

GridSpec GridSpec::cube(std::size_t dims, double lo, double hi,
                        std::size_t nodes) {
  GridSpec g;
  g.axes.assign(dims, GridAxis{lo, hi, nodes});
  return g;
}

void GridSpec::validate() const {
  if (axes.empty()) throw Error(ErrorCode::kInvalidArgument, "grid has no axes");
  for (const auto& a : axes) {
    if (!std::isfinite(a.lo) || !std::isfinite(a.hi)) {
      throw Error(ErrorCode::kInvalidArgument, "grid range is not finite");
    }
    if (a.nodes == 0) throw Error(ErrorCode::kInvalidArgument, "grid axis has no nodes");
    if (a.nodes == 1 && a.lo != a.hi) {
      throw Error(ErrorCode::kInvalidArgument,
                  "a single-node axis needs lo == hi");
    }
    if (a.hi < a.lo) throw Error(ErrorCode::kInvalidArgument, "grid range is reversed");
  }
}

std::size_t GridSpec::cell_count() const {
  std::size_t c = 1;
  for (const auto& a : axes) c *= a.nodes;
  return c;
}

void GridSpec::coords(std::size_t flat, std::span<double> out) const {
  for (std::size_t d = axes.size(); d-- > 0;) {
    const std::size_t k = flat % axes[d].nodes;
    flat /= axes[d].nodes;
    out[d] = axes[d].node(k);
  }
}

ChiPsiValues chi_psi_values(double d1, double d2, double d3) {
  ChiPsiValues v;
  v.chi1 = 6.0 * d3 + d1 * d2 - 0.5 * d3 * d2 * d2;
  v.chi2 = 6.0 * d1 + d3 * d2 - 0.5 * d1 * d2 * d2;
  v.chi3 = 6.0 * d2 + d1 * d3 - 0.5 * d2 * d1 * d1;
  v.chi4 = 6.0 * d3 + d1 * d2 - 0.5 * d3 * d1 * d1;
  v.psi = 12.0 + d1 * d2 * d3 - d1 * d1 - d2 * d2 - d3 * d3;
  return v;
}

ChiPsiReport chi_psi_grid_check(const GridSpec& grid) {
  grid.validate();
  if (grid.axes.size() != 3) {
    throw Error(ErrorCode::kInvalidArgument, "grid needs three axes");
  }
  static const char* kNames[5] = {"chi1", "chi2", "chi3", "chi4", "psi"};
  ChiPsiReport r;
  r.nodes = grid.cell_count();
  r.passed = true;
  for (int f = 0; f < 5; ++f) {
    const MinResult best = parallel_min_with_state(r.nodes, [&] {
      return [&, c = Vec(3)](std::size_t k) mutable {
        grid.coords(k, c);
        return chi_psi_values(c[0], c[1], c[2]).as_array()[f];
      };
    });
    GridWorst& w = r.worst[f];
    w.grid = "chi_psi";
    w.check = kNames[f];
    w.coords.assign(3, 0.0);
    grid.coords(best.index, w.coords);
    w.value = best.value;
    w.passed = best.value >= 0.0;
    r.passed = r.passed && w.passed;
  }
  return r;
}

GridReport robust_psd_grid(Form3 form, const GridSpec& omega_grid,
                           const GridSpec& ab_grid, double tol) {
  omega_grid.validate();
  ab_grid.validate();
  if (omega_grid.axes.size() != 3 || ab_grid.axes.size() != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "robust grid needs 3 omega axes and 2 alpha/beta axes");
  }
  const std::size_t inner = ab_grid.cell_count();
  GridSpec full;
  full.axes = omega_grid.axes;
  full.axes.insert(full.axes.end(), ab_grid.axes.begin(), ab_grid.axes.end());
  GridReport r;
  r.cells = omega_grid.cell_count() * inner;
  const MinResult best = parallel_min_with_state(r.cells, [&] {
    return [&, c = Vec(5)](std::size_t k) mutable {
      full.coords(k, c);
      return min_eigenvalue(form3(form, {c[0], c[1], c[2]}, c[3], c[4]));
    };
  });
  r.worst.grid = "robust_psd";
  r.worst.check = to_string(form);
  r.worst.coords.assign(5, 0.0);
  full.coords(best.index, r.worst.coords);
  r.worst.value = best.value;
  r.worst.passed = best.value >= -tol;
  r.passed = r.worst.passed;
  return r;
}

double Polynomial::operator()(double x) const {
  double s = 0.0;
  for (std::size_t k = c_.size(); k-- > 0;) s = s * x + c_[k];
  return s;
}

Polynomial Polynomial::derivative(int order) const {
  std::vector<double> c = c_;
  for (int o = 0; o < order; ++o) {
    if (c.size() <= 1) return Polynomial({0.0});
    std::vector<double> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<double>(k);
    c = std::move(d);
  }
  return Polynomial(std::move(c));
}

namespace {

constexpr std::size_t kInterpNodes = 7;
constexpr std::array<double, kInterpNodes> kAlphaNodes = {
    -1.0, -2.0 / 3.0, -1.0 / 3.0, 0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0};

// Inverse of the Vandermonde matrix V_ik = a_i^k, by Gauss-Jordan with
// partial pivoting. Computed once.
const std::array<std::array<double, kInterpNodes>, kInterpNodes>& inverse_vandermonde() {
  static const auto inv = [] {
    constexpr std::size_t n = kInterpNodes;
    std::array<std::array<double, 2 * n>, n> a{};
    for (std::size_t i = 0; i < n; ++i) {
      double p = 1.0;
      for (std::size_t k = 0; k < n; ++k) {
        a[i][k] = p;
        p *= kAlphaNodes[i];
      }
      a[i][n + i] = 1.0;
    }
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      for (std::size_t r = col + 1; r < n; ++r) {
        if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
      }
      std::swap(a[col], a[piv]);
      const double d = a[col][col];
      for (auto& v : a[col]) v /= d;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col) continue;
        const double f = a[r][col];
        if (f == 0.0) continue;
        for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
      }
    }
    std::array<std::array<double, n>, n> out{};
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) out[i][k] = a[i][n + k];
    }
    return out;
  }();
  return inv;
}

}  // namespace

Polynomial detm_alpha_poly(const OmegaBox& w, double beta) {
  std::array<double, kInterpNodes> values{};
  for (std::size_t i = 0; i < kInterpNodes; ++i) {
    values[i] = det(m_form(w, kAlphaNodes[i], beta));
  }
  const auto& inv = inverse_vandermonde();
  std::vector<double> c(kInterpNodes, 0.0);
  for (std::size_t k = 0; k < kInterpNodes; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < kInterpNodes; ++i) s += inv[k][i] * values[i];
    c[k] = s;
  }
  return Polynomial(std::move(c));
}

DetMAlphaReport det_m_alpha_check(const GridSpec& omega_grid,
                                 const GridSpec& beta_grid,
                                 std::size_t alpha_nodes) {
  omega_grid.validate();
  beta_grid.validate();
  if (omega_grid.axes.size() != 3 || beta_grid.axes.size() != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "grid needs 3 omega axes and 1 beta axis");
  }
  if (alpha_nodes < 2) {
    throw Error(ErrorCode::kInvalidArgument, "need at least two alpha nodes");
  }
  GridSpec full;
  full.axes = omega_grid.axes;
  full.axes.push_back(beta_grid.axes.front());
  const GridAxis alpha_axis{-1.0, 1.0, alpha_nodes};

  struct Track {
    double value = std::numeric_limits<double>::infinity();
    std::size_t cell = 0;
    double alpha = 0.0;
    void offer(double v, std::size_t k, double a) {
      if (v < value) {
        value = v;
        cell = k;
        alpha = a;
      }
    }
  };
  Track d2, d4, gap, at0;
  Vec c(4);
  const std::size_t cells = full.cell_count();
  for (std::size_t k = 0; k < cells; ++k) {
    full.coords(k, c);
    const OmegaBox w{c[0], c[1], c[2]};
    const Polynomial p = detm_alpha_poly(w, c[3]);
    const Polynomial p2 = p.derivative(2);
    const Polynomial p4 = p.derivative(4);
    const double p0 = p(0.0);
    for (std::size_t i = 0; i < alpha_nodes; ++i) {
      const double a = alpha_axis.node(i);
      d2.offer(p2(a), k, a);
      d4.offer(p4(a), k, a);
      gap.offer(p(a) - p0, k, a);
    }
    at0.offer(det_m_alpha0(w, c[3]), k, 0.0);
  }

  auto report = [&](const Track& t, const char* name) {
    Vec at(4);
    full.coords(t.cell, at);
    GridWorst w;
    w.grid = "det_m_alpha";
    w.check = name;
    w.coords = {at[0], at[1], at[2], t.alpha, at[3]};
    w.value = t.value;
    w.passed = t.value >= -kGridTolerance;
    return w;
  };
  DetMAlphaReport r;
  r.cells = cells;
  r.second_derivative = report(d2, "d2_det_m");
  r.fourth_derivative = report(d4, "d4_det_m");
  r.alpha0_minimizer = report(gap, "det_m_minus_alpha0");
  r.det_alpha0 = report(at0, "det_m_alpha0");
  r.passed = r.second_derivative.passed && r.fourth_derivative.passed &&
             r.alpha0_minimizer.passed && r.det_alpha0.passed;
  return r;
}

std::array<IntervalCheck, 2> solution_interval_check(std::size_t n,
                                                     const SamplePlan& plan,
                                                     std::size_t random_trials,
                                                     std::uint64_t seed) {
  const double printed = std::sqrt(5.0 + 2.0 * std::sqrt(6.0));
  const double image = 2.0 * std::sqrt(3.0);
  std::array<IntervalCheck, 2> out;
  out[0].label = "[2, sqrt(5+2sqrt6)]";
  out[0].upper = printed;
  out[1].label = "[2, 2sqrt3]";
  out[1].upper = image;
  std::mt19937_64 rng(seed);
  for (auto& check : out) {
    check.constant = verify_h_lmi(DeltaVector::constant(n, check.upper), plan);
    check.random_trials = random_trials;
    check.worst_random = std::numeric_limits<double>::infinity();
    std::uniform_real_distribution<double> u(2.0, check.upper);
    for (std::size_t t = 0; t < random_trials; ++t) {
      std::vector<double> v(DeltaVector::pair_count(n));
      for (auto& x : v) x = u(rng);
      const SampleReport r = verify_h_lmi(DeltaVector(n, std::move(v)), plan);
      check.worst_random = std::min(check.worst_random, r.worst_value);
    }
    check.passed = check.constant.passed &&
                   (random_trials == 0 || check.worst_random >= -plan.tolerance);
  }
  return out;
}

std::string grid_csv_header() {
  return "grid,check,omega1,omega2,omega3,alpha,beta,value,passed";
}

std::string grid_csv_row(const GridWorst& w) {
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  std::string row = w.grid + "," + w.check;
  for (std::size_t i = 0; i < 5; ++i) {
    row += ",";
    if (i < w.coords.size()) row += num(w.coords[i]);
  }
  row += "," + num(w.value) + "," + (w.passed ? "true" : "false");
  return row;
}

}  // namespace kanto
