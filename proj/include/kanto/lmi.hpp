#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kanto/matrix.hpp"
#include "kanto/sampling.hpp"
#include "kanto/spectral_form.hpp"

namespace kanto {

// Outcome of sampling a semi-infinite LMI. This is a sampling certificate:
// evidence at the recorded density, not a proof.
struct SampleReport {
  double worst_value = 0.0;  // min over samples of lambda_min
  Vec worst_point;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double tolerance = kDefaultPsdTolerance;
  bool passed = false;       // worst_value >= -tolerance
};

// lambda_min(H_n(delta, y)) over the unit vectors of the plan (probes, sphere
// design, random directions). No local refinement.
SampleReport verify_h_lmi(const DeltaVector& delta, const SamplePlan& plan);

struct GridAxis {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t nodes = 2;

  // Endpoints are hit exactly.
  double node(std::size_t k) const;
};

// Tensor grid. A single-node axis requires lo == hi.
struct GridSpec {
  std::vector<GridAxis> axes;

  static GridSpec cube(std::size_t dims, double lo, double hi, std::size_t nodes);
  void validate() const;  // throws InvalidArgument
  std::size_t cell_count() const;
  // Decodes a flat index (last axis fastest) into coordinates.
  void coords(std::size_t flat, std::span<double> out) const;
};

struct GridWorst {
  std::string grid;
  std::string check;
  std::vector<double> coords;
  double value = 0.0;
  bool passed = false;
};

struct ChiPsiValues {
  double chi1 = 0.0;
  double chi2 = 0.0;
  double chi3 = 0.0;
  double chi4 = 0.0;
  double psi = 0.0;

  std::array<double, 5> as_array() const { return {chi1, chi2, chi3, chi4, psi}; }
};

ChiPsiValues chi_psi_values(double d1, double d2, double d3);

struct ChiPsiReport {
  std::array<GridWorst, 5> worst;  // chi1, chi2, chi3, chi4, psi
  std::size_t nodes = 0;
  bool passed = false;
};

// Every function >= 0 (no slack) at every node.
ChiPsiReport chi_psi_grid_check(const GridSpec& grid);

struct GridReport {
  GridWorst worst;
  std::size_t cells = 0;
  bool passed = false;
};

// lambda_min(form(w, a, b)) >= -tol over omega_grid (3 axes) x ab_grid
// (2 axes).
GridReport robust_psd_grid(Form3 form, const GridSpec& omega_grid,
                           const GridSpec& ab_grid,
                           double tol = kDefaultPsdTolerance);

// Dense polynomial, coefficients lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {}

  double operator()(double x) const;
  Polynomial derivative(int order = 1) const;
  double coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : 0.0; }
  std::size_t size() const { return c_.size(); }
  const std::vector<double>& coefficients() const { return c_; }

 private:
  std::vector<double> c_;
};

// det M(w, a, b) is a polynomial of degree <= 6 in a; recovered exactly (up to
// rounding) by interpolation at a in {0, +-1/3, +-2/3, +-1}.
Polynomial detm_alpha_poly(const OmegaBox& w, double beta);

struct DetMAlphaReport {
  GridWorst second_derivative;   // min d2/da2 det M over the alpha nodes
  GridWorst fourth_derivative;   // min d4/da4 det M
  GridWorst alpha0_minimizer;    // min det M(a) - det M(0)
  GridWorst det_alpha0;          // min det M(w, 0, b)
  std::size_t cells = 0;
  bool passed = false;
};

inline constexpr double kGridTolerance = 1e-9;

// Checks at every (w, b) node using detm_alpha_poly, on alpha_nodes points
// spanning [-1, 1].
DetMAlphaReport det_m_alpha_check(const GridSpec& omega_grid,
                                 const GridSpec& beta_grid,
                                 std::size_t alpha_nodes = 41);

// Constant pair vectors at the upper end of each candidate interval
// [2, sqrt(5+2 sqrt6)] and [2, 2 sqrt3], plus random vectors inside it.
struct IntervalCheck {
  std::string label;
  double upper = 0.0;
  SampleReport constant;   // all pairs at `upper`
  double worst_random = 0.0;
  std::size_t random_trials = 0;
  bool passed = false;
};

std::array<IntervalCheck, 2> solution_interval_check(std::size_t n,
                                                     const SamplePlan& plan,
                                                     std::size_t random_trials,
                                                     std::uint64_t seed);

// CSV rows for worst-cell reports.
std::string grid_csv_header();
std::string grid_csv_row(const GridWorst& w);

}  // namespace kanto
