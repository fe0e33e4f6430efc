#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "kanto/matrix.hpp"
#include "kanto/spd.hpp"

namespace kanto {

// Eigenvalue-ratio sums D_ij = l_j/l_i + l_i/l_j over pairs i < j, stored in
// lexicographic pair order (0,1), (0,2), ..., (0,n-1), (1,2), ...
// D_ij and D_ji share one cell.
class DeltaVector {
 public:
  DeltaVector() = default;
  // Throws InvalidArgument unless values.size() == n(n-1)/2 and every entry
  // is finite and >= 2.
  DeltaVector(std::size_t n, std::vector<double> values);

  // Every pair set to the same value.
  static DeltaVector constant(std::size_t n, double value);

  std::size_t dim() const { return n_; }
  std::span<const double> values() const { return values_; }
  double operator()(std::size_t i, std::size_t j) const;

  // Largest entry and the pair attaining it (first in pair order on ties).
  std::pair<std::size_t, std::size_t> argmax() const;
  double max() const;

  static std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }
  static std::size_t index(std::size_t n, std::size_t i, std::size_t j);

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

DeltaVector delta_from_spec(const MatrixSpec& spec);
DeltaVector delta_from_eigenvalues(std::span<const double> ascending);

// (w1, w2, w3); built from a 3-D DeltaVector as (D12, D13, D23).
struct OmegaBox {
  double w1 = 2.0;
  double w2 = 2.0;
  double w3 = 2.0;

  static OmegaBox from_delta(const DeltaVector& d);
};

// Diagonal i: 3 y_i^2 + 1/2 sum_{j != i} D_ij y_j^2; off-diagonal D_ij y_i y_j.
SymMatrix h_form(const DeltaVector& delta, std::span<const double> y);

// det H_2 expanded: 9 y1^2 y2^2 + 3/2 D (y1^4 + y2^4) - 3/4 D^2 y1^2 y2^2.
double h2_det(double delta12, double y1, double y2);

// The normalized 3x3 forms: H_3(y) = y_k^2 * {M, P, Q}(D, a, b) when |y_k|
// is the largest coordinate (k = 1, 2, 3 respectively).
SymMatrix m_form(const OmegaBox& w, double alpha, double beta);
SymMatrix p_form(const OmegaBox& w, double alpha, double beta);
SymMatrix q_form(const OmegaBox& w, double alpha, double beta);

enum class Form3 { kM, kP, kQ };
const char* to_string(Form3 f);
SymMatrix form3(Form3 f, const OmegaBox& w, double alpha, double beta);

// det M(w, 0, b) = 3/2 (w1 + w3 b^2)(w2/2 + (3 - w2^2/4) b^2 + w2/2 b^4)
double det_m_alpha0(const OmegaBox& w, double beta);

}  // namespace kanto
