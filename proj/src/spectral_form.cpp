#include "kanto/spectral_form.hpp"

#include <cmath>
#include <string>

#include "kanto/error.hpp"

namespace kanto {

DeltaVector::DeltaVector(std::size_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (n < 1 || values_.size() != pair_count(n)) {
    throw Error(ErrorCode::kInvalidArgument,
                "dimension " + std::to_string(n) + " needs " +
                    std::to_string(n < 1 ? 0 : pair_count(n)) +
                    " pair values, got " + std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v) || v < 2.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "pair value " + std::to_string(v) + " is below 2");
    }
  }
}

DeltaVector DeltaVector::constant(std::size_t n, double value) {
  return DeltaVector(n, std::vector<double>(pair_count(n), value));
}

std::size_t DeltaVector::index(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  // Pairs before row i: sum_{r<i} (n - 1 - r).
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

double DeltaVector::operator()(std::size_t i, std::size_t j) const {
  return values_[index(n_, i, j)];
}

std::pair<std::size_t, std::size_t> DeltaVector::argmax() const {
  std::pair<std::size_t, std::size_t> best{0, n_ > 1 ? 1 : 0};
  double v = -1.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) > v) {
        v = (*this)(i, j);
        best = {i, j};
      }
    }
  }
  return best;
}

double DeltaVector::max() const {
  double v = 2.0;
  for (double x : values_) v = std::max(v, x);
  return v;
}

DeltaVector delta_from_eigenvalues(std::span<const double> l) {
  const std::size_t n = l.size();
  std::vector<double> values;
  values.reserve(DeltaVector::pair_count(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = l[j] / l[i] + l[i] / l[j];
      // The ratio sum is >= 2 exactly; guard the last-bit rounding.
      values.push_back(std::max(2.0, v));
    }
  }
  return DeltaVector(n, std::move(values));
}

DeltaVector delta_from_spec(const MatrixSpec& spec) {
  return delta_from_eigenvalues(spec.spectral.eigenvalues);
}

OmegaBox OmegaBox::from_delta(const DeltaVector& d) {
  if (d.dim() != 3) {
    throw Error(ErrorCode::kDimensionMismatch, "omega needs a 3-D pair vector");
  }
  return {d(0, 1), d(0, 2), d(1, 2)};
}

SymMatrix h_form(const DeltaVector& delta, std::span<const double> y) {
  const std::size_t n = delta.dim();
  if (y.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "y has dimension " + std::to_string(y.size()) +
                    ", pair vector has dimension " + std::to_string(n));
  }
  SymMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    double diag = 3.0 * y[i] * y[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) diag += 0.5 * delta(i, j) * y[j] * y[j];
    }
    h.set(i, i, diag);
    for (std::size_t j = i + 1; j < n; ++j) h.set(i, j, delta(i, j) * y[i] * y[j]);
  }
  return h;
}

double h2_det(double d, double y1, double y2) {
  const double a = y1 * y1, b = y2 * y2;
  return 9.0 * a * b + 1.5 * d * (a * a + b * b) - 0.75 * d * d * a * b;
}

SymMatrix m_form(const OmegaBox& w, double a, double b) {
  SymMatrix m(3);
  m.set(0, 0, 3.0 + 0.5 * w.w1 * a * a + 0.5 * w.w2 * b * b);
  m.set(1, 1, 0.5 * w.w1 + 3.0 * a * a + 0.5 * w.w3 * b * b);
  m.set(2, 2, 0.5 * w.w2 + 0.5 * w.w3 * a * a + 3.0 * b * b);
  m.set(0, 1, w.w1 * a);
  m.set(0, 2, w.w2 * b);
  m.set(1, 2, w.w3 * a * b);
  return m;
}

SymMatrix p_form(const OmegaBox& w, double a, double b) {
  SymMatrix m(3);
  m.set(0, 0, 3.0 * a * a + 0.5 * w.w1 + 0.5 * w.w2 * b * b);
  m.set(1, 1, 0.5 * w.w1 * a * a + 3.0 + 0.5 * w.w3 * b * b);
  m.set(2, 2, 0.5 * w.w2 * a * a + 0.5 * w.w3 + 3.0 * b * b);
  m.set(0, 1, w.w1 * a);
  m.set(0, 2, w.w2 * a * b);
  m.set(1, 2, w.w3 * b);
  return m;
}

SymMatrix q_form(const OmegaBox& w, double a, double b) {
  SymMatrix m(3);
  m.set(0, 0, 3.0 * a * a + 0.5 * w.w1 * b * b + 0.5 * w.w2);
  m.set(1, 1, 0.5 * w.w1 * a * a + 3.0 * b * b + 0.5 * w.w3);
  m.set(2, 2, 0.5 * w.w2 * a * a + 0.5 * w.w3 * b * b + 3.0);
  m.set(0, 1, w.w1 * a * b);
  m.set(0, 2, w.w2 * a);
  m.set(1, 2, w.w3 * b);
  return m;
}

const char* to_string(Form3 f) {
  switch (f) {
    case Form3::kM: return "M";
    case Form3::kP: return "P";
    case Form3::kQ: return "Q";
  }
  return "?";
}

SymMatrix form3(Form3 f, const OmegaBox& w, double alpha, double beta) {
  switch (f) {
    case Form3::kM: return m_form(w, alpha, beta);
    case Form3::kP: return p_form(w, alpha, beta);
    case Form3::kQ: return q_form(w, alpha, beta);
  }
  return m_form(w, alpha, beta);
}

double det_m_alpha0(const OmegaBox& w, double beta) {
  const double b2 = beta * beta;
  return 1.5 * (w.w1 + w.w3 * b2) *
         (0.5 * w.w2 + (3.0 - 0.25 * w.w2 * w.w2) * b2 + 0.5 * w.w2 * b2 * b2);
}

}  // namespace kanto
