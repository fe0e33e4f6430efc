#include "kanto/kantorovich.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kanto/error.hpp"

namespace kanto {

namespace {

void check_dims(const MatrixSpec& spec, std::span<const double> x) {
  if (x.size() != spec.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point has dimension " + std::to_string(x.size()) +
                    ", matrix has dimension " + std::to_string(spec.dim()));
  }
}

double squared_norm(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

}  // namespace

double k_value(const MatrixSpec& spec, std::span<const double> x) {
  check_dims(spec, x);
  return spec.matrix.quadratic_form(x) * spec.inverse.quadratic_form(x);
}

double f_value(const MatrixSpec& spec, std::span<const double> x) {
  return 0.25 * k_value(spec, x);
}

Vec k_gradient(const MatrixSpec& spec, std::span<const double> x) {
  check_dims(spec, x);
  const Vec ax = spec.matrix * x;
  const Vec bx = spec.inverse * x;
  double qa = 0.0, qb = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    qa += x[i] * ax[i];
    qb += x[i] * bx[i];
  }
  qa *= 0.5;
  qb *= 0.5;
  Vec g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) g[i] = qb * ax[i] + qa * bx[i];
  return g;
}

SymMatrix k_hessian(const MatrixSpec& spec, std::span<const double> x) {
  check_dims(spec, x);
  const std::size_t n = x.size();
  const Vec ax = spec.matrix * x;
  const Vec bx = spec.inverse * x;
  double qa = 0.0, qb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    qa += x[i] * ax[i];
    qb += x[i] * bx[i];
  }
  qa *= 0.5;
  qb *= 0.5;
  SymMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      h.set(i, j,
            qa * spec.inverse(i, j) + qb * spec.matrix(i, j) +
                ax[i] * bx[j] + bx[i] * ax[j]);
    }
  }
  return h;
}

KantorovichBound kantorovich_bound_check(const MatrixSpec& spec,
                                         std::span<const double> x) {
  check_dims(spec, x);
  const double nx2 = squared_norm(x);
  if (nx2 == 0.0) {
    throw Error(ErrorCode::kZeroVector, "Kantorovich bound needs x != 0");
  }
  const double l1 = spec.lambda_min();
  const double ln = spec.lambda_max();
  KantorovichBound b;
  b.lhs = k_value(spec, x);
  b.rhs = (l1 + ln) * (l1 + ln) / (4.0 * l1 * ln) * nx2 * nx2;
  b.holds = b.lhs <= b.rhs * (1.0 + 1e-12);
  b.rhs_squares = (l1 * l1 + ln * ln) / (4.0 * l1 * ln) * nx2 * nx2;
  b.holds_squares = b.lhs <= b.rhs_squares * (1.0 + 1e-12);
  return b;
}

SymMatrix fd_hessian(const MatrixSpec& spec, std::span<const double> x,
                     double step) {
  check_dims(spec, x);
  const std::size_t n = x.size();
  std::vector<Vec> cols(n);
  Vec probe(x.begin(), x.end());
  for (std::size_t j = 0; j < n; ++j) {
    const double h = step * (1.0 + std::abs(x[j]));
    probe[j] = x[j] + h;
    const Vec gp = k_gradient(spec, probe);
    probe[j] = x[j] - h;
    const Vec gm = k_gradient(spec, probe);
    probe[j] = x[j];
    cols[j].resize(n);
    for (std::size_t i = 0; i < n; ++i) cols[j][i] = (gp[i] - gm[i]) / (2.0 * h);
  }
  SymMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      out.set(i, j, 0.5 * (cols[j][i] + cols[i][j]));
    }
  }
  return out;
}

double max_relative_deviation(const SymMatrix& h, const SymMatrix& g) {
  double diff = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    for (std::size_t j = 0; j < h.dim(); ++j) {
      diff = std::max(diff, std::abs(h(i, j) - g(i, j)));
      scale = std::max(scale, std::abs(h(i, j)));
    }
  }
  return diff / std::max(scale, 1e-300);
}

}  // namespace kanto
