#include "kanto/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "kanto/error.hpp"

namespace kanto {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kNotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kBadInitialBracket: return "BadInitialBracket";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

SymMatrix::SymMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1.0;
  return m;
}

SymMatrix SymMatrix::diagonal(std::span<const double> values) {
  SymMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    m.a_[i * m.n_ + i] = values[i];
  }
  return m;
}

SymMatrix SymMatrix::from_rows(std::span<const double> row_major,
                               std::size_t n, double tol_sym) {
  if (n == 0 || row_major.size() != n * n) {
    throw Error(ErrorCode::kNotSquare,
                "expected " + std::to_string(n) + "x" + std::to_string(n) +
                    " entries, got " + std::to_string(row_major.size()));
  }
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double v = row_major[i * n + j];
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::kNonFinite, "matrix entry (" +
                                               std::to_string(i) + "," +
                                               std::to_string(j) +
                                               ") is not finite");
      }
      row += std::abs(v);
    }
    norm = std::max(norm, row);
  }
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.a_[i * n + i] = row_major[i * n + i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const double upper = row_major[i * n + j];
      const double lower = row_major[j * n + i];
      if (std::abs(upper - lower) > tol_sym * norm) {
        throw Error(ErrorCode::kNotSymmetric,
                    "entries (" + std::to_string(i) + "," + std::to_string(j) +
                        ") and (" + std::to_string(j) + "," +
                        std::to_string(i) + ") differ beyond tolerance");
      }
      m.set(i, j, upper == lower ? upper : 0.5 * (upper + lower));
    }
  }
  return m;
}

SymMatrix SymMatrix::from_rows(const std::vector<Vec>& rows, double tol_sym) {
  const std::size_t n = rows.size();
  std::vector<double> flat;
  flat.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) {
      throw Error(ErrorCode::kNotSquare, "row length " +
                                             std::to_string(r.size()) +
                                             " does not match row count " +
                                             std::to_string(n));
    }
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return from_rows(flat, n, tol_sym);
}

void SymMatrix::add(std::size_t i, std::size_t j, double v) {
  a_[i * n_ + j] += v;
  if (i != j) a_[j * n_ + i] += v;
}

double SymMatrix::norm_inf() const {
  double norm = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n_; ++j) row += std::abs(a_[i * n_ + j]);
    norm = std::max(norm, row);
  }
  return norm;
}

double SymMatrix::norm_frobenius() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

SymMatrix SymMatrix::scaled(double c) const {
  SymMatrix m = *this;
  for (double& v : m.a_) v *= c;
  return m;
}

Vec SymMatrix::operator*(std::span<const double> x) const {
  Vec y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n_; ++j) s += a_[i * n_ + j] * x[j];
    y[i] = s;
  }
  return y;
}

double SymMatrix::quadratic_form(std::span<const double> x) const {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n_; ++j) row += a_[i * n_ + j] * x[j];
    s += x[i] * row;
  }
  return s;
}

Vec SpectralData::rotate(std::span<const double> x) const {
  Vec y(source_dim, 0.0);
  for (std::size_t i = 0; i < source_dim; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < source_dim; ++j) s += rotation[i][j] * x[j];
    y[i] = s;
  }
  return y;
}

Vec SpectralData::rotate_back(std::span<const double> y) const {
  Vec x(source_dim, 0.0);
  for (std::size_t i = 0; i < source_dim; ++i) {
    for (std::size_t j = 0; j < source_dim; ++j) x[j] += rotation[i][j] * y[i];
  }
  return x;
}

SymMatrix SpectralData::conjugate(const SymMatrix& h) const {
  const std::size_t n = source_dim;
  // t = h U, then out = U^T t
  std::vector<double> t(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double hik = h(i, k);
      if (hik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) t[i * n + j] += hik * rotation[k][j];
    }
  }
  SymMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += rotation[k][i] * t[k * n + j];
      out.set(i, j, s);
    }
  }
  return out;
}

SymMatrix SpectralData::reconstruct(std::span<const double> diag) const {
  const std::size_t n = source_dim;
  SymMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        s += rotation[k][i] * diag[k] * rotation[k][j];
      }
      out.set(i, j, s);
    }
  }
  return out;
}

namespace {

constexpr int kMaxSweeps = 64;
constexpr double kJacobiTolerance = 1e-13;

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) s += a[i * n + j] * a[i * n + j];
    }
  }
  return std::sqrt(s);
}

// Diagonalizes `a` in place; accumulates rotations into `v` when non-null
// so that A = V diag(a) V^T.
void jacobi(std::vector<double>& a, std::size_t n, std::vector<double>* v) {
  double frob = 0.0;
  for (double x : a) frob += x * x;
  frob = std::sqrt(frob);
  const double target = kJacobiTolerance * frob;

  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a, n) <= target) return;
    if (sweep == kMaxSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        if (v != nullptr) {
          auto& vv = *v;
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = vv[k * n + p];
            const double vkq = vv[k * n + q];
            vv[k * n + p] = c * vkp - s * vkq;
            vv[k * n + q] = s * vkp + c * vkq;
          }
        }
      }
    }
  }
  throw Error(ErrorCode::kNoConvergence,
              "Jacobi iteration did not converge in " +
                  std::to_string(kMaxSweeps) + " sweeps");
}

double min_eigenvalue_2x2(double a, double b, double c) {
  return 0.5 * (a + c) - std::hypot(0.5 * (a - c), b);
}

// Trigonometric solution of the characteristic cubic. Returns false when
// the smallest two eigenvalues nearly coalesce, where acos loses accuracy.
bool min_eigenvalue_3x3(const SymMatrix& m, double& out) {
  const double a00 = m(0, 0), a11 = m(1, 1), a22 = m(2, 2);
  const double a01 = m(0, 1), a02 = m(0, 2), a12 = m(1, 2);
  const double p1 = a01 * a01 + a02 * a02 + a12 * a12;
  if (p1 == 0.0) {
    out = std::min({a00, a11, a22});
    return true;
  }
  const double q = (a00 + a11 + a22) / 3.0;
  const double d0 = a00 - q, d1 = a11 - q, d2 = a22 - q;
  const double p2 = d0 * d0 + d1 * d1 + d2 * d2 + 2.0 * p1;
  const double p = std::sqrt(p2 / 6.0);
  const double b00 = d0 / p, b11 = d1 / p, b22 = d2 / p;
  const double b01 = a01 / p, b02 = a02 / p, b12 = a12 / p;
  const double det_b = b00 * (b11 * b22 - b12 * b12) -
                       b01 * (b01 * b22 - b12 * b02) +
                       b02 * (b01 * b12 - b11 * b02);
  const double r = 0.5 * det_b;
  if (std::abs(r) > 1.0 - 1e-6) return false;
  const double phi = std::acos(r) / 3.0;
  out = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  return true;
}

}  // namespace

SpectralData eig_sym(const SymMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<double> a(m.data().begin(), m.data().end());
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  jacobi(a, n, &v);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a[x * n + x] < a[y * n + y];
  });

  SpectralData out;
  out.source_dim = n;
  out.eigenvalues.resize(n);
  out.rotation.assign(n, Vec(n, 0.0));
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t k = order[r];
    out.eigenvalues[r] = a[k * n + k];
    for (std::size_t j = 0; j < n; ++j) out.rotation[r][j] = v[j * n + k];
  }
  return out;
}

Vec eigenvalues(const SymMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<double> a(m.data().begin(), m.data().end());
  jacobi(a, n, nullptr);
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i * n + i];
  std::sort(out.begin(), out.end());
  return out;
}

double min_eigenvalue(const SymMatrix& m) {
  switch (m.dim()) {
    case 0:
      throw Error(ErrorCode::kInvalidArgument, "empty matrix");
    case 1:
      return m(0, 0);
    case 2:
      return min_eigenvalue_2x2(m(0, 0), m(0, 1), m(1, 1));
    case 3: {
      double out = 0.0;
      if (min_eigenvalue_3x3(m, out)) return out;
      break;
    }
    default:
      break;
  }
  return eigenvalues(m).front();
}

bool is_psd(const SymMatrix& m, double eps) {
  return min_eigenvalue(m) >= -eps * std::max(1.0, m.norm_inf());
}

double det(const SymMatrix& m) {
  const std::size_t n = m.dim();
  for (double v : m.data()) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kNonFinite, "non-finite entry");
  }
  switch (n) {
    case 0:
      return 1.0;
    case 1:
      return m(0, 0);
    case 2:
      return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    case 3:
      return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    default:
      break;
  }
  // LU with partial pivoting.
  std::vector<double> a(m.data().begin(), m.data().end());
  double d = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a[i * n + k]) > std::abs(a[piv * n + k])) piv = i;
    }
    if (a[piv * n + k] == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      d = -d;
    }
    const double pivot = a[k * n + k];
    d *= pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i * n + k] / pivot;
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return d;
}

}  // namespace kanto
