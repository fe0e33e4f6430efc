#include "kanto/spd.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kanto/error.hpp"

namespace kanto {

namespace {

SymMatrix spectral_inverse(const SpectralData& s) {
  Vec inv(s.eigenvalues.size());
  for (std::size_t i = 0; i < inv.size(); ++i) inv[i] = 1.0 / s.eigenvalues[i];
  return s.reconstruct(inv);
}

}  // namespace

MatrixSpec validate_spd(const SymMatrix& m, double tol_pd) {
  MatrixSpec spec;
  spec.matrix = m;
  spec.spectral = eig_sym(m);
  const double lo = spec.spectral.eigenvalues.front();
  const double hi = spec.spectral.eigenvalues.back();
  if (!(hi > 0.0) || lo <= tol_pd * hi) {
    std::ostringstream os;
    os.precision(17);
    os << "matrix is not positive definite (smallest eigenvalue " << lo
       << ", largest " << hi << ")";
    throw Error(ErrorCode::kNotPositiveDefinite, os.str());
  }
  spec.inverse = spectral_inverse(spec.spectral);
  spec.kappa = hi / lo;
  return spec;
}

MatrixSpec validate_spd(std::span<const double> row_major, std::size_t n,
                        double tol_sym, double tol_pd) {
  return validate_spd(SymMatrix::from_rows(row_major, n, tol_sym), tol_pd);
}

MatrixSpec validate_spd(const std::vector<Vec>& rows, double tol_sym,
                        double tol_pd) {
  return validate_spd(SymMatrix::from_rows(rows, tol_sym), tol_pd);
}

MatrixSpec spec_from_eigenvalues(std::span<const double> ascending) {
  const std::size_t n = ascending.size();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "no eigenvalues");
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(ascending[i]) || ascending[i] <= 0.0) {
      throw Error(ErrorCode::kNotPositiveDefinite,
                  "eigenvalues must be positive and finite");
    }
    if (i > 0 && ascending[i] < ascending[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument, "eigenvalues must be ascending");
    }
  }
  MatrixSpec spec;
  spec.matrix = SymMatrix::diagonal(ascending);
  Vec inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = 1.0 / ascending[i];
  spec.inverse = SymMatrix::diagonal(inv);
  spec.spectral.source_dim = n;
  spec.spectral.eigenvalues.assign(ascending.begin(), ascending.end());
  spec.spectral.rotation.assign(n, Vec(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) spec.spectral.rotation[i][i] = 1.0;
  spec.kappa = ascending.back() / ascending.front();
  return spec;
}

std::vector<Vec> random_orthogonal(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<Vec> q(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (;;) {
      for (auto& v : q[i]) v = gauss(rng);
      for (std::size_t k = 0; k < i; ++k) {
        double dot = 0.0;
        for (std::size_t j = 0; j < n; ++j) dot += q[i][j] * q[k][j];
        for (std::size_t j = 0; j < n; ++j) q[i][j] -= dot * q[k][j];
      }
      double norm = 0.0;
      for (double v : q[i]) norm += v * v;
      norm = std::sqrt(norm);
      if (norm < 1e-8) continue;
      for (auto& v : q[i]) v /= norm;
      break;
    }
  }
  return q;
}

SymMatrix random_orthogonal_conjugate(std::span<const double> eigenvalues,
                                      std::mt19937_64& rng) {
  SpectralData s;
  s.source_dim = eigenvalues.size();
  s.rotation = random_orthogonal(s.source_dim, rng);
  return s.reconstruct(eigenvalues);
}

MatrixSpec random_spd(std::size_t n, double kappa_lo, double kappa_hi,
                      std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double kappa =
      std::exp(std::log(kappa_lo) + unit(rng) * (std::log(kappa_hi) - std::log(kappa_lo)));
  const double scale = std::exp(std::log(0.1) + unit(rng) * std::log(100.0));
  Vec lambda(n);
  lambda.front() = 1.0;
  if (n > 1) lambda.back() = kappa;
  for (std::size_t i = 1; i + 1 < n; ++i) lambda[i] = std::pow(kappa, unit(rng));
  std::sort(lambda.begin(), lambda.end());
  for (auto& l : lambda) l *= scale;
  return validate_spd(random_orthogonal_conjugate(lambda, rng));
}

}  // namespace kanto
