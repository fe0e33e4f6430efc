#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "kanto/matrix.hpp"

namespace kanto {

// A validated symmetric positive definite matrix together with its spectral
// decomposition, its spectrally-formed inverse and kappa = lambda_n/lambda_1.
struct MatrixSpec {
  SymMatrix matrix;
  SymMatrix inverse;
  SpectralData spectral;
  double kappa = 1.0;

  std::size_t dim() const { return matrix.dim(); }
  double lambda_min() const { return spectral.eigenvalues.front(); }
  double lambda_max() const { return spectral.eigenvalues.back(); }
};

inline constexpr double kDefaultSymmetryTolerance = 1e-12;
inline constexpr double kDefaultDefinitenessTolerance = 1e-12;

// Throws NotSquare, NonFinite, NotSymmetric or NotPositiveDefinite.
MatrixSpec validate_spd(std::span<const double> row_major, std::size_t n,
                        double tol_sym = kDefaultSymmetryTolerance,
                        double tol_pd = kDefaultDefinitenessTolerance);
MatrixSpec validate_spd(const std::vector<Vec>& rows,
                        double tol_sym = kDefaultSymmetryTolerance,
                        double tol_pd = kDefaultDefinitenessTolerance);
MatrixSpec validate_spd(const SymMatrix& m,
                        double tol_pd = kDefaultDefinitenessTolerance);

// diag(eigenvalues); the spectral data is set directly (U = I) and the
// eigenvalues must already be positive and ascending.
MatrixSpec spec_from_eigenvalues(std::span<const double> ascending);

// Q^T diag(eigenvalues) Q with Q Haar-ish orthogonal (Gram-Schmidt on a
// Gaussian matrix). Used by the CLI self-checks and by tests.
SymMatrix random_orthogonal_conjugate(std::span<const double> eigenvalues,
                                      std::mt19937_64& rng);
std::vector<Vec> random_orthogonal(std::size_t n, std::mt19937_64& rng);

// Random SPD matrix with kappa drawn log-uniformly from [kappa_lo, kappa_hi];
// the remaining eigenvalues are log-uniform in between.
MatrixSpec random_spd(std::size_t n, double kappa_lo, double kappa_hi,
                      std::mt19937_64& rng);

}  // namespace kanto
