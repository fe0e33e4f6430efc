#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace kanto {

using Vec = std::vector<double>;

// Dense symmetric matrix, row-major storage. Symmetry is maintained by every
// mutator, so (i, j) and (j, i) always hold the same bits.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n);

  static SymMatrix identity(std::size_t n);
  static SymMatrix diagonal(std::span<const double> values);

  // Builds from a row-major n*n array. Relative asymmetry up to tol_sym
  // (measured against the infinity norm) is averaged away; anything larger
  // throws NotSymmetric. Non-finite entries throw NonFinite.
  static SymMatrix from_rows(std::span<const double> row_major, std::size_t n,
                             double tol_sym = 1e-12);
  static SymMatrix from_rows(const std::vector<Vec>& rows,
                             double tol_sym = 1e-12);

  std::size_t dim() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }
  void set(std::size_t i, std::size_t j, double v) {
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = v;
  }
  void add(std::size_t i, std::size_t j, double v);

  std::span<const double> data() const { return a_; }

  double norm_inf() const;
  double norm_frobenius() const;
  SymMatrix scaled(double c) const;

  Vec operator*(std::span<const double> x) const;
  double quadratic_form(std::span<const double> x) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

// A = U^T diag(eigenvalues) U. The rows of `rotation` are eigenvectors.
struct SpectralData {
  Vec eigenvalues;  // ascending
  std::vector<Vec> rotation;
  std::size_t source_dim = 0;

  Vec rotate(std::span<const double> x) const;           // U x
  Vec rotate_back(std::span<const double> y) const;      // U^T y
  SymMatrix conjugate(const SymMatrix& h) const;          // U^T h U
  SymMatrix reconstruct(std::span<const double> diag) const;
};

inline constexpr double kDefaultPsdTolerance = 1e-9;

// Cyclic Jacobi. Converged once the off-diagonal Frobenius norm falls to
// 1e-13 * ||A||_F; throws NoConvergence after 64 sweeps.
SpectralData eig_sym(const SymMatrix& m);

// Eigenvalues only, ascending.
Vec eigenvalues(const SymMatrix& m);

double min_eigenvalue(const SymMatrix& m);

// lambda_min >= -eps * max(1, ||m||_inf)
bool is_psd(const SymMatrix& m, double eps = kDefaultPsdTolerance);

double det(const SymMatrix& m);

}  // namespace kanto
