#pragma once

#include <span>

#include "kanto/matrix.hpp"
#include "kanto/spd.hpp"

namespace kanto {

// K(x) = (x^T A x)(x^T A^{-1} x)
double k_value(const MatrixSpec& spec, std::span<const double> x);

// f(x) = K(x) / 4 = q_A(x) q_{A^{-1}}(x) with q_A(x) = x^T A x / 2.
double f_value(const MatrixSpec& spec, std::span<const double> x);

// Gradient of f (not K): q_{A^{-1}}(x) A x + q_A(x) A^{-1} x.
Vec k_gradient(const MatrixSpec& spec, std::span<const double> x);

// Hessian of f, assembled term by term:
//   q_A(x) A^{-1} + q_{A^{-1}}(x) A + A x x^T A^{-1} + A^{-1} x x^T A.
SymMatrix k_hessian(const MatrixSpec& spec, std::span<const double> x);

struct KantorovichBound {
  double lhs = 0.0;          // (x^T A x)(x^T A^{-1} x)
  double rhs = 0.0;          // (l1 + ln)^2 / (4 l1 ln) * ||x||^4
  bool holds = false;        // lhs <= rhs * (1 + 1e-12)
  // Variant with (l1^2 + ln^2) in place of (l1 + ln)^2, kept for comparison.
  double rhs_squares = 0.0;
  bool holds_squares = false;
};

// Throws ZeroVector for x = 0.
KantorovichBound kantorovich_bound_check(const MatrixSpec& spec,
                                         std::span<const double> x);

// Central finite-difference Hessian of f built from k_gradient, with steps
// h_i = step * (1 + |x_i|). Backs the CLI self-check.
SymMatrix fd_hessian(const MatrixSpec& spec, std::span<const double> x,
                     double step = 1e-5);

// max_ij |H - G| / max(max_ij |H|, tiny)
double max_relative_deviation(const SymMatrix& h, const SymMatrix& g);

}  // namespace kanto
