#pragma once

#include <Eigen/Dense>

#include "qfc/errors.hpp"

namespace qfc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Matrix exponential e^{A t} by scaling-and-squaring with a fixed-order
/// truncated Taylor series. A must be square, t finite.
Matrix mat_exp(const Matrix& A, double t);

/// Operator norm induced by the vector max norm: the maximum absolute
/// row sum. Returns 0 for an empty matrix.
double induced_max_norm(const Matrix& M);

/// Largest eigenvalue magnitude of a square matrix (dense QR iteration).
double spectral_radius(const Matrix& M);

/// Stabilizing solution of the discrete algebraic Riccati equation
///   P = A'PA - A'PB (Rw + B'PB)^{-1} B'PA + Q,
/// computed by iterating the Riccati recursion from P0 = Q until successive
/// iterates differ by <= 1e-12 in max norm (cap 10^6 iterations).
Matrix solve_dare(const Matrix& A, const Matrix& B, const Matrix& Q, const Matrix& Rw);

/// Moore-Penrose pseudo-inverse (M'M)^{-1} M' of a full-column-rank matrix.
Matrix pseudo_inverse(const Matrix& M);

/// Numerical rank: singular values above tol relative to the largest one.
Eigen::Index numerical_rank(const Matrix& M, double tol = 1e-9);

/// True when every entry is finite.
bool all_finite(const Matrix& M);

}  // namespace qfc
