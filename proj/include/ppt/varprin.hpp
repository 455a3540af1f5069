#pragma once

// Minimization principles represented by the Schur complement and by J*ppt,
// and the closed-form solution of the mixed block system
//   A [x1; x2] = [y1; y2]   with x1, y2 given and y1, x2 sought.
// Vectors are column matrices.

#include <stdexcept>

#include "ppt/block.hpp"
#include "ppt/linalg.hpp"
#include "ppt/matrix.hpp"

namespace ppt {

/// {particular} + span(kernel).
class AffineSet {
 public:
  AffineSet() = default;
  /// Throws InvalidInput unless `particular` is a column of the kernel's
  /// ambient dimension.
  AffineSet(Matrix particular, SubspaceBasis kernel);

  const Matrix& particular() const noexcept { return particular_; }
  const SubspaceBasis& kernel() const noexcept { return kernel_; }

  /// ||(I - P_kernel)(v - particular)|| <= eq_tol.
  bool contains(const Matrix& v, const ToleranceConfig& tol) const;
  /// particular + kernel_vectors * coeffs.
  Matrix point(const Matrix& coeffs) const;

 private:
  Matrix particular_;
  SubspaceBasis kernel_;
};

struct Minimum {
  double value = 0.0;
  AffineSet minimizers;
};

/// y2 - A21 x1 is outside ran A22, so the block system has no solution.
class NoSolutionError : public std::runtime_error {
 public:
  NoSolutionError(double residual, const std::string& detail)
      : std::runtime_error(detail), residual_(residual) {}
  /// ||(I - A22 A22^+)(y2 - A21 x1)||_max
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// min over x2 of ([x1; x2], A [x1; x2]) = (x1, (A/A22) x1), attained exactly
/// on {-A22^+ A21 x1} + ker A22. Requires A Hermitian, 0 <= A22 and
/// ker A22 <= ker A12.
Minimum schur_min(const BlockMatrix& a, const Matrix& x1, const ToleranceConfig& tol);

/// 1/2 ([x1; x2], A [x1; x2]) - Re(y2, A22 A22^+ x2). Throws
/// PreconditionError("Hermitian") when the quadratic term is not real within
/// eq_tol * (1 + ||A||) * ||[x1; x2]||^2.
double objective(const BlockMatrix& a, const Matrix& x1, const Matrix& x2,
                 const Matrix& y2, const ToleranceConfig& tol);

/// min over x2 of objective(A, x1, x2, y2) = 1/2 (z, J ppt(A) z), z = [x1; y2],
/// attained on {-A22^+ A21 x1 + A22^+ y2} + ker A22. Same requirements as
/// schur_min.
Minimum ppt_min(const BlockMatrix& a, const Matrix& x1, const Matrix& y2,
                const ToleranceConfig& tol);

struct SaddleSolution {
  Matrix y1;
  AffineSet x2_set;
  Matrix particular_x2;
  /// ||A [x1; x2_0] - [y1; y2]||_max
  double residual = 0.0;
  /// ||J ppt(A) [x1; y2] - [y1; -x2_0]||_max
  double packaging_residual = 0.0;
};

/// Every solution (y1, x2) of the block system. Requires ran A21 <= ran A22
/// and ker A22 <= ker A12 (PreconditionError otherwise); no definiteness is
/// assumed. Throws NoSolutionError when y2 - A21 x1 is not in ran A22 within
/// eq_tol * (1 + ||A||) * max(1, ||x1||, ||y2||).
SaddleSolution solve_saddle(const BlockMatrix& a, const Matrix& x1, const Matrix& y2,
                            const ToleranceConfig& tol);

}  // namespace ppt
