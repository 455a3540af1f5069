#pragma once

// Jensen gaps for J*ppt, the Schur complement and the pseudoinverse along a
// segment of positive semidefinite matrices whose trailing blocks share a
// kernel. The first two are concave there (gap >= 0), the last convex.

#include "ppt/block.hpp"
#include "ppt/linalg.hpp"
#include "ppt/matrix.hpp"

namespace ppt {

struct JensenGap {
  Matrix gap;
  double lambda_min = 0.0;  ///< of the Hermitian part of gap
  bool psd = false;         ///< lambda_min >= -psd_tol
};

/// J ppt((1 - t) A + t B) - [(1 - t) J ppt(A) + t J ppt(B)].
/// Requires Hermitian 0 <= A, 0 <= B with the same partition and
/// ker A22 = ker B22; t in [0, 1].
JensenGap jppt_concavity_gap(const BlockMatrix& a, const BlockMatrix& b, double t,
                             const ToleranceConfig& tol);

/// M/M22 - [(1 - t) A/A22 + t B/B22] with M = (1 - t) A + t B; same
/// requirements as jppt_concavity_gap.
JensenGap schur_concavity_gap(const BlockMatrix& a, const BlockMatrix& b, double t,
                              const ToleranceConfig& tol);

/// (1 - t) C^+ + t D^+ - [(1 - t) C + t D]^+ for Hermitian 0 <= C, 0 <= D with
/// ker C = ker D.
JensenGap pinv_convexity_gap(const Matrix& c, const Matrix& d, double t,
                             const ToleranceConfig& tol);

/// diag(0_1, C) with partition (1, dim C). Its J ppt carries -C^+ in the
/// trailing block, so the pseudoinverse gap of C, D is the trailing block of
/// the J ppt gap of the bordered pair.
BlockMatrix border_for_pinv(const Matrix& c);

}  // namespace ppt
