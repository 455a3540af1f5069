#pragma once

// Loewner-order monotonicity of J*ppt: the three equivalent statements
//   (a) J ppt(A) <= J ppt(B)
//   (b) B22^+ <= A22^+
//   (c) rank[(1 - t) A22 + t B22] is constant on [0, 1]
// for Hermitian A <= B, each decided by an independent algorithm, together
// with the auxiliary characterizations they rest on.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "ppt/block.hpp"
#include "ppt/linalg.hpp"
#include "ppt/matrix.hpp"

namespace ppt {

struct AlbertConditions {
  bool psd22 = false;      ///< 0 <= A22
  bool ker_incl = false;   ///< ker A22 <= ker A12
  bool psd_schur = false;  ///< 0 <= A/A22
  bool overall = false;
};

/// Block characterization of 0 <= A for Hermitian A.
AlbertConditions albert_psd_conditions(const BlockMatrix& a,
                                       const ToleranceConfig& tol);

struct PinvMonotonicity {
  bool holds = false;          ///< ker_equal && inertia_equal
  bool ker_equal = false;
  bool inertia_equal = false;  ///< equal negative eigenvalue counts
  bool direct = false;         ///< loewner_leq(pinv D, pinv C)
};

/// D^+ <= C^+ for Hermitian C <= D, decided from kernels and inertia.
/// Throws PreconditionError("C <= D") when the order fails.
PinvMonotonicity pinv_monotone(const Matrix& c, const Matrix& d,
                               const ToleranceConfig& tol);

struct SpectralPathCheck {
  bool no_crossing = true;
  /// False when some eigenvalue of D^-1 C has |Im| > eq_tol.
  bool real_spectrum = true;
  std::vector<Scalar> eigvals;
  /// t = -lambda / (1 - lambda) for the first eigenvalue on (-inf, psd_tol].
  std::optional<double> crossing_t;
};

/// det[(1 - t) C + t D] != 0 on [0, 1] iff sigma(D^-1 C) misses (-inf, 0].
/// Requires Hermitian C, D with D invertible. When C <= D the real parts of
/// the eigenvalues are used and a nonzero imaginary part only clears
/// real_spectrum; otherwise an eigenvalue counts as real only when
/// |Im| <= eq_tol.
SpectralPathCheck spectral_path_check(const Matrix& c, const Matrix& d,
                                      const ToleranceConfig& tol);

enum class RankPathMethod { kernel_inertia, spectral, sampled };

std::string_view method_name(RankPathMethod m);

struct RankPathReport {
  bool constant = true;
  std::optional<std::size_t> common_rank;
  std::optional<double> witness_t;
  RankPathMethod method = RankPathMethod::spectral;
  bool real_spectrum = true;
};

/// Decides whether t -> rank[(1 - t) C + t D] is constant on [0, 1] for
/// Hermitian C <= D.
///   spectral: kernels must agree, then spectral_path_check on the
///             compression to the complement of the common kernel.
///   kernel_inertia: kernels agree and negative eigenvalue counts agree.
///   sampled: rank and inertia are constant on a uniform 101-point grid.
/// Throws PreconditionError("C <= D") when the order fails and
/// `require_order` is set.
RankPathReport rank_path_constant(const Matrix& c, const Matrix& d,
                                  const ToleranceConfig& tol,
                                  RankPathMethod method = RankPathMethod::spectral,
                                  bool require_order = true);

/// Uniform grid 0, 1/(points-1), ..., 1.
std::vector<double> path_grid(std::size_t points = 101);

struct PathSample {
  double t = 0.0;
  std::size_t rank = 0;
  Inertia inertia;
};

/// Rank and inertia of (1 - t) C + t D at each grid point.
std::vector<PathSample> sample_rank_path(const Matrix& c, const Matrix& d,
                                         const ToleranceConfig& tol,
                                         std::size_t points = 101);

/// Minimizer of the smallest singular value of the pencil restricted to the
/// complement of ker C and ker D, found on the grid and refined by golden
/// section to 1e-10.
double locate_rank_drop(const Matrix& c, const Matrix& d,
                        const ToleranceConfig& tol);

struct MonotonicityReport {
  bool hypothesis_ok = false;  ///< A <= B
  bool stmt_a = false;
  bool stmt_b = false;
  RankPathReport stmt_c;
  bool schur_mono = false;
  /// stmt_a == stmt_b == stmt_c.constant, and any true => schur_mono.
  bool consistent = false;
};

/// Evaluates every statement even when A <= B fails (hypothesis_ok is then
/// false). Throws InvalidInput on a partition mismatch and
/// PreconditionError("Hermitian") when A or B is not Hermitian.
MonotonicityReport monotonicity_report(const BlockMatrix& a, const BlockMatrix& b,
                                   const ToleranceConfig& tol);

struct JpptOrderConditions {
  bool pinv_leq = false;      ///< B22^+ <= A22^+
  bool ker_incl = false;      ///< ker(A22^+ - B22^+) <= ker(B12 B22^+ - A12 A22^+)
  bool residual_psd = false;  ///< 0 <= the Schur complement of J ppt(B) - J ppt(A)
  bool overall = false;
};

/// Block conditions equivalent to J ppt(A) <= J ppt(B) for Hermitian A, B.
JpptOrderConditions jppt_order_conditions(const BlockMatrix& a,
                                             const BlockMatrix& b,
                                             const ToleranceConfig& tol);

struct SchurDifferenceIdentity {
  Matrix lhs;            ///< (B - A)/(B - A)22
  Matrix rhs;            ///< B/B22 - A/A22 - correction
  Matrix rhs_alternate;  ///< same with the [A22 + A22 (B22 - A22)^+ A22] form
  double residual = 0.0;
  double alternate_residual = 0.0;
  /// ker(A22^+ - B22^+) <= ker(B12 B22^+ - A12 A22^+) and
  /// ran(B22^+ B21 - A22^+ A21) <= ran(A22^+ - B22^+).
  bool inclusions_ok = false;
};

/// Schur complement of a difference. Requires ker A22 = ker B22,
/// ran A22 = ran B22, ker(B22 - A22) <= ker(B12 - A12) and
/// ran(B21 - A21) <= ran(B22 - A22); a failure throws PreconditionError naming
/// the hypothesis.
SchurDifferenceIdentity schur_difference_identity(const BlockMatrix& a, const BlockMatrix& b,
                               const ToleranceConfig& tol);

/// kernel_inclusion_residual(m, n) <= eq_tol * (1 + ||n||_max).
bool kernel_included(const Matrix& m, const Matrix& n, const ToleranceConfig& tol);
/// ran m <= ran n, via ker n^H <= ker m^H.
bool range_included(const Matrix& m, const Matrix& n, const ToleranceConfig& tol);

}  // namespace ppt
