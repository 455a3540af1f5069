#pragma once

// Field-generic dense primitives: pseudoinverse, rank, inertia, subspaces,
// Loewner predicates, projectors and the EP test.
//
// Tie policy shared by every predicate here: eigenvalues in
// [-psd_tol, psd_tol] are zero for inertia and nonnegative for Loewner tests;
// singular values below rank_rel_tol * sigma_max are zero for rank, kernels,
// ranges and pseudoinverses.

#include <cstddef>
#include <vector>

#include "ppt/matrix.hpp"

namespace ppt {

struct Inertia {
  std::size_t n_pos = 0;
  std::size_t n_neg = 0;
  std::size_t n_zero = 0;

  std::size_t dim() const noexcept { return n_pos + n_neg + n_zero; }
  bool operator==(const Inertia&) const = default;
};

/// Orthonormal basis of a subspace of F^ambient_dim, stored as columns.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  /// Throws InvalidInput if `vectors` has a row count other than ambient_dim.
  SubspaceBasis(std::size_t ambient_dim, Matrix vectors);

  static SubspaceBasis zero(std::size_t ambient_dim);
  static SubspaceBasis full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return vectors_.cols(); }
  const Matrix& vectors() const noexcept { return vectors_; }

  /// Orthogonal projector V V^H onto the subspace.
  Matrix projector() const;

 private:
  std::size_t ambient_dim_ = 0;
  Matrix vectors_;
};

/// Moore-Penrose pseudoinverse via SVD with the relative rank cutoff.
Matrix pinv(const Matrix& m, const ToleranceConfig& tol);
std::size_t rank(const Matrix& m, const ToleranceConfig& tol);
/// Descending singular values.
std::vector<double> singular_values(const Matrix& m);

/// Eigenvalue sign counts of a Hermitian matrix.
Inertia inertia(const Matrix& h, const ToleranceConfig& tol);

/// Ascending eigenvalues of the Hermitian part (H + H^H) / 2.
std::vector<double> hermitian_eigenvalues(const Matrix& h);
/// Smallest eigenvalue of the Hermitian part; +inf for a 0x0 matrix.
double lambda_min(const Matrix& h);
/// Eigenvalues of a general square matrix (unordered).
std::vector<Scalar> eigenvalues(const Matrix& m);

/// Inverse of a square matrix; throws PreconditionError when singular at the
/// rank cutoff.
Matrix inverse(const Matrix& m, const ToleranceConfig& tol);

SubspaceBasis kernel_basis(const Matrix& m, const ToleranceConfig& tol);
SubspaceBasis range_basis(const Matrix& m, const ToleranceConfig& tol);

/// S1 is contained in S2: every basis vector v of S1 has ||(I - P2) v|| <= eq_tol.
bool subspace_leq(const SubspaceBasis& s1, const SubspaceBasis& s2,
                  const ToleranceConfig& tol);
bool subspace_eq(const SubspaceBasis& s1, const SubspaceBasis& s2,
                 const ToleranceConfig& tol);

/// max over an orthonormal basis v of ker(m) of ||n v||_2. Zero means
/// ker m is contained in ker n; the kernel of n is never formed.
double kernel_inclusion_residual(const Matrix& m, const Matrix& n,
                                 const ToleranceConfig& tol);

/// ||M - M^H||_max <= eq_tol * max(1, ||M||_max).
bool is_hermitian(const Matrix& m, const ToleranceConfig& tol);
/// Exactly Hermitian (H + H^H) / 2.
Matrix hermitian_part(const Matrix& m);
/// Im(M) = (M - M^H) / (2i), always Hermitian.
Matrix imag_part(const Matrix& m);

/// H1 <= H2 in the Loewner order: lambda_min(H2 - H1) >= -psd_tol.
/// Throws PreconditionError on non-Hermitian input, InvalidInput on shape.
bool loewner_leq(const Matrix& h1, const Matrix& h2, const ToleranceConfig& tol);
/// 0 <= H.
bool is_psd(const Matrix& h, const ToleranceConfig& tol);

/// ||M M^+ - M^+ M||_max <= eq_tol.
bool is_ep(const Matrix& m, const ToleranceConfig& tol);

/// M M^+ (onto ran M) and M^+ M (onto ran M^H).
Matrix projector_range(const Matrix& m, const ToleranceConfig& tol);
Matrix projector_corange(const Matrix& m, const ToleranceConfig& tol);

/// Throws InvalidInput naming `what` when any entry is NaN or infinite.
void require_finite(const Matrix& m, const char* what);

}  // namespace ppt
