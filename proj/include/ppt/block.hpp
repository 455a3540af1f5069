#pragma once

// 2x2 block-partitioned matrices and the transforms taken with respect to the
// (2,2) block: generalized Schur complement, principal pivot transform (ppt),
// its signature-symmetrized form J*ppt, the bordered embedding whose Schur
// complement is J*ppt, EP congruence formulas, and Aitken block
// diagonalization.

#include <cstddef>

#include "ppt/linalg.hpp"
#include "ppt/matrix.hpp"

namespace ppt {

/// An n x n matrix with a declared (n1, n2) partition, n1 + n2 = n.
class BlockMatrix {
 public:
  BlockMatrix() = default;
  /// Throws InvalidInput unless `data` is (n1 + n2) x (n1 + n2).
  BlockMatrix(Matrix data, std::size_t n1, std::size_t n2);

  static BlockMatrix from_blocks(const Matrix& a11, const Matrix& a12,
                                 const Matrix& a21, const Matrix& a22);

  std::size_t n1() const noexcept { return n1_; }
  std::size_t n2() const noexcept { return n2_; }
  std::size_t n() const noexcept { return n1_ + n2_; }
  Field field() const noexcept { return data_.field(); }
  const Matrix& data() const noexcept { return data_; }

  Matrix a11() const { return data_.block(0, 0, n1_, n1_); }
  Matrix a12() const { return data_.block(0, n1_, n1_, n2_); }
  Matrix a21() const { return data_.block(n1_, 0, n2_, n1_); }
  Matrix a22() const { return data_.block(n1_, n1_, n2_, n2_); }

  bool same_partition(const BlockMatrix& other) const noexcept {
    return n1_ == other.n1_ && n2_ == other.n2_;
  }

  bool operator==(const BlockMatrix&) const = default;

 private:
  Matrix data_;
  std::size_t n1_ = 0;
  std::size_t n2_ = 0;
};

/// (1 - t) A + t B; partitions must match.
BlockMatrix convex_combination(const BlockMatrix& a, const BlockMatrix& b,
                               double t);
BlockMatrix operator-(const BlockMatrix& b, const BlockMatrix& a);

/// Residual scale for block certificates: 1 + ||A||_max.
double certificate_scale(const BlockMatrix& a);

/// J = diag(I_n1, -I_n2).
Matrix signature_matrix(std::size_t n1, std::size_t n2);

/// A/A22 = A11 - A12 A22^+ A21.
Matrix schur_complement(const BlockMatrix& a, const ToleranceConfig& tol);

/// ppt(A) = [A/A22, A12 A22^+; -A22^+ A21, A22^+]. Total: defined for every A.
BlockMatrix gppt(const BlockMatrix& a, const ToleranceConfig& tol);

/// J ppt(A) = [A/A22, A12 A22^+; A22^+ A21, -A22^+], computed as J * gppt(A).
BlockMatrix jppt(const BlockMatrix& a, const ToleranceConfig& tol);

/// The (n + n2) x (n + n2) bordered matrix, partition (n, n2),
///   [ A11   0            A12        ]
///   [ 0     0           -A22^+ A22  ]
///   [ A21  -A22 A22^+    A22        ]
/// whose Schur complement with respect to its trailing A22 is J ppt(A).
BlockMatrix hat_embedding(const BlockMatrix& a, const ToleranceConfig& tol);

struct EpSchurCongruence {
  Matrix vector_map;  ///< V = [I; -A22^+ A21]
  double schur_identity_residual = 0.0;  ///< ||A/A22 - V^H A V||_max
  double im_identity_residual = 0.0;     ///< ||Im(A/A22) - V^H Im(A) V||_max
};

/// Requires A22 to be EP; throws PreconditionError("A22 is EP") otherwise.
EpSchurCongruence ep_congruence_schur(const BlockMatrix& a,
                                      const ToleranceConfig& tol);

struct JpptImCongruence {
  Matrix congruence_map;  ///< W = [I, 0; -A22^+ A21, A22^+]
  double residual = 0.0;  ///< ||Im(J ppt A) - W^H Im(A) W||_max
};

/// Requires A22 to be EP.
JpptImCongruence jppt_im_congruence(const BlockMatrix& a,
                                    const ToleranceConfig& tol);

struct AitkenFactors {
  Matrix x;  ///< A12 A22^+
  Matrix y;  ///< A22^+ A21
  Matrix w;  ///< A/A22
  Matrix z;  ///< A22
  /// ||[I, -X; 0, I] A [I, 0; -Y, I] - diag(W, Z)||_max
  double identity_residual = 0.0;
  /// ||[I, X; 0, I] diag(W, Z) [I, 0; Y, I] - A||_max
  double reassembly_residual = 0.0;
};

/// Succeeds iff ker A22 <= ker A12 and ran A21 <= ran A22, certified by
/// ||A12 - A12 A22^+ A22|| and ||A21 - A22 A22^+ A21|| at eq_tol * (1 + ||A||).
/// On failure throws PreconditionError whose hypothesis() names the inclusion.
AitkenFactors block_diagonalize(const BlockMatrix& a, const ToleranceConfig& tol);

/// ||A12 - A12 A22^+ A22||_max: zero iff ker A22 <= ker A12.
double kernel_certificate(const BlockMatrix& a, const ToleranceConfig& tol);
/// ||A21 - A22 A22^+ A21||_max: zero iff ran A21 <= ran A22.
double range_certificate(const BlockMatrix& a, const ToleranceConfig& tol);

inline constexpr const char* kKerA22InKerA12 = "ker A22 <= ker A12";
inline constexpr const char* kRanA21InRanA22 = "ran A21 <= ran A22";

}  // namespace ppt
