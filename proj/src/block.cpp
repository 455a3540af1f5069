#include "ppt/block.hpp"

#include <string>

namespace ppt {

BlockMatrix::BlockMatrix(Matrix data, std::size_t n1, std::size_t n2)
    : data_(std::move(data)), n1_(n1), n2_(n2) {
  if (data_.rows() != n1 + n2 || data_.cols() != n1 + n2) {
    throw InvalidInput("partition (" + std::to_string(n1) + ", " +
                       std::to_string(n2) + ") does not tile a " +
                       std::to_string(data_.rows()) + "x" +
                       std::to_string(data_.cols()) + " matrix");
  }
}

BlockMatrix BlockMatrix::from_blocks(const Matrix& a11, const Matrix& a12,
                                     const Matrix& a21, const Matrix& a22) {
  if (!a11.is_square() || !a22.is_square()) {
    throw InvalidInput("diagonal blocks must be square");
  }
  return BlockMatrix(assemble(a11, a12, a21, a22), a11.rows(), a22.rows());
}

BlockMatrix convex_combination(const BlockMatrix& a, const BlockMatrix& b,
                               double t) {
  if (!a.same_partition(b)) throw InvalidInput("partition mismatch");
  return BlockMatrix((1.0 - t) * a.data() + t * b.data(), a.n1(), a.n2());
}

BlockMatrix operator-(const BlockMatrix& b, const BlockMatrix& a) {
  if (!a.same_partition(b)) throw InvalidInput("partition mismatch");
  return BlockMatrix(b.data() - a.data(), a.n1(), a.n2());
}

double certificate_scale(const BlockMatrix& a) {
  return 1.0 + a.data().norm_max();
}

Matrix signature_matrix(std::size_t n1, std::size_t n2) {
  Matrix j = Matrix::identity(n1 + n2);
  for (std::size_t i = n1; i < n1 + n2; ++i) j.set(i, i, -1.0);
  return j;
}

Matrix schur_complement(const BlockMatrix& a, const ToleranceConfig& tol) {
  return a.a11() - a.a12() * pinv(a.a22(), tol) * a.a21();
}

BlockMatrix gppt(const BlockMatrix& a, const ToleranceConfig& tol) {
  const Matrix a22p = pinv(a.a22(), tol);
  const Matrix a12 = a.a12();
  const Matrix a21 = a.a21();
  const Matrix schur = a.a11() - a12 * a22p * a21;
  return BlockMatrix::from_blocks(schur, a12 * a22p, -(a22p * a21), a22p);
}

BlockMatrix jppt(const BlockMatrix& a, const ToleranceConfig& tol) {
  const BlockMatrix p = gppt(a, tol);
  return BlockMatrix(signature_matrix(a.n1(), a.n2()) * p.data(), a.n1(), a.n2());
}

BlockMatrix hat_embedding(const BlockMatrix& a, const ToleranceConfig& tol) {
  const std::size_t n1 = a.n1(), n2 = a.n2(), n = a.n();
  const Matrix a22 = a.a22();
  const Matrix a22p = pinv(a22, tol);
  Matrix hat(n + n2, n + n2, a.field());
  hat.set_block(0, 0, a.a11());
  hat.set_block(0, n, a.a12());
  hat.set_block(n1, n, -(a22p * a22));
  hat.set_block(n, 0, a.a21());
  hat.set_block(n, n1, -(a22 * a22p));
  hat.set_block(n, n, a22);
  return BlockMatrix(std::move(hat), n, n2);
}

namespace {

void require_ep_a22(const BlockMatrix& a, const ToleranceConfig& tol) {
  if (!is_ep(a.a22(), tol)) {
    throw PreconditionError("A22 is EP", "A22 A22^+ != A22^+ A22");
  }
}

}  // namespace

EpSchurCongruence ep_congruence_schur(const BlockMatrix& a,
                                      const ToleranceConfig& tol) {
  require_ep_a22(a, tol);
  const Matrix a22p = pinv(a.a22(), tol);
  EpSchurCongruence out;
  out.vector_map = vcat(Matrix::identity(a.n1()), -(a22p * a.a21()));
  const Matrix& v = out.vector_map;
  const Matrix schur = a.a11() - a.a12() * a22p * a.a21();
  out.schur_identity_residual = max_abs_diff(schur, v.adjoint() * a.data() * v);
  out.im_identity_residual =
      max_abs_diff(imag_part(schur), v.adjoint() * imag_part(a.data()) * v);
  return out;
}

JpptImCongruence jppt_im_congruence(const BlockMatrix& a,
                                    const ToleranceConfig& tol) {
  require_ep_a22(a, tol);
  const Matrix a22p = pinv(a.a22(), tol);
  JpptImCongruence out;
  out.congruence_map = assemble(Matrix::identity(a.n1()), Matrix(a.n1(), a.n2()),
                                -(a22p * a.a21()), a22p);
  const Matrix& w = out.congruence_map;
  out.residual = max_abs_diff(imag_part(jppt(a, tol).data()),
                              w.adjoint() * imag_part(a.data()) * w);
  return out;
}

double kernel_certificate(const BlockMatrix& a, const ToleranceConfig& tol) {
  const Matrix a12 = a.a12();
  const Matrix a22 = a.a22();
  return max_abs_diff(a12, a12 * pinv(a22, tol) * a22);
}

double range_certificate(const BlockMatrix& a, const ToleranceConfig& tol) {
  const Matrix a21 = a.a21();
  const Matrix a22 = a.a22();
  return max_abs_diff(a21, a22 * pinv(a22, tol) * a21);
}

AitkenFactors block_diagonalize(const BlockMatrix& a, const ToleranceConfig& tol) {
  const double slack = tol.eq_tol * certificate_scale(a);
  if (const double r = kernel_certificate(a, tol); r > slack) {
    throw PreconditionError(kKerA22InKerA12,
                            "||A12 - A12 A22^+ A22|| = " + std::to_string(r));
  }
  if (const double r = range_certificate(a, tol); r > slack) {
    throw PreconditionError(kRanA21InRanA22,
                            "||A21 - A22 A22^+ A21|| = " + std::to_string(r));
  }
  const std::size_t n1 = a.n1(), n2 = a.n2();
  const Matrix a22p = pinv(a.a22(), tol);
  AitkenFactors f;
  f.x = a.a12() * a22p;
  f.y = a22p * a.a21();
  f.z = a.a22();
  f.w = a.a11() - f.x * a.a21();

  const Matrix i1 = Matrix::identity(n1), i2 = Matrix::identity(n2);
  const Matrix z12(n1, n2), z21(n2, n1);
  const Matrix diag = assemble(f.w, z12, z21, f.z);
  const Matrix left = assemble(i1, -f.x, z21, i2);
  const Matrix right = assemble(i1, z12, -f.y, i2);
  f.identity_residual = max_abs_diff(left * a.data() * right, diag);
  const Matrix left_inv = assemble(i1, f.x, z21, i2);
  const Matrix right_inv = assemble(i1, z12, f.y, i2);
  f.reassembly_residual = max_abs_diff(left_inv * diag * right_inv, a.data());
  return f;
}

}  // namespace ppt
