#include "ppt/varprin.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ppt {
namespace {

void require_column(const Matrix& v, std::size_t n, const char* what) {
  if (v.cols() != 1 || v.rows() != n) {
    throw InvalidInput(std::string(what) + " must be a column of length " +
                       std::to_string(n) + ", got " + std::to_string(v.rows()) +
                       "x" + std::to_string(v.cols()));
  }
  require_finite(v, what);
}

double vector_norm(const Matrix& v) { return v.norm_fro(); }

// Hypotheses shared by both minimization principles.
void require_minimization_hypotheses(const BlockMatrix& a,
                                     const ToleranceConfig& tol) {
  if (!is_hermitian(a.data(), tol)) {
    throw PreconditionError("Hermitian", "A is not Hermitian");
  }
  if (!is_psd(a.a22(), tol)) {
    throw PreconditionError("0 <= A22", "lambda_min(A22) = " +
                                            std::to_string(lambda_min(a.a22())));
  }
  const double r = kernel_certificate(a, tol);
  if (r > tol.eq_tol * certificate_scale(a)) {
    throw PreconditionError(kKerA22InKerA12,
                            "||A12 - A12 A22^+ A22|| = " + std::to_string(r));
  }
}

// Re (z, M z) after checking the imaginary part is rounding noise.
double real_quadratic_form(const Matrix& m, const Matrix& z, double scale,
                           const ToleranceConfig& tol) {
  const Scalar q = inner(z, m * z);
  const double zn = vector_norm(z);
  if (std::abs(q.imag()) > tol.eq_tol * scale * std::max(1.0, zn * zn)) {
    throw PreconditionError("Hermitian", "quadratic form has imaginary part " +
                                             std::to_string(q.imag()));
  }
  return q.real();
}

}  // namespace

AffineSet::AffineSet(Matrix particular, SubspaceBasis kernel)
    : particular_(std::move(particular)), kernel_(std::move(kernel)) {
  if (particular_.cols() != 1 || particular_.rows() != kernel_.ambient_dim()) {
    throw InvalidInput("affine set particular vector does not match its kernel");
  }
}

bool AffineSet::contains(const Matrix& v, const ToleranceConfig& tol) const {
  require_column(v, particular_.rows(), "vector");
  const Matrix d = v - particular_;
  const Matrix& k = kernel_.vectors();
  const Matrix off = k.cols() == 0 ? d : d - k * (k.adjoint() * d);
  return vector_norm(off) <= tol.eq_tol;
}

Matrix AffineSet::point(const Matrix& coeffs) const {
  require_column(coeffs, kernel_.dim(), "coefficients");
  if (kernel_.dim() == 0) return particular_;
  return particular_ + kernel_.vectors() * coeffs;
}

Minimum schur_min(const BlockMatrix& a, const Matrix& x1, const ToleranceConfig& tol) {
  require_column(x1, a.n1(), "x1");
  require_minimization_hypotheses(a, tol);
  const Matrix a22 = a.a22();
  Minimum out;
  out.value = real_quadratic_form(schur_complement(a, tol), x1, certificate_scale(a), tol);
  out.minimizers = AffineSet(-(pinv(a22, tol) * a.a21() * x1), kernel_basis(a22, tol));
  return out;
}

double objective(const BlockMatrix& a, const Matrix& x1, const Matrix& x2,
                 const Matrix& y2, const ToleranceConfig& tol) {
  require_column(x1, a.n1(), "x1");
  require_column(x2, a.n2(), "x2");
  require_column(y2, a.n2(), "y2");
  const Matrix z = vcat(x1, x2);
  const double quad = real_quadratic_form(a.data(), z, certificate_scale(a), tol);
  const Matrix a22 = a.a22();
  const Scalar lin = inner(y2, projector_range(a22, tol) * x2);
  return 0.5 * quad - lin.real();
}

Minimum ppt_min(const BlockMatrix& a, const Matrix& x1, const Matrix& y2,
                const ToleranceConfig& tol) {
  require_column(x1, a.n1(), "x1");
  require_column(y2, a.n2(), "y2");
  require_minimization_hypotheses(a, tol);
  const Matrix a22 = a.a22();
  const Matrix a22p = pinv(a22, tol);
  const BlockMatrix j = jppt(a, tol);
  Minimum out;
  out.value = 0.5 * real_quadratic_form(j.data(), vcat(x1, y2),
                                        certificate_scale(j), tol);
  out.minimizers =
      AffineSet(a22p * y2 - a22p * a.a21() * x1, kernel_basis(a22, tol));
  return out;
}

SaddleSolution solve_saddle(const BlockMatrix& a, const Matrix& x1, const Matrix& y2,
                            const ToleranceConfig& tol) {
  require_column(x1, a.n1(), "x1");
  require_column(y2, a.n2(), "y2");
  const double slack = tol.eq_tol * certificate_scale(a);
  if (const double r = kernel_certificate(a, tol); r > slack) {
    throw PreconditionError(kKerA22InKerA12,
                            "||A12 - A12 A22^+ A22|| = " + std::to_string(r));
  }
  if (const double r = range_certificate(a, tol); r > slack) {
    throw PreconditionError(kRanA21InRanA22,
                            "||A21 - A22 A22^+ A21|| = " + std::to_string(r));
  }

  const Matrix a21 = a.a21(), a22 = a.a22();
  const Matrix a22p = pinv(a22, tol);
  const Matrix rhs = y2 - a21 * x1;
  const double outside = max_abs_diff(rhs, a22 * (a22p * rhs));
  const double vec_scale =
      std::max({1.0, x1.empty() ? 0.0 : x1.norm_max(), y2.empty() ? 0.0 : y2.norm_max()});
  if (outside > slack * vec_scale) {
    throw NoSolutionError(outside, "y2 - A21 x1 is not in ran A22: residual " +
                                       std::to_string(outside));
  }

  SaddleSolution s;
  s.particular_x2 = a22p * rhs;
  s.y1 = schur_complement(a, tol) * x1 + a.a12() * (a22p * y2);
  s.x2_set = AffineSet(s.particular_x2, kernel_basis(a22, tol));
  s.residual = max_abs_diff(a.data() * vcat(x1, s.particular_x2), vcat(s.y1, y2));
  s.packaging_residual = max_abs_diff(jppt(a, tol).data() * vcat(x1, y2),
                                      vcat(s.y1, -s.particular_x2));
  return s;
}

}  // namespace ppt
