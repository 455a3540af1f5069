#include "ppt/convexity.hpp"

#include <cmath>
#include <string>

namespace ppt {
namespace {

void require_unit_interval(double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw InvalidInput("t must lie in [0, 1], got " + std::to_string(t));
  }
}

void require_psd(const Matrix& m, const char* name, const ToleranceConfig& tol) {
  if (!is_hermitian(m, tol)) {
    throw PreconditionError("Hermitian", std::string(name) + " is not Hermitian");
  }
  if (!is_psd(m, tol)) {
    throw PreconditionError(std::string("0 <= ") + name,
                            "lambda_min = " + std::to_string(lambda_min(m)));
  }
}

void require_same_kernel(const Matrix& c, const Matrix& d, const char* hypothesis,
                         const ToleranceConfig& tol) {
  if (!subspace_eq(kernel_basis(c, tol), kernel_basis(d, tol), tol)) {
    throw PreconditionError(hypothesis, "kernels differ");
  }
}

void require_same_kernel_pair(const BlockMatrix& a, const BlockMatrix& b, double t,
                              const ToleranceConfig& tol) {
  require_unit_interval(t);
  if (!a.same_partition(b)) throw InvalidInput("partition mismatch");
  require_psd(a.data(), "A", tol);
  require_psd(b.data(), "B", tol);
  require_same_kernel(a.a22(), b.a22(), "ker A22 = ker B22", tol);
}

JensenGap finish(Matrix gap, const ToleranceConfig& tol) {
  JensenGap out;
  out.lambda_min = lambda_min(gap);
  out.psd = out.lambda_min >= -tol.psd_tol;
  out.gap = std::move(gap);
  return out;
}

}  // namespace

JensenGap jppt_concavity_gap(const BlockMatrix& a, const BlockMatrix& b, double t,
                             const ToleranceConfig& tol) {
  require_same_kernel_pair(a, b, t, tol);
  const Matrix mid = jppt(convex_combination(a, b, t), tol).data();
  const Matrix chord = (1.0 - t) * jppt(a, tol).data() + t * jppt(b, tol).data();
  return finish(mid - chord, tol);
}

JensenGap schur_concavity_gap(const BlockMatrix& a, const BlockMatrix& b, double t,
                              const ToleranceConfig& tol) {
  require_same_kernel_pair(a, b, t, tol);
  const Matrix mid = schur_complement(convex_combination(a, b, t), tol);
  const Matrix chord =
      (1.0 - t) * schur_complement(a, tol) + t * schur_complement(b, tol);
  return finish(mid - chord, tol);
}

JensenGap pinv_convexity_gap(const Matrix& c, const Matrix& d, double t,
                             const ToleranceConfig& tol) {
  require_unit_interval(t);
  if (!c.is_square() || c.rows() != d.rows() || c.cols() != d.cols()) {
    throw InvalidInput("expected two square matrices of equal size");
  }
  require_psd(c, "C", tol);
  require_psd(d, "D", tol);
  require_same_kernel(c, d, "ker C = ker D", tol);
  const Matrix chord = (1.0 - t) * pinv(c, tol) + t * pinv(d, tol);
  return finish(chord - pinv((1.0 - t) * c + t * d, tol), tol);
}

BlockMatrix border_for_pinv(const Matrix& c) {
  if (!c.is_square()) throw InvalidInput("C must be square");
  Matrix data(c.rows() + 1, c.rows() + 1, c.field());
  data.set_block(1, 1, c);
  return BlockMatrix(std::move(data), 1, c.rows());
}

}  // namespace ppt
