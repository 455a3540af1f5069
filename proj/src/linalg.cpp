#include "ppt/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace ppt {
namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;

MatrixXd to_eigen_real(const Matrix& m) {
  MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).real();
  }
  return out;
}

MatrixXcd to_eigen_complex(const Matrix& m) {
  MatrixXcd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

Matrix from_eigen(const MatrixXd& e) {
  std::vector<Scalar> v(static_cast<std::size_t>(e.size()));
  for (Eigen::Index i = 0; i < e.rows(); ++i) {
    for (Eigen::Index j = 0; j < e.cols(); ++j) v[i * e.cols() + j] = e(i, j);
  }
  return Matrix::from_entries(e.rows(), e.cols(), std::move(v), Field::real);
}

Matrix from_eigen(const MatrixXcd& e) {
  std::vector<Scalar> v(static_cast<std::size_t>(e.size()));
  for (Eigen::Index i = 0; i < e.rows(); ++i) {
    for (Eigen::Index j = 0; j < e.cols(); ++j) v[i * e.cols() + j] = e(i, j);
  }
  return Matrix::from_entries(e.rows(), e.cols(), std::move(v), Field::complex);
}

struct Svd {
  Matrix u;  // rows x rows
  Matrix v;  // cols x cols
  std::vector<double> s;
  std::size_t rank = 0;
};

template <class EigenMat>
Svd svd_of(const EigenMat& a, double rel_tol) {
  Eigen::JacobiSVD<EigenMat> solver(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Svd out;
  out.u = from_eigen(EigenMat(solver.matrixU()));
  out.v = from_eigen(EigenMat(solver.matrixV()));
  const auto& sv = solver.singularValues();
  out.s.assign(sv.data(), sv.data() + sv.size());
  const double smax = out.s.empty() ? 0.0 : out.s.front();
  if (smax > 0.0) {
    for (double x : out.s) {
      if (x > rel_tol * smax) ++out.rank;
    }
  }
  return out;
}

Svd full_svd(const Matrix& m, const ToleranceConfig& tol) {
  require_finite(m, "matrix");
  if (m.rows() == 0 || m.cols() == 0) {
    Svd out;
    out.u = Matrix::identity(m.rows());
    out.v = Matrix::identity(m.cols());
    return out;
  }
  return m.is_real() ? svd_of(to_eigen_real(m), tol.rank_rel_tol)
                     : svd_of(to_eigen_complex(m), tol.rank_rel_tol);
}

// Largest Euclidean column norm.
double max_column_norm(const Matrix& m) {
  double best = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) acc += std::norm(m(i, j));
    best = std::max(best, std::sqrt(acc));
  }
  return best;
}

void require_square(const Matrix& m, const char* what) {
  if (!m.is_square()) {
    throw InvalidInput(std::string(what) + " must be square, got " +
                       std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

}  // namespace

void require_finite(const Matrix& m, const char* what) {
  if (!m.is_finite()) {
    throw InvalidInput(std::string(what) + " has non-finite entries");
  }
}

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim, Matrix vectors)
    : ambient_dim_(ambient_dim), vectors_(std::move(vectors)) {
  if (vectors_.rows() != ambient_dim_) {
    throw InvalidInput("subspace basis rows must equal the ambient dimension");
  }
}

SubspaceBasis SubspaceBasis::zero(std::size_t ambient_dim) {
  return SubspaceBasis(ambient_dim, Matrix(ambient_dim, 0));
}

SubspaceBasis SubspaceBasis::full(std::size_t ambient_dim) {
  return SubspaceBasis(ambient_dim, Matrix::identity(ambient_dim));
}

Matrix SubspaceBasis::projector() const {
  return vectors_ * vectors_.adjoint();
}

Matrix pinv(const Matrix& m, const ToleranceConfig& tol) {
  const Svd d = full_svd(m, tol);
  const Field f = m.field();
  if (d.rank == 0) return Matrix(m.cols(), m.rows(), f);
  // V_r diag(1/s) U_r^H
  Matrix vr = d.v.block(0, 0, m.cols(), d.rank);
  for (std::size_t j = 0; j < d.rank; ++j) {
    const double inv = 1.0 / d.s[j];
    for (std::size_t i = 0; i < vr.rows(); ++i) vr.set(i, j, vr(i, j) * inv);
  }
  Matrix out = vr * d.u.block(0, 0, m.rows(), d.rank).adjoint();
  return f == Field::real ? out : out.as_complex();
}

std::size_t rank(const Matrix& m, const ToleranceConfig& tol) {
  return full_svd(m, tol).rank;
}

std::vector<double> singular_values(const Matrix& m) {
  return full_svd(m, ToleranceConfig{}).s;
}

std::vector<double> hermitian_eigenvalues(const Matrix& h) {
  require_square(h, "Hermitian matrix");
  require_finite(h, "Hermitian matrix");
  if (h.rows() == 0) return {};
  const Matrix sym = hermitian_part(h);
  std::vector<double> out(h.rows());
  if (sym.is_real()) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(to_eigen_real(sym),
                                               Eigen::EigenvaluesOnly);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = es.eigenvalues()(i);
  } else {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(to_eigen_complex(sym),
                                                Eigen::EigenvaluesOnly);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = es.eigenvalues()(i);
  }
  return out;
}

double lambda_min(const Matrix& h) {
  const auto ev = hermitian_eigenvalues(h);
  return ev.empty() ? std::numeric_limits<double>::infinity() : ev.front();
}

std::vector<Scalar> eigenvalues(const Matrix& m) {
  require_square(m, "matrix");
  require_finite(m, "matrix");
  if (m.rows() == 0) return {};
  std::vector<Scalar> out(m.rows());
  if (m.is_real()) {
    Eigen::EigenSolver<MatrixXd> es(to_eigen_real(m), false);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = es.eigenvalues()(i);
  } else {
    Eigen::ComplexEigenSolver<MatrixXcd> es(to_eigen_complex(m), false);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = es.eigenvalues()(i);
  }
  return out;
}

Matrix inverse(const Matrix& m, const ToleranceConfig& tol) {
  require_square(m, "matrix");
  if (rank(m, tol) != m.rows()) {
    throw PreconditionError("invertible", "matrix is singular at the rank cutoff");
  }
  return pinv(m, tol);
}

Inertia inertia(const Matrix& h, const ToleranceConfig& tol) {
  require_square(h, "Hermitian matrix");
  if (!is_hermitian(h, tol)) {
    throw PreconditionError("Hermitian", "inertia needs a Hermitian matrix");
  }
  Inertia out;
  for (double ev : hermitian_eigenvalues(h)) {
    if (ev > tol.psd_tol) {
      ++out.n_pos;
    } else if (ev < -tol.psd_tol) {
      ++out.n_neg;
    } else {
      ++out.n_zero;
    }
  }
  return out;
}

SubspaceBasis kernel_basis(const Matrix& m, const ToleranceConfig& tol) {
  const Svd d = full_svd(m, tol);
  const std::size_t n = m.cols();
  return SubspaceBasis(n, d.v.block(0, d.rank, n, n - d.rank));
}

SubspaceBasis range_basis(const Matrix& m, const ToleranceConfig& tol) {
  const Svd d = full_svd(m, tol);
  return SubspaceBasis(m.rows(), d.u.block(0, 0, m.rows(), d.rank));
}

bool subspace_leq(const SubspaceBasis& s1, const SubspaceBasis& s2,
                  const ToleranceConfig& tol) {
  if (s1.ambient_dim() != s2.ambient_dim()) {
    throw InvalidInput("subspaces live in different ambient dimensions");
  }
  if (s1.dim() == 0) return true;
  const Matrix& v1 = s1.vectors();
  const Matrix& v2 = s2.vectors();
  const Matrix residual = v1 - v2 * (v2.adjoint() * v1);
  return max_column_norm(residual) <= tol.eq_tol;
}

bool subspace_eq(const SubspaceBasis& s1, const SubspaceBasis& s2,
                 const ToleranceConfig& tol) {
  return subspace_leq(s1, s2, tol) && subspace_leq(s2, s1, tol);
}

double kernel_inclusion_residual(const Matrix& m, const Matrix& n,
                                 const ToleranceConfig& tol) {
  if (m.cols() != n.cols()) {
    throw InvalidInput("kernel inclusion needs equal column counts");
  }
  const SubspaceBasis k = kernel_basis(m, tol);
  if (k.dim() == 0) return 0.0;
  return max_column_norm(n * k.vectors());
}

bool is_hermitian(const Matrix& m, const ToleranceConfig& tol) {
  if (!m.is_square()) return false;
  return max_abs_diff(m, m.adjoint()) <= tol.eq_tol * std::max(1.0, m.norm_max());
}

Matrix hermitian_part(const Matrix& m) {
  require_square(m, "matrix");
  const std::size_t n = m.rows();
  Matrix out(n, n, m.field());
  for (std::size_t i = 0; i < n; ++i) {
    out.set(i, i, Scalar(m(i, i).real(), 0.0));
    for (std::size_t j = i + 1; j < n; ++j) {
      const Scalar avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      out.set(i, j, avg);
      out.set(j, i, std::conj(avg));
    }
  }
  return out;
}

Matrix imag_part(const Matrix& m) {
  require_square(m, "matrix");
  const std::size_t n = m.rows();
  std::vector<Scalar> v(n * n);
  bool all_real = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      // (d) / (2i) with d = m_ij - conj(m_ji)
      const Scalar d = m(i, j) - std::conj(m(j, i));
      const Scalar e(0.5 * d.imag(), -0.5 * d.real());
      v[i * n + j] = (i == j) ? Scalar(e.real(), 0.0) : e;
      v[j * n + i] = std::conj(v[i * n + j]);
      if (v[i * n + j].imag() != 0.0) all_real = false;
    }
  }
  return Matrix::from_entries(n, n, std::move(v),
                              all_real ? Field::real : Field::complex);
}

bool loewner_leq(const Matrix& h1, const Matrix& h2, const ToleranceConfig& tol) {
  if (h1.rows() != h2.rows() || h1.cols() != h2.cols() || !h1.is_square()) {
    throw InvalidInput("loewner_leq needs square matrices of equal size");
  }
  if (!is_hermitian(h1, tol) || !is_hermitian(h2, tol)) {
    throw PreconditionError("Hermitian", "loewner order needs Hermitian operands");
  }
  return lambda_min(h2 - h1) >= -tol.psd_tol;
}

bool is_psd(const Matrix& h, const ToleranceConfig& tol) {
  return loewner_leq(Matrix(h.rows(), h.cols()), h, tol);
}

bool is_ep(const Matrix& m, const ToleranceConfig& tol) {
  require_square(m, "matrix");
  const Matrix p = pinv(m, tol);
  return max_abs_diff(m * p, p * m) <= tol.eq_tol;
}

Matrix projector_range(const Matrix& m, const ToleranceConfig& tol) {
  return m * pinv(m, tol);
}

Matrix projector_corange(const Matrix& m, const ToleranceConfig& tol) {
  return pinv(m, tol) * m;
}

}  // namespace ppt
