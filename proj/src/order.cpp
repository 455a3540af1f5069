#include "ppt/order.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace ppt {
namespace {

void require_hermitian(const Matrix& m, const char* what,
                       const ToleranceConfig& tol) {
  if (!is_hermitian(m, tol)) {
    throw PreconditionError("Hermitian", std::string(what) + " is not Hermitian");
  }
}

void require_same_square(const Matrix& c, const Matrix& d) {
  if (!c.is_square() || c.rows() != d.rows() || c.cols() != d.cols()) {
    throw InvalidInput("expected two square matrices of equal size");
  }
}

void require_same_partition(const BlockMatrix& a, const BlockMatrix& b) {
  if (!a.same_partition(b)) {
    throw InvalidInput("partition mismatch: (" + std::to_string(a.n1()) + ", " +
                       std::to_string(a.n2()) + ") vs (" + std::to_string(b.n1()) +
                       ", " + std::to_string(b.n2()) + ")");
  }
}

double smallest_singular_value(const Matrix& m) {
  if (m.rows() == 0) return std::numeric_limits<double>::infinity();
  return singular_values(m).back();
}

Matrix pencil(const Matrix& c, const Matrix& d, double t) {
  return (1.0 - t) * c + t * d;
}

// Golden-section search for a local minimizer of f on [lo, hi].
double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double width) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - r * (hi - lo);
  double x2 = lo + r * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > width) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = f(x2);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::string_view method_name(RankPathMethod m) {
  switch (m) {
    case RankPathMethod::kernel_inertia:
      return "kernel_inertia";
    case RankPathMethod::spectral:
      return "spectral";
    case RankPathMethod::sampled:
      return "sampled";
  }
  return "unknown";
}

bool kernel_included(const Matrix& m, const Matrix& n, const ToleranceConfig& tol) {
  return kernel_inclusion_residual(m, n, tol) <= tol.eq_tol * (1.0 + n.norm_max());
}

bool range_included(const Matrix& m, const Matrix& n, const ToleranceConfig& tol) {
  if (m.rows() != n.rows()) {
    throw InvalidInput("range inclusion needs equal row counts");
  }
  return kernel_included(n.adjoint(), m.adjoint(), tol);
}

AlbertConditions albert_psd_conditions(const BlockMatrix& a,
                                       const ToleranceConfig& tol) {
  require_hermitian(a.data(), "A", tol);
  AlbertConditions out;
  out.psd22 = is_psd(a.a22(), tol);
  out.ker_incl = kernel_included(a.a22(), a.a12(), tol);
  out.psd_schur = is_psd(hermitian_part(schur_complement(a, tol)), tol);
  out.overall = out.psd22 && out.ker_incl && out.psd_schur;
  return out;
}

PinvMonotonicity pinv_monotone(const Matrix& c, const Matrix& d,
                               const ToleranceConfig& tol) {
  require_same_square(c, d);
  require_hermitian(c, "C", tol);
  require_hermitian(d, "D", tol);
  if (!loewner_leq(c, d, tol)) {
    throw PreconditionError("C <= D", "D - C is not positive semidefinite");
  }
  PinvMonotonicity out;
  out.ker_equal = subspace_eq(kernel_basis(c, tol), kernel_basis(d, tol), tol);
  out.inertia_equal = inertia(c, tol).n_neg == inertia(d, tol).n_neg;
  out.holds = out.ker_equal && out.inertia_equal;
  out.direct = loewner_leq(hermitian_part(pinv(d, tol)),
                           hermitian_part(pinv(c, tol)), tol);
  return out;
}

SpectralPathCheck spectral_path_check(const Matrix& c, const Matrix& d,
                                      const ToleranceConfig& tol) {
  require_same_square(c, d);
  require_hermitian(c, "C", tol);
  require_hermitian(d, "D", tol);
  const Matrix d_inv = inverse(d, tol);
  const bool ordered = loewner_leq(c, d, tol);

  SpectralPathCheck out;
  out.eigvals = eigenvalues(d_inv * c);
  for (const Scalar& lambda : out.eigvals) {
    const bool real = std::abs(lambda.imag()) <= tol.eq_tol;
    if (!real) {
      out.real_spectrum = false;
      if (!ordered) continue;
    }
    const double re = lambda.real();
    if (re > tol.psd_tol) continue;
    out.no_crossing = false;
    const double t = std::clamp(-re / (1.0 - re), 0.0, 1.0);
    if (!out.crossing_t || t < *out.crossing_t) out.crossing_t = t;
  }
  return out;
}

std::vector<double> path_grid(std::size_t points) {
  if (points < 2) return {0.0};
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return grid;
}

std::vector<PathSample> sample_rank_path(const Matrix& c, const Matrix& d,
                                         const ToleranceConfig& tol,
                                         std::size_t points) {
  require_same_square(c, d);
  std::vector<PathSample> out;
  for (double t : path_grid(points)) {
    const Matrix m = hermitian_part(pencil(c, d, t));
    out.push_back({t, rank(m, tol), inertia(m, tol)});
  }
  return out;
}

double locate_rank_drop(const Matrix& c, const Matrix& d,
                        const ToleranceConfig& tol) {
  require_same_square(c, d);
  // Complement of ker C ∩ ker D; the common kernel never contributes rank.
  const Matrix v = range_basis(vcat(c, d).adjoint(), tol).vectors();
  if (v.cols() == 0) return 0.0;
  const Matrix cr = v.adjoint() * c * v;
  const Matrix dr = v.adjoint() * d * v;
  const auto f = [&](double t) { return smallest_singular_value(pencil(cr, dr, t)); };

  const std::vector<double> grid = path_grid();
  std::size_t best = 0;
  double best_val = f(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double val = f(grid[i]);
    if (val < best_val) {
      best_val = val;
      best = i;
    }
  }
  const double lo = grid[best == 0 ? 0 : best - 1];
  const double hi = grid[std::min(best + 1, grid.size() - 1)];
  const double refined = golden_min(f, lo, hi, 1e-10);
  return f(refined) <= best_val ? refined : grid[best];
}

RankPathReport rank_path_constant(const Matrix& c, const Matrix& d,
                                  const ToleranceConfig& tol,
                                  RankPathMethod method, bool require_order) {
  require_same_square(c, d);
  require_hermitian(c, "C", tol);
  require_hermitian(d, "D", tol);
  if (require_order && !loewner_leq(c, d, tol)) {
    throw PreconditionError("C <= D", "D - C is not positive semidefinite");
  }

  RankPathReport out;
  out.method = method;
  switch (method) {
    case RankPathMethod::spectral: {
      if (!subspace_eq(kernel_basis(c, tol), kernel_basis(d, tol), tol)) {
        out.constant = false;
        break;
      }
      const Matrix v = range_basis(c, tol).vectors();
      if (v.cols() == 0) break;
      try {
        const SpectralPathCheck s = spectral_path_check(
            hermitian_part(v.adjoint() * c * v), hermitian_part(v.adjoint() * d * v),
            tol);
        out.constant = s.no_crossing;
        out.real_spectrum = s.real_spectrum;
        out.witness_t = s.crossing_t;
      } catch (const PreconditionError&) {
        // Compressed D singular at the cutoff: the rank drops at t = 1.
        out.constant = false;
        out.witness_t = 1.0;
      }
      break;
    }
    case RankPathMethod::kernel_inertia:
      out.constant =
          subspace_eq(kernel_basis(c, tol), kernel_basis(d, tol), tol) &&
          inertia(c, tol).n_neg == inertia(d, tol).n_neg;
      break;
    case RankPathMethod::sampled: {
      const auto samples = sample_rank_path(c, d, tol);
      out.constant = std::all_of(samples.begin(), samples.end(), [&](const PathSample& s) {
        return s.rank == samples.front().rank &&
               s.inertia.n_neg == samples.front().inertia.n_neg;
      });
      break;
    }
  }
  if (out.constant) {
    out.common_rank = rank(c, tol);
    out.witness_t.reset();
  } else if (!out.witness_t) {
    out.witness_t = locate_rank_drop(c, d, tol);
  }
  return out;
}

MonotonicityReport monotonicity_report(const BlockMatrix& a, const BlockMatrix& b,
                                   const ToleranceConfig& tol) {
  require_same_partition(a, b);
  require_hermitian(a.data(), "A", tol);
  require_hermitian(b.data(), "B", tol);

  MonotonicityReport r;
  r.hypothesis_ok = loewner_leq(a.data(), b.data(), tol);
  r.stmt_a = loewner_leq(hermitian_part(jppt(a, tol).data()),
                         hermitian_part(jppt(b, tol).data()), tol);
  r.stmt_b = loewner_leq(hermitian_part(pinv(b.a22(), tol)),
                         hermitian_part(pinv(a.a22(), tol)), tol);
  r.stmt_c = rank_path_constant(a.a22(), b.a22(), tol, RankPathMethod::spectral,
                                /*require_order=*/false);
  r.schur_mono = loewner_leq(hermitian_part(schur_complement(a, tol)),
                             hermitian_part(schur_complement(b, tol)), tol);
  const bool agree = r.stmt_a == r.stmt_b && r.stmt_b == r.stmt_c.constant;
  const bool any = r.stmt_a || r.stmt_b || r.stmt_c.constant;
  r.consistent = agree && (!any || r.schur_mono);
  return r;
}

JpptOrderConditions jppt_order_conditions(const BlockMatrix& a,
                                             const BlockMatrix& b,
                                             const ToleranceConfig& tol) {
  require_same_partition(a, b);
  require_hermitian(a.data(), "A", tol);
  require_hermitian(b.data(), "B", tol);

  const Matrix a22p = pinv(a.a22(), tol);
  const Matrix b22p = pinv(b.a22(), tol);
  const Matrix x = b.a12() * b22p - a.a12() * a22p;
  const BlockMatrix diff = jppt(b, tol) - jppt(a, tol);

  JpptOrderConditions out;
  out.pinv_leq = loewner_leq(hermitian_part(b22p), hermitian_part(a22p), tol);
  out.ker_incl = kernel_included(a22p - b22p, x, tol);
  out.residual_psd = is_psd(hermitian_part(schur_complement(diff, tol)), tol);
  out.overall = out.pinv_leq && out.ker_incl && out.residual_psd;
  return out;
}

SchurDifferenceIdentity schur_difference_identity(const BlockMatrix& a, const BlockMatrix& b,
                               const ToleranceConfig& tol) {
  require_same_partition(a, b);
  const Matrix a22 = a.a22(), b22 = b.a22();
  if (!subspace_eq(kernel_basis(a22, tol), kernel_basis(b22, tol), tol)) {
    throw PreconditionError("ker A22 = ker B22", "kernels differ");
  }
  if (!subspace_eq(range_basis(a22, tol), range_basis(b22, tol), tol)) {
    throw PreconditionError("ran A22 = ran B22", "ranges differ");
  }
  const BlockMatrix diff = b - a;
  if (!kernel_included(diff.a22(), diff.a12(), tol)) {
    throw PreconditionError("ker(B22 - A22) <= ker(B12 - A12)",
                            "kernel inclusion fails");
  }
  if (!range_included(diff.a21(), diff.a22(), tol)) {
    throw PreconditionError("ran(B21 - A21) <= ran(B22 - A22)",
                            "range inclusion fails");
  }

  const Matrix a22p = pinv(a22, tol), b22p = pinv(b22, tol);
  const Matrix x = b.a12() * b22p - a.a12() * a22p;
  const Matrix y = b22p * b.a21() - a22p * a.a21();
  const Matrix delta = a22p - b22p;
  const Matrix schur_gap = schur_complement(b, tol) - schur_complement(a, tol);
  const Matrix middle = a22 + a22 * pinv(b22 - a22, tol) * a22;

  SchurDifferenceIdentity out;
  out.lhs = schur_complement(diff, tol);
  out.rhs = schur_gap - x * pinv(delta, tol) * y;
  out.rhs_alternate = schur_gap - (-x) * middle * (-y);
  out.residual = max_abs_diff(out.lhs, out.rhs);
  out.alternate_residual = max_abs_diff(out.lhs, out.rhs_alternate);
  out.inclusions_ok = kernel_included(delta, x, tol) && range_included(y, delta, tol);
  return out;
}

}  // namespace ppt
