#include "ppt/kernels.hpp"

#include <algorithm>
#include <cmath>

// The complex products are spelled out instead of using std::complex's
// operator*, whose NaN/Inf recovery path would diverge from the SIMD lanes.

namespace ppt::kernels::scalar {

void gemm(std::size_t m, std::size_t k, std::size_t n, const cplx* a,
          const cplx* b, cplx* c) {
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc_re = 0.0;
      double acc_im = 0.0;
      for (std::size_t p = 0; p < k; ++p) {
        const double ar = a[i * k + p].real();
        const double ai = a[i * k + p].imag();
        const double br = b[p * n + j].real();
        const double bi = b[p * n + j].imag();
        const double re = ar * br - ai * bi;
        const double im = ar * bi + ai * br;
        acc_re += re;
        acc_im += im;
      }
      c[i * n + j] = cplx(acc_re, acc_im);
    }
  }
}

void axpby(std::size_t len, double alpha, const cplx* x, double beta, cplx* y) {
  for (std::size_t i = 0; i < len; ++i) {
    const double re = alpha * x[i].real() + beta * y[i].real();
    const double im = alpha * x[i].imag() + beta * y[i].imag();
    y[i] = cplx(re, im);
  }
}

double max_abs_diff(std::size_t len, const cplx* x, const cplx* y) {
  double best = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double dr = y ? x[i].real() - y[i].real() : x[i].real() - 0.0;
    const double di = y ? x[i].imag() - y[i].imag() : x[i].imag() - 0.0;
    const double mag = std::sqrt(dr * dr + di * di);
    // Non-finite input must never look small.
    if (std::isnan(mag)) return mag;
    best = std::max(best, mag);
  }
  return best;
}

}  // namespace ppt::kernels::scalar
