// Compiled with -mavx2 and -ffp-contract=off; only entered after a CPUID check.

#include "ppt/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace ppt::kernels::avx2 {
namespace {

// Two complex products per register: lanes hold [re0, im0, re1, im1].
inline __m256d cmul(__m256d a_re, __m256d a_im, __m256d b) {
  const __m256d t1 = _mm256_mul_pd(a_re, b);
  const __m256d b_swap = _mm256_permute_pd(b, 0b0101);
  const __m256d t2 = _mm256_mul_pd(a_im, b_swap);
  return _mm256_addsub_pd(t1, t2);
}

inline const double* as_doubles(const cplx* p) {
  return reinterpret_cast<const double*>(p);
}
inline double* as_doubles(cplx* p) { return reinterpret_cast<double*>(p); }

}  // namespace

void gemm(std::size_t m, std::size_t k, std::size_t n, const cplx* a,
          const cplx* b, cplx* c) {
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
      __m256d acc0 = _mm256_setzero_pd();
      __m256d acc1 = _mm256_setzero_pd();
      for (std::size_t p = 0; p < k; ++p) {
        const __m256d ar = _mm256_set1_pd(a[i * k + p].real());
        const __m256d ai = _mm256_set1_pd(a[i * k + p].imag());
        const double* brow = as_doubles(b + p * n + j);
        acc0 = _mm256_add_pd(acc0, cmul(ar, ai, _mm256_loadu_pd(brow)));
        acc1 = _mm256_add_pd(acc1, cmul(ar, ai, _mm256_loadu_pd(brow + 4)));
      }
      _mm256_storeu_pd(as_doubles(c + i * n + j), acc0);
      _mm256_storeu_pd(as_doubles(c + i * n + j + 2), acc1);
    }
    for (; j + 2 <= n; j += 2) {
      __m256d acc = _mm256_setzero_pd();
      for (std::size_t p = 0; p < k; ++p) {
        const __m256d ar = _mm256_set1_pd(a[i * k + p].real());
        const __m256d ai = _mm256_set1_pd(a[i * k + p].imag());
        acc = _mm256_add_pd(
            acc, cmul(ar, ai, _mm256_loadu_pd(as_doubles(b + p * n + j))));
      }
      _mm256_storeu_pd(as_doubles(c + i * n + j), acc);
    }
    if (j < n) {
      // Last odd column: same operation order as the scalar reference.
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
  const __m256d va = _mm256_set1_pd(alpha);
  const __m256d vb = _mm256_set1_pd(beta);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d vx = _mm256_loadu_pd(as_doubles(x + i));
    const __m256d vy = _mm256_loadu_pd(as_doubles(y + i));
    _mm256_storeu_pd(as_doubles(y + i),
                     _mm256_add_pd(_mm256_mul_pd(va, vx), _mm256_mul_pd(vb, vy)));
  }
  for (; i < len; ++i) {
    const double re = alpha * x[i].real() + beta * y[i].real();
    const double im = alpha * x[i].imag() + beta * y[i].imag();
    y[i] = cplx(re, im);
  }
}

double max_abs_diff(std::size_t len, const cplx* x, const cplx* y) {
  __m256d best = _mm256_setzero_pd();
  __m256d nan_mask = _mm256_setzero_pd();
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d vx = _mm256_loadu_pd(as_doubles(x + i));
    const __m256d vy = y ? _mm256_loadu_pd(as_doubles(y + i)) : zero;
    const __m256d d = _mm256_sub_pd(vx, vy);
    const __m256d sq = _mm256_mul_pd(d, d);
    // [re0^2 + im0^2, same, re1^2 + im1^2, same]
    const __m256d mag = _mm256_sqrt_pd(_mm256_hadd_pd(sq, sq));
    nan_mask = _mm256_or_pd(nan_mask, _mm256_cmp_pd(mag, mag, _CMP_UNORD_Q));
    best = _mm256_max_pd(best, mag);
  }
  if (_mm256_movemask_pd(nan_mask) != 0) return std::nan("");
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double result = std::max(std::max(lanes[0], lanes[1]),
                           std::max(lanes[2], lanes[3]));
  for (; i < len; ++i) {
    const double dr = y ? x[i].real() - y[i].real() : x[i].real() - 0.0;
    const double di = y ? x[i].imag() - y[i].imag() : x[i].imag() - 0.0;
    const double mag = std::sqrt(dr * dr + di * di);
    if (std::isnan(mag)) return mag;
    result = std::max(result, mag);
  }
  return result;
}

}  // namespace ppt::kernels::avx2
