#pragma once

// Dense inner-loop kernels over interleaved complex<double> storage.
//
// Every kernel exists as a scalar reference and, on x86-64, an AVX2 variant.
// The variants perform the same floating-point operations in the same order
// per output element, so their results are bitwise identical; the scalar
// reference is the contract and the SIMD variants are equivalence-tested
// against it. The active variant is chosen once, at first use, from CPUID.

#include <complex>
#include <cstddef>
#include <string_view>

namespace ppt::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

struct KernelTable {
  /// C (m x n) = A (m x k) * B (k x n), all row-major.
  void (*gemm)(std::size_t m, std::size_t k, std::size_t n, const cplx* a,
               const cplx* b, cplx* c);
  /// y[i] = alpha * x[i] + beta * y[i] for i < len.
  void (*axpby)(std::size_t len, double alpha, const cplx* x, double beta,
                cplx* y);
  /// max_i sqrt(re^2 + im^2) of (x[i] - y[i]); y may be null (treated as 0).
  double (*max_abs_diff)(std::size_t len, const cplx* x, const cplx* y);
};

namespace scalar {
void gemm(std::size_t m, std::size_t k, std::size_t n, const cplx* a,
          const cplx* b, cplx* c);
void axpby(std::size_t len, double alpha, const cplx* x, double beta, cplx* y);
double max_abs_diff(std::size_t len, const cplx* x, const cplx* y);
}  // namespace scalar

#if defined(PPT_HAVE_AVX2_KERNELS)
namespace avx2 {
void gemm(std::size_t m, std::size_t k, std::size_t n, const cplx* a,
          const cplx* b, cplx* c);
void axpby(std::size_t len, double alpha, const cplx* x, double beta, cplx* y);
double max_abs_diff(std::size_t len, const cplx* x, const cplx* y);
}  // namespace avx2
#endif

/// True when the AVX2 variants were compiled in and the CPU reports AVX2.
bool avx2_available();

/// Table for a specific ISA. Requesting avx2 when unavailable returns scalar.
const KernelTable& table(Isa isa);

/// The table selected for this process.
const KernelTable& active();
Isa active_isa();
std::string_view isa_name(Isa isa);

}  // namespace ppt::kernels
