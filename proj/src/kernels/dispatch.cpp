#include "ppt/kernels.hpp"

namespace ppt::kernels {
namespace {

constexpr KernelTable kScalarTable{&scalar::gemm, &scalar::axpby,
                                   &scalar::max_abs_diff};

#if defined(PPT_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2Table{&avx2::gemm, &avx2::axpby,
                                 &avx2::max_abs_diff};
#endif

Isa detect() { return avx2_available() ? Isa::avx2 : Isa::scalar; }

}  // namespace

bool avx2_available() {
#if defined(PPT_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

const KernelTable& table(Isa isa) {
#if defined(PPT_HAVE_AVX2_KERNELS)
  if (isa == Isa::avx2 && avx2_available()) return kAvx2Table;
#else
  (void)isa;
#endif
  return kScalarTable;
}

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

const KernelTable& active() { return table(active_isa()); }

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace ppt::kernels
