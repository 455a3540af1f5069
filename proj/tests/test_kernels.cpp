#include <doctest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <vector>

#include "ppt/gen.hpp"
#include "ppt/kernels.hpp"

using namespace ppt;
using ppt::kernels::cplx;

namespace {

std::vector<cplx> random_values(Xoshiro256pp& rng, std::size_t len) {
  std::vector<cplx> v(len);
  for (auto& x : v) x = cplx(rng.uniform(10.0), rng.uniform(10.0));
  return v;
}

bool bitwise_equal(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(cplx)) == 0;
}

}  // namespace

TEST_CASE("scalar gemm matches a naive triple loop") {
  const std::vector<cplx> a = {{1, 2}, {3, -1}, {0, 1}, {2, 0}};  // 2x2
  const std::vector<cplx> b = {{1, 0}, {0, 1}, {-1, 1}, {2, 2}};  // 2x2
  std::vector<cplx> c(4);
  kernels::scalar::gemm(2, 2, 2, a.data(), b.data(), c.data());
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const cplx expect = a[i * 2] * b[j] + a[i * 2 + 1] * b[2 + j];
      CHECK(std::abs(c[i * 2 + j] - expect) == doctest::Approx(0.0));
    }
  }
}

TEST_CASE("scalar axpby and max_abs_diff") {
  std::vector<cplx> x = {{1, 1}, {2, -2}};
  std::vector<cplx> y = {{3, 0}, {0, 4}};
  kernels::scalar::axpby(2, 2.0, x.data(), -1.0, y.data());
  CHECK(y[0] == cplx(-1, 2));
  CHECK(y[1] == cplx(4, -8));
  const std::vector<cplx> z = {{0, 0}, {3, 4}};
  CHECK(kernels::scalar::max_abs_diff(2, z.data(), nullptr) == 5.0);
  const std::vector<cplx> bad = {{std::nan(""), 0}};
  CHECK(std::isnan(kernels::scalar::max_abs_diff(1, bad.data(), nullptr)));
}

TEST_CASE("table selection falls back to scalar") {
  const auto& s = kernels::table(kernels::Isa::scalar);
  CHECK(s.gemm == &kernels::scalar::gemm);
  if (!kernels::avx2_available()) {
    CHECK(kernels::table(kernels::Isa::avx2).gemm == &kernels::scalar::gemm);
  }
  CHECK(kernels::isa_name(kernels::active_isa()).size() > 0);
}

#if defined(PPT_HAVE_AVX2_KERNELS)
TEST_CASE("AVX2 kernels are bitwise identical to the scalar reference") {
  if (!kernels::avx2_available()) {
    MESSAGE("AVX2 not reported by this CPU; equivalence not exercised");
    return;
  }
  Xoshiro256pp rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = rng.index(13), k = rng.index(13), n = rng.index(13);
    const auto a = random_values(rng, m * k);
    const auto b = random_values(rng, k * n);
    std::vector<cplx> c1(m * n), c2(m * n);
    kernels::scalar::gemm(m, k, n, a.data(), b.data(), c1.data());
    kernels::avx2::gemm(m, k, n, a.data(), b.data(), c2.data());
    REQUIRE(bitwise_equal(c1, c2));

    const std::size_t len = rng.index(40);
    const auto x = random_values(rng, len);
    auto y1 = random_values(rng, len);
    auto y2 = y1;
    const double alpha = rng.uniform(3.0), beta = rng.uniform(3.0);
    kernels::scalar::axpby(len, alpha, x.data(), beta, y1.data());
    kernels::avx2::axpby(len, alpha, x.data(), beta, y2.data());
    REQUIRE(bitwise_equal(y1, y2));

    const double d1 = kernels::scalar::max_abs_diff(len, x.data(), y1.data());
    const double d2 = kernels::avx2::max_abs_diff(len, x.data(), y1.data());
    REQUIRE(std::memcmp(&d1, &d2, sizeof d1) == 0);
    const double n1 = kernels::scalar::max_abs_diff(len, x.data(), nullptr);
    const double n2 = kernels::avx2::max_abs_diff(len, x.data(), nullptr);
    REQUIRE(std::memcmp(&n1, &n2, sizeof n1) == 0);
  }
}

TEST_CASE("AVX2 max_abs_diff propagates NaN like the scalar reference") {
  if (!kernels::avx2_available()) return;
  for (std::size_t pos = 0; pos < 9; ++pos) {
    std::vector<cplx> x(9, cplx(1.0, 1.0));
    x[pos] = cplx(std::numeric_limits<double>::quiet_NaN(), 0.0);
    CHECK(std::isnan(kernels::scalar::max_abs_diff(9, x.data(), nullptr)));
    CHECK(std::isnan(kernels::avx2::max_abs_diff(9, x.data(), nullptr)));
  }
}
#endif
