#include <doctest.h>

#include <cmath>

#include "ppt/gen.hpp"
#include "ppt/order.hpp"
#include "ppt/varprin.hpp"

using namespace ppt;

namespace {
const ToleranceConfig kTol;

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

TEST_CASE("splitmix64 reference values") {
  std::uint64_t state = 0;
  CHECK(splitmix64(state) == 0xe220a8397b1dcdafULL);
  CHECK(splitmix64(state) == 0x6e789e6aa1b965f4ULL);
  CHECK(splitmix64(state) == 0x06c45d188009454fULL);
}

TEST_CASE("xoshiro256++ follows its reference recurrence") {
  std::uint64_t seed = 12345;
  std::uint64_t s[4];
  for (auto& w : s) w = splitmix64(seed);
  Xoshiro256pp rng(12345);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t expected = rotl(s[0] + s[3], 23) + s[0];
    const std::uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = rotl(s[3], 45);
    REQUIRE(rng.next() == expected);
  }
}

TEST_CASE("uniform draws stay in range") {
  Xoshiro256pp rng(9);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    const double v = rng.uniform(3.0);
    REQUIRE(v >= -3.0);
    REQUIRE(v < 3.0);
    REQUIRE(rng.index(7) < 7);
  }
  CHECK_THROWS_AS(rng.index(0), InvalidInput);
}

TEST_CASE("derived seeds are distinct and reproducible") {
  CHECK(derive_seed(42, 0) == derive_seed(42, 0));
  CHECK(derive_seed(42, 0) != derive_seed(42, 1));
  CHECK(derive_seed(42, 0) != derive_seed(43, 0));
}

TEST_CASE("generators are deterministic") {
  const GenSpec spec{2, 3, Field::complex, 77, 1.0};
  CHECK(rand_hermitian(spec) == rand_hermitian(spec));
  CHECK(rand_im_psd(spec) == rand_im_psd(spec));
  CHECK(rand_saddle_instance(spec) == rand_saddle_instance(spec));
  for (PairMode mode : {PairMode::generic, PairMode::constant_rank, PairMode::kernel_break}) {
    const BlockPair p = rand_ordered_pair(spec, mode), q = rand_ordered_pair(spec, mode);
    CHECK(p.a == q.a);
    CHECK(p.b == q.b);
  }
  GenSpec other = spec;
  other.seed = 78;
  CHECK_FALSE(rand_hermitian(spec) == rand_hermitian(other));
}

TEST_CASE("Hermitian generator") {
  for (Field f : {Field::real, Field::complex}) {
    const BlockMatrix h = rand_hermitian(GenSpec{3, 2, f, 5, 2.0});
    CHECK(h.data() == h.data().adjoint());
    CHECK(h.field() == f);
    CHECK(h.data().norm_max() <= std::sqrt(2.0) * 2.0);
  }
}

TEST_CASE("PSD with a prescribed kernel") {
  const GenSpec spec{0, 2, Field::real, 3, 1.0};
  CHECK(rand_psd_with_kernel(spec, SubspaceBasis::full(2)).norm_max() == 0.0);
  const Matrix pd = rand_psd_with_kernel(spec, SubspaceBasis::zero(2));
  CHECK(lambda_min(pd) >= 0.01 * 0.999);

  const SubspaceBasis line(2, Matrix::column({-1 / std::sqrt(2.0), 1 / std::sqrt(2.0)}));
  const Matrix h = rand_psd_with_kernel(spec, line);
  CHECK(is_psd(h, kTol));
  CHECK(subspace_eq(kernel_basis(h, kTol), line, kTol));
  CHECK_THROWS_AS(rand_psd_with_kernel(spec, SubspaceBasis::zero(3)), InvalidInput);
}

TEST_CASE("ordered pairs honour their modes") {
  Xoshiro256pp rng(89);
  for (int trial = 0; trial < 60; ++trial) {
    const GenSpec spec{rng.index(4), 1 + rng.index(4),
                       rng.coin() ? Field::complex : Field::real, rng.next(), 1.0};
    const PairMode mode = static_cast<PairMode>(trial % 3);
    const BlockPair p = rand_ordered_pair(spec, mode);
    CHECK(p.a.data() == p.a.data().adjoint());
    CHECK(loewner_leq(p.a.data(), p.b.data(), kTol));
    const MonotonicityReport r = monotonicity_report(p.a, p.b, kTol);
    CHECK(r.consistent);
    if (mode == PairMode::constant_rank) CHECK((r.stmt_a && r.stmt_b && r.stmt_c.constant));
    if (mode == PairMode::kernel_break) CHECK(!(r.stmt_a || r.stmt_b || r.stmt_c.constant));
  }
  CHECK_THROWS_AS(rand_ordered_pair(GenSpec{2, 0, Field::real, 1, 1.0}, PairMode::kernel_break),
                  InvalidInput);
  CHECK_THROWS_AS(rand_ordered_pair(GenSpec{1, 1, Field::real, 1, -1.0}, PairMode::generic),
                  InvalidInput);
}

TEST_CASE("Im-PSD generator") {
  Xoshiro256pp rng(97);
  for (int trial = 0; trial < 20; ++trial) {
    const GenSpec spec{rng.index(3), 1 + rng.index(3), Field::complex, rng.next(), 1.0};
    const BlockMatrix a = rand_im_psd(spec);
    CHECK(is_ep(a.a22(), kTol));
    CHECK(lambda_min(imag_part(a.data())) >= -kTol.psd_tol);
  }
  CHECK_THROWS_AS(rand_im_psd(GenSpec{1, 1, Field::real, 1, 1.0}), InvalidInput);
}

TEST_CASE("saddle instances satisfy the inclusions") {
  Xoshiro256pp rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const GenSpec spec{1 + rng.index(3), 1 + rng.index(3),
                       rng.coin() ? Field::complex : Field::real, rng.next(), 1.0};
    const bool hermitian = trial % 2 == 0;
    const BlockMatrix a = rand_saddle_instance(spec, hermitian);
    CHECK(kernel_certificate(a, kTol) <= kTol.eq_tol);
    CHECK(range_certificate(a, kTol) <= kTol.eq_tol);
    CHECK(kernel_basis(a.a22(), kTol).dim() >= 1);
    CHECK(is_psd(a.a22(), kTol));
    if (hermitian) CHECK(a.data() == a.data().adjoint());
    const Matrix x1 = draw_matrix(rng, spec.n1, 1, spec.field, 1.0);
    CHECK_NOTHROW(solve_saddle(a, x1, Matrix(spec.n2, 1, spec.field), kTol));
  }
}

TEST_CASE("same-kernel PSD pairs") {
  Xoshiro256pp rng(103);
  for (int trial = 0; trial < 20; ++trial) {
    const GenSpec spec{1 + rng.index(3), 1 + rng.index(3),
                       rng.coin() ? Field::complex : Field::real, rng.next(), 1.0};
    const BlockPair p = rand_same_kernel_psd_pair(spec, trial % 2 == 0);
    CHECK(is_psd(p.a.data(), kTol));
    CHECK(is_psd(p.b.data(), kTol));
    CHECK(subspace_eq(kernel_basis(p.a.a22(), kTol), kernel_basis(p.b.a22(), kTol), kTol));
    if (trial % 2 == 0) CHECK(loewner_leq(p.a.data(), p.b.data(), kTol));
  }
}
