#include <doctest.h>

#include "fixtures.hpp"
#include "ppt/convexity.hpp"
#include "ppt/gen.hpp"
#include "ppt/order.hpp"

using namespace ppt;
using namespace ppt::test;

namespace {
const ToleranceConfig kTol;

BlockPair psd_pair(std::uint64_t seed, Field f = Field::complex) {
  return rand_same_kernel_psd_pair(GenSpec{2, 3, f, seed, 1.0});
}
}  // namespace

TEST_CASE("J ppt gap vanishes for equal matrices and at the endpoints") {
  const BlockPair p = psd_pair(1);
  CHECK(jppt_concavity_gap(p.a, p.a, 0.4, kTol).gap.norm_max() <= 1e-12);
  CHECK(jppt_concavity_gap(p.a, p.b, 0.0, kTol).gap.norm_max() <= 1e-12);
  CHECK(jppt_concavity_gap(p.a, p.b, 1.0, kTol).gap.norm_max() <= 1e-12);
  const JensenGap mid = jppt_concavity_gap(p.a, p.b, 0.5, kTol);
  CHECK(mid.psd);
  CHECK(mid.lambda_min >= -kTol.psd_tol);
}

TEST_CASE("Schur gap") {
  const BlockPair p = psd_pair(2, Field::real);
  CHECK(schur_concavity_gap(p.a, p.a, 0.7, kTol).gap.norm_max() <= 1e-12);
  CHECK(schur_concavity_gap(p.a, p.b, 0.3, kTol).psd);

  const BlockMatrix a(Matrix::diagonal({2, 1, 0}), 1, 2);
  const BlockMatrix b(Matrix::diagonal({5, 3, 0}), 1, 2);
  CHECK(schur_concavity_gap(a, b, 0.3, kTol).gap.norm_max() <= 1e-15);
}

TEST_CASE("pseudoinverse gap") {
  const Matrix c = Matrix::from_rows({{2, 1}, {1, 1}});
  CHECK(pinv_convexity_gap(c, c, 0.5, kTol).gap.norm_max() <= 1e-12);
  const JensenGap g = pinv_convexity_gap(Matrix::from_rows({{1}}), Matrix::from_rows({{2}}),
                                         0.5, kTol);
  CHECK(g.gap(0, 0).real() == doctest::Approx(1.0 / 12.0));
  CHECK(g.psd);

  const BlockPair p = psd_pair(3);
  for (double t : path_grid(11)) {
    CHECK(pinv_convexity_gap(p.a.a22(), p.b.a22(), t, kTol).psd);
  }
}

TEST_CASE("Schur and pseudoinverse gaps are blocks of the J ppt gap") {
  Xoshiro256pp rng(79);
  for (int trial = 0; trial < 20; ++trial) {
    const GenSpec spec{1 + rng.index(3), 1 + rng.index(3),
                       rng.coin() ? Field::complex : Field::real, rng.next(), 1.0};
    const BlockPair p = rand_same_kernel_psd_pair(spec);
    const double t = rng.uniform01();
    const JensenGap j = jppt_concavity_gap(p.a, p.b, t, kTol);
    const JensenGap s = schur_concavity_gap(p.a, p.b, t, kTol);
    const JensenGap q = pinv_convexity_gap(p.a.a22(), p.b.a22(), t, kTol);
    CHECK(max_abs_diff(s.gap, j.gap.block(0, 0, spec.n1, spec.n1)) <= kTol.eq_tol);
    CHECK(max_abs_diff(q.gap, j.gap.block(spec.n1, spec.n1, spec.n2, spec.n2)) <= kTol.eq_tol);

    const BlockMatrix bc = border_for_pinv(p.a.a22()), bd = border_for_pinv(p.b.a22());
    CHECK(bc.n1() == 1);
    const JensenGap bordered = jppt_concavity_gap(bc, bd, t, kTol);
    CHECK(max_abs_diff(q.gap, bordered.gap.block(1, 1, spec.n2, spec.n2)) <= kTol.eq_tol);
  }
}

TEST_CASE("ordered same-kernel pairs are J ppt monotone") {
  Xoshiro256pp rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    const GenSpec spec{1 + rng.index(3), 1 + rng.index(3),
                       rng.coin() ? Field::complex : Field::real, rng.next(), 1.0};
    const BlockPair p = rand_same_kernel_psd_pair(spec, /*ordered=*/true);
    CHECK(loewner_leq(p.a.data(), p.b.data(), kTol));
    CHECK(monotonicity_report(p.a, p.b, kTol).stmt_a);
  }
}

TEST_CASE("gap preconditions") {
  const BlockPair p = psd_pair(4);
  CHECK_THROWS_AS(jppt_concavity_gap(p.a, p.b, 1.5, kTol), InvalidInput);
  const BlockMatrix a(Matrix::diagonal({1, 1, 0}), 1, 2);
  const BlockMatrix b(Matrix::diagonal({1, 0, 1}), 1, 2);
  try {
    jppt_concavity_gap(a, b, 0.5, kTol);
    FAIL("expected a kernel mismatch");
  } catch (const PreconditionError& e) {
    CHECK(e.hypothesis() == "ker A22 = ker B22");
  }
  CHECK_THROWS_AS(schur_concavity_gap(a, b, 0.5, kTol), PreconditionError);
  CHECK_THROWS_AS(pinv_convexity_gap(Matrix::diagonal({1, 0}), Matrix::diagonal({0, 1}), 0.5,
                                     kTol),
                  PreconditionError);
  const BlockMatrix neg(Matrix::diagonal({-1, 1, 0}), 1, 2);
  CHECK_THROWS_AS(jppt_concavity_gap(neg, neg, 0.5, kTol), PreconditionError);
}
