#include <doctest.h>

#include "fixtures.hpp"
#include "ppt/block.hpp"
#include "ppt/gen.hpp"

using namespace ppt;
using namespace ppt::test;

namespace {
const ToleranceConfig kTol;
}

TEST_CASE("block accessors tile the matrix") {
  const BlockMatrix a = singular_a();
  CHECK(a.n() == 4);
  CHECK(assemble(a.a11(), a.a12(), a.a21(), a.a22()) == a.data());
  CHECK(BlockMatrix::from_blocks(a.a11(), a.a12(), a.a21(), a.a22()) == a);
  CHECK_THROWS_AS(BlockMatrix(Matrix::identity(3), 1, 1), InvalidInput);
}

TEST_CASE("signature matrix") {
  CHECK(signature_matrix(1, 1) == Matrix::diagonal({1, -1}));
  CHECK(signature_matrix(0, 3) == -Matrix::identity(3));
  CHECK(signature_matrix(2, 2) == Matrix::diagonal({1, 1, -1, -1}));
  const Matrix j = signature_matrix(2, 3);
  CHECK(j * j == Matrix::identity(5));
}

TEST_CASE("Schur complement examples") {
  CHECK(max_abs_diff(schur_complement(singular_a(), kTol),
                     Matrix::from_rows({{-0.125, 0}, {0, 0}})) <= 1e-12);
  CHECK(max_abs_diff(schur_complement(crossing_a(), kTol), Matrix::from_rows({{0}})) <= 1e-12);
  const Matrix lower_zero = Matrix::from_rows({{1, 2, 3}, {4, 5, 6}, {0, 0, 7}});
  CHECK(schur_complement(BlockMatrix(lower_zero, 2, 1), kTol) ==
        Matrix::from_rows({{1, 2}, {4, 5}}));
}

TEST_CASE("ppt and J ppt examples") {
  const BlockMatrix a = crossing_a();
  CHECK(max_abs_diff(gppt(a, kTol).data(), Matrix::diagonal({0, -1})) <= 1e-12);
  CHECK(max_abs_diff(jppt(a, kTol).data(), Matrix::diagonal({0, 1})) <= 1e-12);
  CHECK(max_abs_diff(jppt(crossing_b(), kTol).data(), Matrix::diagonal({0, -1})) <= 1e-12);
  CHECK(max_abs_diff(gppt(BlockMatrix(Matrix::identity(5), 2, 3), kTol).data(),
                     Matrix::identity(5)) == 0.0);
  CHECK(max_abs_diff(jppt(singular_a(), kTol).data(), singular_jppt_a()) <= 1e-12);
  CHECK(max_abs_diff(jppt(singular_b(), kTol).data(), singular_jppt_b()) <= 1e-12);
}

TEST_CASE("J ppt is exactly J times ppt") {
  Xoshiro256pp rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const Field f = rng.coin() ? Field::complex : Field::real;
    const std::size_t n1 = rng.index(5), n2 = rng.index(5);
    const BlockMatrix a(draw_matrix(rng, n1 + n2, n1 + n2, f, 1.0), n1, n2);
    CHECK(jppt(a, kTol).data() == signature_matrix(n1, n2) * gppt(a, kTol).data());
  }
}

TEST_CASE("ppt blocks match their defining formulas") {
  Xoshiro256pp rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const Field f = rng.coin() ? Field::complex : Field::real;
    const std::size_t n1 = 1 + rng.index(4), n2 = 1 + rng.index(4);
    const BlockMatrix a(draw_matrix(rng, n1 + n2, n1 + n2, f, 1.0), n1, n2);
    const Matrix p22 = oracle_pinv(a.a22());
    const BlockMatrix g = gppt(a, kTol);
    CHECK(max_abs_diff(g.a11(), a.a11() - a.a12() * p22 * a.a21()) <= 1e-8);
    CHECK(max_abs_diff(g.a12(), a.a12() * p22) <= 1e-8);
    CHECK(max_abs_diff(g.a21(), -(p22 * a.a21())) <= 1e-8);
    CHECK(max_abs_diff(g.a22(), p22) <= 1e-8);
  }
}

TEST_CASE("ppt is an involution when A22 is invertible") {
  const BlockMatrix a(Matrix::from_rows({{1, 2}, {3, 4}}), 1, 1);
  // By hand: ppt(A) = [[1 - 6/4, 2/4], [-3/4, 1/4]].
  const Matrix expected = Matrix::from_rows({{-0.5, 0.5}, {-0.75, 0.25}});
  CHECK(max_abs_diff(gppt(a, kTol).data(), expected) <= 1e-15);
  CHECK(max_abs_diff(gppt(gppt(a, kTol), kTol).data(), a.data()) <= 1e-14);
}

TEST_CASE("J ppt preserves self-adjointness") {
  Xoshiro256pp rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const GenSpec spec{rng.index(4), 1 + rng.index(4),
                       rng.coin() ? Field::complex : Field::real, rng.next(), 1.0};
    const Matrix j = jppt(rand_hermitian(spec), kTol).data();
    CHECK(max_abs_diff(j, j.adjoint()) <= 1e-12);
  }
}

TEST_CASE("hat embedding") {
  Xoshiro256pp rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const Field f = rng.coin() ? Field::complex : Field::real;
    const std::size_t n1 = rng.index(4), n2 = rng.index(4);
    const BlockMatrix a(draw_matrix(rng, n1 + n2, n1 + n2, f, 1.0), n1, n2);
    const BlockMatrix h = hat_embedding(a, kTol);
    CHECK(h.n1() == n1 + n2);
    CHECK(h.n2() == n2);
    CHECK(max_abs_diff(schur_complement(h, kTol), jppt(a, kTol).data()) <= 1e-10);
  }

  const BlockMatrix zero22(Matrix::from_rows({{1, 2}, {3, 0}}), 1, 1);
  const BlockMatrix hz = hat_embedding(zero22, kTol);
  CHECK(hz.a12().block(1, 0, 1, 1).norm_max() == 0.0);
  CHECK(hz.a21().block(0, 1, 1, 1).norm_max() == 0.0);

  const BlockMatrix hi = hat_embedding(BlockMatrix(Matrix::identity(3), 1, 2), kTol);
  CHECK(hi.a22() == Matrix::identity(2));
  CHECK(max_abs_diff(hi.a12().block(1, 0, 2, 2), -Matrix::identity(2)) <= 1e-15);
  CHECK(max_abs_diff(hi.a21().block(0, 1, 2, 2), -Matrix::identity(2)) <= 1e-15);
}

TEST_CASE("EP congruence for the Schur complement") {
  Xoshiro256pp rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const GenSpec spec{1 + rng.index(3), 1 + rng.index(3), Field::complex, rng.next(), 1.0};
    const EpSchurCongruence h = ep_congruence_schur(rand_hermitian(spec), kTol);
    CHECK(h.schur_identity_residual <= kTol.eq_tol);
    CHECK(h.im_identity_residual <= kTol.eq_tol);

    const BlockMatrix a = rand_im_psd(spec);
    const EpSchurCongruence c = ep_congruence_schur(a, kTol);
    CHECK(c.schur_identity_residual <= kTol.eq_tol);
    CHECK(c.im_identity_residual <= kTol.eq_tol);
    CHECK(lambda_min(imag_part(schur_complement(a, kTol))) >= -kTol.psd_tol);
  }
  const BlockMatrix nilpotent22(
      assemble(Matrix::identity(1), Matrix(1, 2), Matrix(2, 1), Matrix::from_rows({{0, 1}, {0, 0}})),
      1, 2);
  CHECK_THROWS_AS(ep_congruence_schur(nilpotent22, kTol), PreconditionError);
  CHECK_THROWS_AS(jppt_im_congruence(nilpotent22, kTol), PreconditionError);
}

TEST_CASE("imaginary part of J ppt under congruence") {
  Xoshiro256pp rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const GenSpec spec{rng.index(4), 1 + rng.index(3), Field::complex, rng.next(), 1.0};
    const BlockMatrix a = rand_im_psd(spec);
    const JpptImCongruence w = jppt_im_congruence(a, kTol);
    CHECK(w.residual <= kTol.eq_tol);
    CHECK(lambda_min(imag_part(jppt(a, kTol).data())) >= -kTol.psd_tol);
  }
  GenSpec real{2, 2, Field::real, 5, 1.0};
  CHECK(jppt_im_congruence(rand_hermitian(real), kTol).residual == 0.0);

  // A = iI: J ppt(A) = diag(i I, -(1/i) I) = i I, so Im(J ppt A) = I.
  const BlockMatrix ii(Scalar(0.0, 1.0) * Matrix::identity(3), 1, 2);
  CHECK(max_abs_diff(jppt(ii, kTol).data(), Scalar(0.0, 1.0) * Matrix::identity(3)) <= 1e-15);
  CHECK(jppt_im_congruence(ii, kTol).residual <= kTol.eq_tol);
}

TEST_CASE("Aitken block diagonalization") {
  const BlockMatrix diag(Matrix::from_rows({{2, 0, 0}, {0, 3, 1}, {0, 1, 4}}), 1, 2);
  const AitkenFactors d = block_diagonalize(diag, kTol);
  CHECK(d.x.norm_max() == 0.0);
  CHECK(d.y.norm_max() == 0.0);
  CHECK(d.w == diag.a11());
  CHECK(d.z == diag.a22());

  Xoshiro256pp rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const Field f = rng.coin() ? Field::complex : Field::real;
    const std::size_t n1 = 1 + rng.index(3), n2 = 1 + rng.index(3);
    const BlockMatrix a(draw_matrix(rng, n1 + n2, n1 + n2, f, 1.0), n1, n2);
    const AitkenFactors r = block_diagonalize(a, kTol);
    CHECK(r.identity_residual <= kTol.eq_tol * certificate_scale(a));
    CHECK(r.reassembly_residual <= kTol.eq_tol * certificate_scale(a));
    CHECK(max_abs_diff(r.w, schur_complement(a, kTol)) == 0.0);
  }

  const BlockMatrix bad(Matrix::from_rows({{0, 1}, {0, 0}}), 1, 1);
  try {
    block_diagonalize(bad, kTol);
    FAIL("expected an inclusion failure");
  } catch (const PreconditionError& e) {
    CHECK(e.hypothesis() == "ker A22 <= ker A12");
  }
  const BlockMatrix bad_range(Matrix::from_rows({{0, 0}, {1, 0}}), 1, 1);
  try {
    block_diagonalize(bad_range, kTol);
    FAIL("expected an inclusion failure");
  } catch (const PreconditionError& e) {
    CHECK(e.hypothesis() == "ran A21 <= ran A22");
  }
}
