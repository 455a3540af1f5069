#pragma once

// Seeded generators for the hypothesis classes the checks need.
//
// PRNG: xoshiro256++ whose four state words are the first four outputs of
// splitmix64 started at the seed. A uniform double is
// (next() >> 11) * 2^-53 in [0, 1); an entry of magnitude m is m * (2u - 1).
// Matrices are drawn row-major; a complex entry draws its real part, then its
// imaginary part. An index in [0, n) is next() % n. Identical GenSpec values
// give bit-identical output.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "ppt/block.hpp"
#include "ppt/linalg.hpp"
#include "ppt/matrix.hpp"

namespace ppt {

/// One step of splitmix64; advances `state`.
std::uint64_t splitmix64(std::uint64_t& state);

/// Seed for trial `index` of a run started from `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed);

  std::uint64_t next();
  /// [0, 1) with 53 random bits.
  double uniform01();
  /// [-magnitude, magnitude).
  double uniform(double magnitude);
  /// [lo, hi).
  double uniform_range(double lo, double hi);
  /// [0, n); n must be positive.
  std::size_t index(std::size_t n);
  bool coin();

 private:
  std::array<std::uint64_t, 4> s_{};
};

struct GenSpec {
  std::size_t n1 = 1;
  std::size_t n2 = 1;
  Field field = Field::real;
  std::uint64_t seed = 0;
  double magnitude = 1.0;

  std::size_t n() const noexcept { return n1 + n2; }
};

/// Entries uniform in [-magnitude, magnitude).
Matrix draw_matrix(Xoshiro256pp& rng, std::size_t rows, std::size_t cols, Field field,
                   double magnitude);
/// Orthonormal columns spanning span(basis) plus `extra` random directions
/// (modified Gram-Schmidt, two passes).
Matrix extend_orthonormal(Xoshiro256pp& rng, const Matrix& basis, std::size_t extra,
                          Field field);

/// (M + M^H) / 2 of a uniform draw.
BlockMatrix rand_hermitian(const GenSpec& spec);

/// Q Lambda Q^H with Q orthonormal on the complement of `kernel` and Lambda
/// drawn from [magnitude / 100, magnitude]. Dimension n1 + n2.
Matrix rand_psd_with_kernel(const GenSpec& spec, const SubspaceBasis& kernel);

enum class PairMode { generic, constant_rank, kernel_break };

std::string_view mode_name(PairMode m);

struct BlockPair {
  BlockMatrix a;
  BlockMatrix b;
};

/// Hermitian A, B with B - A = P^H P.
///   generic: A random, P random; resampled until A22, B22 keep eigenvalues
///     at least 0.05 * magnitude away from zero and, when their inertias
///     differ, lambda_min(A22^-1 - B22^-1) <= -0.01 / magnitude.
///   constant_rank: A22 has a random kernel and eigenvalues of modulus in
///     [0.5, 1] * magnitude; B22 - A22 = eps E with E >= 0 on ran A22 and
///     eps = min |eig A22| / (4 ||E||), so kernel and inertia are kept.
///   kernel_break: along a unit vector v0, either A22 has eigenvalue -a and
///     B22 eigenvalue b (a rank crossing at t = a / (a + b)) or A22 v0 = 0
///     and B22 gains eigenvalue c. Needs n2 >= 1.
BlockPair rand_ordered_pair(const GenSpec& spec, PairMode mode);

/// H1 + i P^H P with H1 Hermitian; resampled until sigma_min(A22) >=
/// 0.05 * magnitude. Complex field only.
BlockMatrix rand_im_psd(const GenSpec& spec);

/// A22 PSD with a nonzero kernel, A21 = A22 R, A12 = L A22, A11 Hermitian.
/// The Hermitian variant takes L = R^H.
BlockMatrix rand_saddle_instance(const GenSpec& spec, bool hermitian = false);

/// Positive semidefinite A, B with ker A22 = ker B22 (a random shared
/// kernel). With `ordered`, B = A + P^H P and P's trailing part lives on
/// ran A22, so A <= B as well.
BlockPair rand_same_kernel_psd_pair(const GenSpec& spec, bool ordered = false);

}  // namespace ppt
