#include "ppt/gen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ppt {
namespace {

constexpr int kMaxAttempts = 10000;

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

Matrix column_of(const Matrix& m, std::size_t j) { return m.block(0, j, m.rows(), 1); }

Matrix columns(const Matrix& m, std::size_t first, std::size_t count) {
  return m.block(0, first, m.rows(), count);
}

// U diag(vals) U^H, symmetrized exactly.
Matrix spectral(const Matrix& u, const std::vector<double>& vals) {
  Matrix scaled = u;
  for (std::size_t j = 0; j < vals.size(); ++j) {
    for (std::size_t i = 0; i < u.rows(); ++i) scaled.set(i, j, u(i, j) * vals[j]);
  }
  if (u.cols() == 0) return Matrix(u.rows(), u.rows(), u.field());
  return hermitian_part(scaled * u.adjoint());
}

double spectral_norm(const Matrix& m) {
  if (m.empty()) return 0.0;
  return singular_values(m).front();
}

double min_abs(const std::vector<double>& v) {
  double best = std::numeric_limits<double>::infinity();
  for (double x : v) best = std::min(best, std::abs(x));
  return best;
}

std::size_t negatives(const std::vector<double>& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](double x) { return x < 0.0; }));
}

std::vector<double> signed_magnitudes(Xoshiro256pp& rng, std::size_t count, double mag) {
  std::vector<double> vals(count);
  for (double& x : vals) {
    const double m = rng.uniform_range(0.5, 1.0) * mag;
    x = rng.coin() ? m : -m;
  }
  return vals;
}

std::vector<double> positive_magnitudes(Xoshiro256pp& rng, std::size_t count, double mag) {
  std::vector<double> vals(count);
  for (double& x : vals) x = rng.uniform_range(0.01, 1.0) * mag;
  return vals;
}

Matrix random_hermitian(Xoshiro256pp& rng, std::size_t n, Field field, double mag) {
  return hermitian_part(draw_matrix(rng, n, n, field, mag));
}

// Rows [Q1, 0] that only touch the leading block; q in {0, 1}.
Matrix leading_rows(Xoshiro256pp& rng, const GenSpec& spec) {
  const std::size_t q = rng.index(2);
  return hcat(draw_matrix(rng, q, spec.n1, spec.field, spec.magnitude),
              Matrix(q, spec.n2, spec.field));
}

Matrix add_gram(const Matrix& a, const Matrix& p) {
  if (p.rows() == 0) return a;
  return hermitian_part(a + p.adjoint() * p);
}

void require_positive_magnitude(const GenSpec& spec) {
  if (!(spec.magnitude > 0.0) || !std::isfinite(spec.magnitude)) {
    throw InvalidInput("magnitude must be positive and finite");
  }
}

[[noreturn]] void exhausted(const char* what) {
  throw std::runtime_error(std::string(what) + ": no admissible sample within the attempt limit");
}

Matrix psd_with_kernel(Xoshiro256pp& rng, const Matrix& kernel, std::size_t n, Field field,
                       double mag) {
  // The first dim(kernel) columns span the kernel; the rest its complement.
  const Matrix full = extend_orthonormal(rng, kernel, n, field);
  const std::size_t kdim = std::min(kernel.cols(), n);
  const Matrix u = columns(full, kdim, n - kdim);
  return spectral(u, positive_magnitudes(rng, u.cols(), mag));
}

BlockPair generic_pair(Xoshiro256pp& rng, const GenSpec& spec) {
  const std::size_t n = spec.n();
  const double mag = spec.magnitude;
  const ToleranceConfig tol;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const Matrix a = random_hermitian(rng, n, spec.field, mag);
    const std::size_t k = 1 + rng.index(n);
    const Matrix b = add_gram(a, draw_matrix(rng, k, n, spec.field, 0.75 * mag));
    BlockPair out{BlockMatrix(a, spec.n1, spec.n2), BlockMatrix(b, spec.n1, spec.n2)};
    if (spec.n2 == 0) return out;
    const Matrix a22 = out.a.a22(), b22 = out.b.a22();
    const auto ea = hermitian_eigenvalues(a22), eb = hermitian_eigenvalues(b22);
    if (min_abs(ea) < 0.05 * mag || min_abs(eb) < 0.05 * mag) continue;
    if (negatives(ea) != negatives(eb) &&
        lambda_min(pinv(a22, tol) - pinv(b22, tol)) > -0.01 / mag) {
      continue;
    }
    return out;
  }
  exhausted("generic ordered pair");
}

BlockPair constant_rank_pair(Xoshiro256pp& rng, const GenSpec& spec) {
  const std::size_t n1 = spec.n1, n2 = spec.n2;
  const double mag = spec.magnitude;
  Matrix a = random_hermitian(rng, spec.n(), spec.field, mag);
  Matrix p2(1, n2, spec.field);
  if (n2 > 0) {
    const std::size_t r = rng.index(n2 + 1);
    const Matrix u = columns(extend_orthonormal(rng, Matrix(n2, 0), n2, spec.field), 0, r);
    const std::vector<double> vals = signed_magnitudes(rng, r, mag);
    a.set_block(n1, n1, spectral(u, vals));
    const std::size_t m = 1 + rng.index(std::max<std::size_t>(r, 1));
    const Matrix rmat = draw_matrix(rng, m, r, spec.field, mag);
    const double e_norm = spectral_norm(rmat);
    if (r > 0 && e_norm > 0.0) {
      const double eps = min_abs(vals) / (4.0 * e_norm * e_norm);
      p2 = std::sqrt(eps) * (rmat * u.adjoint());
    } else {
      p2 = Matrix(m, n2, spec.field);
    }
  }
  const Matrix p = hcat(draw_matrix(rng, p2.rows(), n1, spec.field, mag), p2);
  const Matrix b = add_gram(add_gram(a, p), leading_rows(rng, spec));
  return {BlockMatrix(a, n1, n2), BlockMatrix(b, n1, n2)};
}

BlockPair kernel_break_pair(Xoshiro256pp& rng, const GenSpec& spec) {
  const std::size_t n1 = spec.n1, n2 = spec.n2;
  if (n2 == 0) throw InvalidInput("kernel_break needs n2 >= 1");
  const double mag = spec.magnitude;
  Matrix a = random_hermitian(rng, spec.n(), spec.field, mag);
  const Matrix basis = extend_orthonormal(rng, Matrix(n2, 0), n2, spec.field);
  const Matrix v0 = column_of(basis, 0);
  const std::size_t others = rng.index(n2);
  Matrix a22 = spectral(columns(basis, 1, others), signed_magnitudes(rng, others, mag));
  double weight = 0.0;
  if (rng.coin()) {
    // Opposite-sign eigenvalues along v0: the rank path drops at a / (a + b).
    const double lo = rng.uniform_range(0.5, 1.0) * mag;
    const double hi = rng.uniform_range(0.5, 1.0) * mag;
    a22 = hermitian_part(a22 - lo * (v0 * v0.adjoint()));
    weight = lo + hi;
  } else {
    // v0 spans part of ker A22 but not of ker B22.
    weight = rng.uniform_range(0.5, 1.0) * mag;
  }
  a.set_block(n1, n1, a22);
  const Matrix row =
      hcat(draw_matrix(rng, 1, n1, spec.field, mag), std::sqrt(weight) * v0.adjoint());
  const Matrix b = add_gram(add_gram(a, row), leading_rows(rng, spec));
  return {BlockMatrix(a, n1, n2), BlockMatrix(b, n1, n2)};
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t state = master ^ (index * 0xd1b54a32d192ed03ULL);
  splitmix64(state);
  return splitmix64(state);
}

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed) {
  for (auto& word : s_) word = splitmix64(seed);
}

std::uint64_t Xoshiro256pp::next() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256pp::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Xoshiro256pp::uniform(double magnitude) {
  return magnitude * (2.0 * uniform01() - 1.0);
}

double Xoshiro256pp::uniform_range(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

std::size_t Xoshiro256pp::index(std::size_t n) {
  if (n == 0) throw InvalidInput("index range must be positive");
  return static_cast<std::size_t>(next() % n);
}

bool Xoshiro256pp::coin() { return (next() >> 63) != 0; }

std::string_view mode_name(PairMode m) {
  switch (m) {
    case PairMode::generic:
      return "generic";
    case PairMode::constant_rank:
      return "constant_rank";
    case PairMode::kernel_break:
      return "kernel_break";
  }
  return "unknown";
}

Matrix draw_matrix(Xoshiro256pp& rng, std::size_t rows, std::size_t cols, Field field,
                   double magnitude) {
  std::vector<Scalar> v(rows * cols);
  for (Scalar& x : v) {
    const double re = rng.uniform(magnitude);
    const double im = field == Field::complex ? rng.uniform(magnitude) : 0.0;
    x = Scalar(re, im);
  }
  return Matrix::from_entries(rows, cols, std::move(v), field);
}

Matrix extend_orthonormal(Xoshiro256pp& rng, const Matrix& basis, std::size_t extra,
                          Field field) {
  const std::size_t n = basis.rows();
  const Field f = join(field, basis.field());
  std::vector<Matrix> q;
  const auto orthogonalize = [&](Matrix v) -> std::optional<Matrix> {
    const double start = v.norm_fro();
    for (int pass = 0; pass < 2; ++pass) {
      for (const Matrix& e : q) v -= inner(e, v) * e;
    }
    const double len = v.norm_fro();
    if (!(len > 1e-6 * std::max(1.0, start))) return std::nullopt;
    return (1.0 / len) * v;
  };
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    if (auto v = orthogonalize(column_of(basis, j))) q.push_back(std::move(*v));
  }
  const std::size_t target = std::min(n, q.size() + extra);
  for (int attempt = 0; q.size() < target; ++attempt) {
    if (attempt >= kMaxAttempts) exhausted("orthonormal extension");
    if (auto v = orthogonalize(draw_matrix(rng, n, 1, f, 1.0))) q.push_back(std::move(*v));
  }
  Matrix out(n, q.size(), f);
  for (std::size_t j = 0; j < q.size(); ++j) out.set_block(0, j, q[j]);
  return out;
}

BlockMatrix rand_hermitian(const GenSpec& spec) {
  require_positive_magnitude(spec);
  Xoshiro256pp rng(spec.seed);
  return BlockMatrix(random_hermitian(rng, spec.n(), spec.field, spec.magnitude), spec.n1,
                     spec.n2);
}

Matrix rand_psd_with_kernel(const GenSpec& spec, const SubspaceBasis& kernel) {
  require_positive_magnitude(spec);
  const std::size_t n = spec.n();
  if (kernel.ambient_dim() != n) {
    throw InvalidInput("kernel ambient dimension must equal n1 + n2");
  }
  if (kernel.dim() >= n) return Matrix(n, n, spec.field);
  Xoshiro256pp rng(spec.seed);
  return psd_with_kernel(rng, kernel.vectors(), n, spec.field, spec.magnitude);
}

BlockPair rand_ordered_pair(const GenSpec& spec, PairMode mode) {
  require_positive_magnitude(spec);
  Xoshiro256pp rng(spec.seed);
  switch (mode) {
    case PairMode::generic:
      return generic_pair(rng, spec);
    case PairMode::constant_rank:
      return constant_rank_pair(rng, spec);
    case PairMode::kernel_break:
      return kernel_break_pair(rng, spec);
  }
  throw InvalidInput("unknown pair mode");
}

BlockMatrix rand_im_psd(const GenSpec& spec) {
  require_positive_magnitude(spec);
  if (spec.field != Field::complex) {
    throw InvalidInput("an Im-PSD matrix needs the complex field");
  }
  Xoshiro256pp rng(spec.seed);
  const std::size_t n = spec.n();
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const Matrix h = random_hermitian(rng, n, Field::complex, spec.magnitude);
    const Matrix p = draw_matrix(rng, 1 + rng.index(n), n, Field::complex, spec.magnitude);
    const Matrix g = hermitian_part(p.adjoint() * p);
    BlockMatrix out(h + Scalar(0.0, 1.0) * g, spec.n1, spec.n2);
    const Matrix a22 = out.a22();
    if (spec.n2 > 0 && singular_values(a22).back() < 0.05 * spec.magnitude) continue;
    return out;
  }
  exhausted("Im-PSD matrix");
}

BlockMatrix rand_saddle_instance(const GenSpec& spec, bool hermitian) {
  require_positive_magnitude(spec);
  Xoshiro256pp rng(spec.seed);
  const std::size_t n1 = spec.n1, n2 = spec.n2;
  const double mag = spec.magnitude;
  Matrix a22(n2, n2, spec.field);
  if (n2 > 0) {
    const std::size_t k0 = 1 + rng.index(n2);
    const Matrix kernel =
        columns(extend_orthonormal(rng, Matrix(n2, 0), k0, spec.field), 0, k0);
    a22 = psd_with_kernel(rng, kernel, n2, spec.field, mag);
  }
  const Matrix r = draw_matrix(rng, n2, n1, spec.field, mag);
  const Matrix a11 = random_hermitian(rng, n1, spec.field, mag);
  const Matrix a21 = a22 * r;
  const Matrix a12 =
      hermitian ? a21.adjoint() : draw_matrix(rng, n1, n2, spec.field, mag) * a22;
  return BlockMatrix::from_blocks(a11, a12, a21, a22);
}

BlockPair rand_same_kernel_psd_pair(const GenSpec& spec, bool ordered) {
  require_positive_magnitude(spec);
  Xoshiro256pp rng(spec.seed);
  const std::size_t n1 = spec.n1, n2 = spec.n2;
  const double mag = spec.magnitude;
  Matrix range(n2, 0, spec.field);
  if (n2 > 0) {
    const std::size_t k0 = rng.index(n2);
    range = columns(extend_orthonormal(rng, Matrix(n2, 0), n2, spec.field), k0, n2 - k0);
  }
  // [L; I] A22 [L^H, I] + diag(F^H F, 0) is PSD and has ker A22 <= ker A12.
  const auto lift = [&](const Matrix& a22) {
    const Matrix t = vcat(draw_matrix(rng, n1, n2, spec.field, mag), Matrix::identity(n2));
    const Matrix f = draw_matrix(rng, rng.index(n1 + 1), n1, spec.field, mag);
    Matrix s(spec.n(), spec.n(), spec.field);
    if (f.rows() > 0) s.set_block(0, 0, f.adjoint() * f);
    return hermitian_part(t * a22 * t.adjoint() + s);
  };
  const Matrix a = lift(spectral(range, positive_magnitudes(rng, range.cols(), mag)));
  Matrix b;
  if (ordered) {
    const std::size_t m = 1 + rng.index(std::max<std::size_t>(range.cols(), 1));
    const Matrix p2 = draw_matrix(rng, m, range.cols(), spec.field, mag) * range.adjoint();
    const Matrix p = hcat(draw_matrix(rng, m, n1, spec.field, mag), p2);
    b = add_gram(add_gram(a, p), leading_rows(rng, spec));
  } else {
    // Same kernel, independently rotated range basis and spectrum.
    const Matrix w = extend_orthonormal(rng, Matrix(range.cols(), 0), range.cols(), spec.field);
    const Matrix rotated = range.cols() == 0 ? range : range * w;
    b = lift(spectral(rotated, positive_magnitudes(rng, rotated.cols(), mag)));
  }
  return {BlockMatrix(a, n1, n2), BlockMatrix(b, n1, n2)};
}

}  // namespace ppt
