#include "ppt/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "ppt/block.hpp"
#include "ppt/convexity.hpp"
#include "ppt/gen.hpp"
#include "ppt/linalg.hpp"
#include "ppt/order.hpp"
#include "ppt/varprin.hpp"

namespace ppt {
namespace {

enum class Kind { upper, lower, flag };

struct Observation {
  std::string check;
  Kind kind = Kind::flag;
  double value = 0.0;
  double bound = 0.0;
  bool pass = false;
  std::string detail;
};

class Recorder {
 public:
  explicit Recorder(std::string context = {}) : context_(std::move(context)) {}

  void set_context(std::string context) { context_ = std::move(context); }

  void at_most(std::string check, double value, double bound) {
    push(std::move(check), Kind::upper, value, bound, value <= bound);
  }
  void at_least(std::string check, double value, double bound) {
    push(std::move(check), Kind::lower, value, bound, value >= bound);
  }
  void expect(std::string check, bool ok) {
    push(std::move(check), Kind::flag, std::numeric_limits<double>::quiet_NaN(), 0.0, ok);
  }

  std::vector<Observation>& observations() { return obs_; }

 private:
  void push(std::string check, Kind kind, double value, double bound, bool pass) {
    std::string detail;
    if (!pass) {
      std::ostringstream os;
      os.precision(6);
      os << context_;
      if (kind != Kind::flag) os << (context_.empty() ? "" : " ") << "value=" << value
                                 << " bound=" << bound;
      detail = os.str();
    }
    obs_.push_back({std::move(check), kind, value, bound, pass, std::move(detail)});
  }

  std::string context_;
  std::vector<Observation> obs_;
};

using TrialFn = std::function<void(Xoshiro256pp&, const ToleranceConfig&, Recorder&)>;

Field draw_field(Xoshiro256pp& rng) { return rng.coin() ? Field::complex : Field::real; }

std::string describe(const GenSpec& spec) {
  std::ostringstream os;
  os << field_name(spec.field) << " n1=" << spec.n1 << " n2=" << spec.n2
     << " gen_seed=" << spec.seed;
  return os.str();
}

Matrix random_vector(Xoshiro256pp& rng, std::size_t n, Field f) {
  return draw_matrix(rng, n, 1, f, 1.0);
}

double relative(double residual, double scale) {
  return scale > 0.0 ? residual / scale : residual;
}

// ---------------------------------------------------------------- penrose

void penrose_trial(Xoshiro256pp& rng, const ToleranceConfig& tol, Recorder& rec) {
  const Field f = draw_field(rng);
  const std::size_t rows = 1 + rng.index(10), cols = 1 + rng.index(10);
  Matrix m;
  if (rng.coin()) {
    const std::size_t k = rng.index(std::min(rows, cols) + 1);
    m = draw_matrix(rng, rows, k, f, 1.0) * draw_matrix(rng, k, cols, f, 1.0);
  } else {
    m = draw_matrix(rng, rows, cols, f, 1.0);
  }
  std::ostringstream ctx;
  ctx << field_name(f) << " " << rows << "x" << cols;
  rec.set_context(ctx.str());

  const Matrix p = pinv(m, tol);
  const double nm = m.norm_max(), np = p.norm_max();
  const Matrix mp = m * p, pm = p * m;
  rec.at_most("penrose.m_p_m", relative(max_abs_diff(mp * m, m), nm), 1e-10);
  rec.at_most("penrose.p_m_p", relative(max_abs_diff(pm * p, p), np), 1e-10);
  rec.at_most("penrose.mp_hermitian", max_abs_diff(mp.adjoint(), mp), 1e-10);
  rec.at_most("penrose.pm_hermitian", max_abs_diff(pm.adjoint(), pm), 1e-10);
  rec.at_most("penrose.double_pinv", max_abs_diff(pinv(p, tol), m),
              tol.eq_tol * std::max(1.0, nm));
  rec.expect("penrose.rank_nullity", rank(m, tol) + kernel_basis(m, tol).dim() == cols);
}

// ------------------------------------------------------------- involution

void involution_trial(Xoshiro256pp& rng, const ToleranceConfig& tol, Recorder& rec) {
  const Field f = draw_field(rng);
  const std::size_t n1 = rng.index(7), n2 = 1 + rng.index(6);
  Matrix a;
  double cond = 0.0;
  do {
    a = draw_matrix(rng, n1 + n2, n1 + n2, f, 1.0);
    const auto s = singular_values(a.block(n1, n1, n2, n2));
    cond = s.back() > 0.0 ? s.front() / s.back() : std::numeric_limits<double>::infinity();
  } while (!(cond <= 1e6));
  std::ostringstream ctx;
  ctx << field_name(f) << " n1=" << n1 << " n2=" << n2 << " cond=" << cond;
  rec.set_context(ctx.str());
  const BlockMatrix blocks(a, n1, n2);
  rec.at_most("involution.gppt_gppt", max_abs_diff(gppt(gppt(blocks, tol), tol).data(), a),
              1e-8);

  // Prescribed singular values spread over up to six decades. The round trip
  // loses about cond(A22)^2 * eps, so the bound scales with it.
  const double decades = rng.uniform_range(0.0, 6.0);
  const Matrix u = extend_orthonormal(rng, Matrix(n2, 0), n2, f);
  const Matrix v = extend_orthonormal(rng, Matrix(n2, 0), n2, f);
  Matrix sigma(n2, n2, f);
  for (std::size_t i = 0; i < n2; ++i) {
    const double frac = n2 == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n2 - 1);
    sigma.set(i, i, std::pow(10.0, -decades * frac));
  }
  a.set_block(n1, n1, u * sigma * v.adjoint());
  const double spread = std::pow(10.0, decades);
  std::ostringstream ctx2;
  ctx2 << field_name(f) << " n1=" << n1 << " n2=" << n2 << " cond=" << spread;
  rec.set_context(ctx2.str());
  const BlockMatrix conditioned(a, n1, n2);
  rec.at_most("involution.gppt_gppt_conditioned",
              max_abs_diff(gppt(gppt(conditioned, tol), tol).data(), a),
              std::max(1e-8, 1e-14 * spread * spread));
}

// ---------------------------------------------------------- hat embedding

void hat_trial(Xoshiro256pp& rng, const ToleranceConfig& tol, Recorder& rec) {
  const Field f = draw_field(rng);
  const std::size_t n1 = rng.index(7), n2 = rng.index(7);
  Matrix a = draw_matrix(rng, n1 + n2, n1 + n2, f, 1.0);
  const bool singular = n2 > 0 && rng.coin();
  if (singular) {
    const std::size_t k = rng.index(n2);
    a.set_block(n1, n1, draw_matrix(rng, n2, k, f, 1.0) * draw_matrix(rng, k, n2, f, 1.0));
  }
  std::ostringstream ctx;
  ctx << field_name(f) << " n1=" << n1 << " n2=" << n2 << (singular ? " singular" : "");
  rec.set_context(ctx.str());
  const BlockMatrix blocks(a, n1, n2);
  rec.at_most("hat.schur_is_jppt",
              max_abs_diff(jppt(blocks, tol).data(),
                           schur_complement(hat_embedding(blocks, tol), tol)),
              1e-10);
  const BlockMatrix h(hermitian_part(a), n1, n2);
  rec.expect("hat.jppt_hermitian", is_hermitian(jppt(h, tol).data(), tol));
}

// ----------------------------------------------------------- monotonicity

void monotonicity_trial(Xoshiro256pp& rng, const ToleranceConfig& tol, Recorder& rec) {
  for (PairMode mode : {PairMode::generic, PairMode::constant_rank, PairMode::kernel_break}) {
    for (Field f : {Field::real, Field::complex}) {
      const GenSpec spec{rng.index(7), 1 + rng.index(6), f, rng.next(), 1.0};
      rec.set_context(std::string(mode_name(mode)) + " " + describe(spec));
      const BlockPair p = rand_ordered_pair(spec, mode);
      const MonotonicityReport r = monotonicity_report(p.a, p.b, tol);
      rec.expect("monotonicity.hypothesis", r.hypothesis_ok);
      rec.expect("monotonicity.consistent", r.consistent);
      rec.expect("monotonicity.conclusion", !r.stmt_b || r.schur_mono);
      if (mode == PairMode::constant_rank) {
        rec.expect("monotonicity.constant_rank_all_true",
                   r.stmt_a && r.stmt_b && r.stmt_c.constant && r.schur_mono);
      }
      if (mode == PairMode::kernel_break) {
        rec.expect("monotonicity.kernel_break_all_false",
                   !r.stmt_a && !r.stmt_b && !r.stmt_c.constant);
      }
      const Matrix c = p.a.a22(), d = p.b.a22();
      const bool by_inertia =
          rank_path_constant(c, d, tol, RankPathMethod::kernel_inertia).constant;
      const bool by_grid = rank_path_constant(c, d, tol, RankPathMethod::sampled).constant;
      rec.expect("monotonicity.rank_routes_agree",
                 by_inertia == r.stmt_c.constant && by_grid == r.stmt_c.constant);
      rec.expect("monotonicity.order_conditions_match",
                 jppt_order_conditions(p.a, p.b, tol).overall == r.stmt_a);
    }
  }
}

// ---------------------------------------------------------- pinv monotone

void pinv_monotone_trial(Xoshiro256pp& rng, const ToleranceConfig& tol, Recorder& rec) {
  const PairMode mode = static_cast<PairMode>(rng.index(3));
  const GenSpec spec{0, 1 + rng.index(8), draw_field(rng), rng.next(), 1.0};
  rec.set_context(std::string(mode_name(mode)) + " " + describe(spec));
  const BlockPair p = rand_ordered_pair(spec, mode);
  const PinvMonotonicity r = pinv_monotone(p.a.data(), p.b.data(), tol);
  rec.expect("pinv_monotone.matches_direct", r.holds == r.direct);
}

// ---------------------------------------------------------- spectral path

void spectral_path_trial(Xoshiro256pp& rng, const ToleranceConfig& tol, Recorder& rec) {
  const GenSpec spec{0, 1 + rng.index(8), draw_field(rng), rng.next(), 1.0};
  rec.set_context(describe(spec));
  const BlockPair p = rand_ordered_pair(spec, PairMode::generic);
  const Matrix& c = p.a.data();
  const Matrix& d = p.b.data();
  const SpectralPathCheck s = spectral_path_check(c, d, tol);
  const auto samples = sample_rank_path(c, d, tol);
  const bool grid_clear = std::all_of(samples.begin(), samples.end(), [&](const PathSample& x) {
    return x.rank == c.rows() && x.inertia.n_neg == samples.front().inertia.n_neg;
  });
  rec.expect("spectral_path.matches_grid", s.no_crossing == grid_clear);
  rec.expect("spectral_path.real_spectrum", s.real_spectrum);
}

// ---------------------------------------------------------------- varprin

double quadratic(const BlockMatrix& a, const Matrix& x1, const Matrix& x2) {
  const Matrix z = vcat(x1, x2);
  return inner(z, a.data() * z).real();
}

// A direction off the kernel with the requested Euclidean norm, or an empty
// matrix when the draw lies in the kernel.
Matrix off_kernel(Xoshiro256pp& rng, const SubspaceBasis& kernel, Field f, double norm) {
  Matrix g = random_vector(rng, kernel.ambient_dim(), f);
  if (kernel.dim() > 0) g -= kernel.vectors() * (kernel.vectors().adjoint() * g);
  const double len = g.norm_fro();
  if (!(len > 1e-6)) return {};
  return (norm / len) * g;
}

// Rebuilds the Hermitian matrix whose quadratic form is 2 * ppt_min value.
Matrix polarize(const BlockMatrix& a, const ToleranceConfig& tol) {
  const std::size_t n1 = a.n1(), n = a.n();
  const auto q = [&](const Matrix& z) {
    return 2.0 * ppt_min(a, z.block(0, 0, n1, 1), z.block(n1, 0, n - n1, 1), tol).value;
  };
  const auto unit = [&](std::size_t i, Scalar s) {
    Matrix e(n, 1, a.field());
    e.set(i, 0, s);
    return e;
  };
  Matrix m(n, n, a.field());
  for (std::size_t j = 0; j < n; ++j) {
    m.set(j, j, q(unit(j, 1.0)));
    for (std::size_t k = j + 1; k < n; ++k) {
      const double re = (q(unit(j, 1.0) + unit(k, 1.0)) - q(unit(j, 1.0) - unit(k, 1.0))) / 4.0;
      double im = 0.0;
      if (a.field() == Field::complex) {
        const Scalar i(0.0, 1.0);
        im = -(q(unit(j, 1.0) + unit(k, i)) - q(unit(j, 1.0) - unit(k, i))) / 4.0;
      }
      m.set(j, k, Scalar(re, im));
      m.set(k, j, Scalar(re, -im));
    }
  }
  return m;
}

void varprin_trial(Xoshiro256pp& rng, const ToleranceConfig& tol, Recorder& rec) {
  const GenSpec spec{1 + rng.index(5), 1 + rng.index(5), draw_field(rng), rng.next(), 1.0};
  rec.set_context(describe(spec));
  const BlockMatrix a = rand_saddle_instance(spec, /*hermitian=*/true);
  const Field f = spec.field;
  const Matrix x1 = random_vector(rng, spec.n1, f);
  const Matrix y2 = random_vector(rng, spec.n2, f);

  const Minimum m = ppt_min(a, x1, y2, tol);
  const SubspaceBasis& ker = m.minimizers.kernel();
  rec.at_most("varprin.value_attained",
              std::abs(objective(a, x1, m.minimizers.particular(), y2, tol) - m.value), 1e-9);
  for (int i = 0; i < 20; ++i) {
    const Matrix x2 = m.minimizers.point(random_vector(rng, ker.dim(), f));
    rec.at_most("varprin.flatness", std::abs(objective(a, x1, x2, y2, tol) - m.value), 1e-9);
  }
  static constexpr double kNorms[] = {1e-3, 1e-1, 1.0};
  for (int i = 0; i < 100; ++i) {
    const Matrix delta = off_kernel(rng, ker, f, kNorms[i % 3]);
    if (delta.empty()) continue;
    const double obj = objective(a, x1, m.minimizers.particular() + delta, y2, tol);
    rec.at_least("varprin.optimality", obj - m.value, -1e-8);
  }

  const Minimum s = schur_min(a, x1, tol);
  for (int i = 0; i < 100; ++i) {
    const Matrix delta = off_kernel(rng, ker, f, kNorms[i % 3]);
    if (delta.empty()) continue;
    rec.at_least("varprin.schur_optimality",
                 quadratic(a, x1, s.minimizers.particular() + delta) - s.value, -1e-8);
  }
  const Minimum zero = ppt_min(a, x1, Matrix(spec.n2, 1, f), tol);
  rec.at_most("varprin.schur_consistency", std::abs(zero.value - 0.5 * s.value), 1e-9);
  rec.expect("varprin.same_minimizers",
             s.minimizers.contains(zero.minimizers.particular(), tol) &&
                 zero.minimizers.kernel().dim() == s.minimizers.kernel().dim());
  rec.at_most("varprin.polarization", max_abs_diff(polarize(a, tol), jppt(a, tol).data()),
              1e-8);
}

// ----------------------------------------------------------------- saddle

void saddle_trial(Xoshiro256pp& rng, const ToleranceConfig& tol, Recorder& rec) {
  const GenSpec spec{1 + rng.index(5), 1 + rng.index(5), draw_field(rng), rng.next(), 1.0};
  const bool hermitian = rng.coin();
  rec.set_context(describe(spec) + (hermitian ? " hermitian" : ""));
  const BlockMatrix a = rand_saddle_instance(spec, hermitian);
  const Field f = spec.field;
  const Matrix x1 = random_vector(rng, spec.n1, f);
  const Matrix a22 = a.a22();
  const Matrix y2 = a22 * random_vector(rng, spec.n2, f);
  const double bound = 1e-9 * certificate_scale(a);

  const SaddleSolution s = solve_saddle(a, x1, y2, tol);
  rec.at_most("saddle.residual", s.residual, bound);
  rec.at_most("saddle.packaging", s.packaging_residual, bound);
  const SubspaceBasis& ker = s.x2_set.kernel();
  for (int i = 0; i < 5; ++i) {
    const Matrix x2 = s.x2_set.point(random_vector(rng, ker.dim(), f));
    rec.at_most("saddle.solution_set", max_abs_diff(a.data() * vcat(x1, x2), vcat(s.y1, y2)),
                bound);
  }
  // Moving y2 off ran A22 (along ker A22^H) must leave no solution.
  const SubspaceBasis left = kernel_basis(a22.adjoint(), tol);
  if (left.dim() > 0) {
    bool refused = false;
    try {
      solve_saddle(a, x1, y2 + left.vectors().block(0, 0, spec.n2, 1), tol);
    } catch (const NoSolutionError&) {
      refused = true;
    }
    rec.expect("saddle.no_solution_detected", refused);
  }
}

// ------------------------------------------------------------- concavity

void concavity_trial(Xoshiro256pp& rng, const ToleranceConfig& tol, Recorder& rec) {
  const GenSpec spec{1 + rng.index(4), 1 + rng.index(5), draw_field(rng), rng.next(), 1.0};
  rec.set_context(describe(spec));
  const BlockPair p = rand_same_kernel_psd_pair(spec);
  const Matrix c = p.a.a22(), d = p.b.a22();
  const BlockMatrix bc = border_for_pinv(c), bd = border_for_pinv(d);
  const std::size_t n1 = spec.n1, n2 = spec.n2;

  std::vector<double> ts = path_grid(11);
  for (int i = 0; i < 20; ++i) ts.push_back(rng.uniform01());
  for (double t : ts) {
    const JensenGap gj = jppt_concavity_gap(p.a, p.b, t, tol);
    const JensenGap gs = schur_concavity_gap(p.a, p.b, t, tol);
    const JensenGap gp = pinv_convexity_gap(c, d, t, tol);
    const JensenGap gb = jppt_concavity_gap(bc, bd, t, tol);
    rec.at_least("concavity.jppt_gap_psd", gj.lambda_min, -1e-8);
    rec.at_least("concavity.schur_gap_psd", gs.lambda_min, -1e-8);
    rec.at_least("concavity.pinv_gap_psd", gp.lambda_min, -1e-8);
    rec.at_most("concavity.schur_block", max_abs_diff(gs.gap, gj.gap.block(0, 0, n1, n1)),
                1e-10);
    rec.at_most("concavity.pinv_block", max_abs_diff(gp.gap, gj.gap.block(n1, n1, n2, n2)),
                1e-10);
    rec.at_most("concavity.pinv_bordered", max_abs_diff(gp.gap, gb.gap.block(1, 1, n2, n2)),
                1e-10);
  }
  GenSpec ordered_spec = spec;
  ordered_spec.seed = rng.next();
  const BlockPair q = rand_same_kernel_psd_pair(ordered_spec, /*ordered=*/true);
  const MonotonicityReport r = monotonicity_report(q.a, q.b, tol);
  rec.expect("concavity.ordered_pair_monotone", r.hypothesis_ok && r.stmt_a && r.consistent);
}

// ------------------------------------------------------- schur difference

void schur_difference_trial(Xoshiro256pp& rng, const ToleranceConfig& tol, Recorder& rec) {
  const GenSpec spec{rng.index(7), 1 + rng.index(6), draw_field(rng), rng.next(), 1.0};
  rec.set_context(describe(spec));
  const BlockPair p = rand_ordered_pair(spec, PairMode::constant_rank);
  const SchurDifferenceIdentity r = schur_difference_identity(p.a, p.b, tol);
  rec.at_most("schur_difference.residual", r.residual, 1e-9);
  rec.at_most("schur_difference.alternate_residual", r.alternate_residual, 1e-9);
  rec.expect("schur_difference.inclusions", r.inclusions_ok);
}

// ---------------------------------------------------------- ep congruence

void ep_congruence_trial(Xoshiro256pp& rng, const ToleranceConfig& tol, Recorder& rec) {
  const GenSpec spec{rng.index(7), 1 + rng.index(6), Field::complex, rng.next(), 1.0};
  rec.set_context(describe(spec));
  const BlockMatrix a = rand_im_psd(spec);
  rec.expect("ep_congruence.a22_is_ep", is_ep(a.a22(), tol));
  const JpptImCongruence w = jppt_im_congruence(a, tol);
  rec.at_most("ep_congruence.jppt_im_residual", w.residual, 1e-10);
  rec.at_least("ep_congruence.jppt_im_psd", lambda_min(imag_part(jppt(a, tol).data())), -1e-8);
  const EpSchurCongruence v = ep_congruence_schur(a, tol);
  rec.at_most("ep_congruence.schur_residual", v.schur_identity_residual, 1e-10);
  rec.at_most("ep_congruence.schur_im_residual", v.im_identity_residual, 1e-10);
  rec.at_least("ep_congruence.schur_im_psd",
               lambda_min(imag_part(schur_complement(a, tol))), -1e-8);
}

struct SuiteEntry {
  std::string name;
  TrialFn fn;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> suites = {
      {"penrose", penrose_trial},
      {"involution", involution_trial},
      {"hat-embedding", hat_trial},
      {"monotonicity", monotonicity_trial},
      {"pinv-monotone", pinv_monotone_trial},
      {"spectral-path", spectral_path_trial},
      {"varprin", varprin_trial},
      {"saddle", saddle_trial},
      {"concavity", concavity_trial},
      {"schur-difference", schur_difference_trial},
      {"ep-congruence", ep_congruence_trial},
  };
  return suites;
}

std::vector<Observation> run_trial(const TrialFn& fn, std::uint64_t seed,
                                   const ToleranceConfig& tol) {
  Recorder rec;
  Xoshiro256pp rng(seed);
  try {
    fn(rng, tol, rec);
  } catch (const std::exception& e) {
    rec.set_context(e.what());
    rec.expect("trial.exception", false);
  }
  return std::move(rec.observations());
}

}  // namespace

bool SuiteResult::pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckSummary& c) { return c.pass(); });
}

const CheckSummary* SuiteResult::find(std::string_view check) const {
  for (const auto& c : checks) {
    if (c.name == check) return &c;
  }
  return nullptr;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : registry()) out.push_back(s.name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& options) {
  options.tol.validate();
  const auto& suites = registry();
  const auto it = std::find_if(suites.begin(), suites.end(),
                               [&](const SuiteEntry& s) { return s.name == name; });
  if (it == suites.end()) throw InvalidInput("unknown suite '" + std::string(name) + "'");
  const std::size_t trials = options.trial_seed ? 1 : options.trials;
  if (trials == 0) throw InvalidInput("trials must be at least 1");

  const auto start = std::chrono::steady_clock::now();
  std::vector<std::uint64_t> seeds(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    seeds[i] = options.trial_seed ? *options.trial_seed : derive_seed(options.seed, i);
  }
  std::vector<std::vector<Observation>> per_trial(trials);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < trials; i = next++) {
      per_trial[i] = run_trial(it->fn, seeds[i], options.tol);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, trials));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteResult result;
  result.suite = std::string(name);
  result.trials = trials;
  std::map<std::string, std::size_t> index;
  std::map<std::string, std::size_t> reported;
  for (std::size_t i = 0; i < trials; ++i) {
    for (const Observation& o : per_trial[i]) {
      auto [pos, inserted] = index.try_emplace(o.check, result.checks.size());
      if (inserted) {
        CheckSummary c;
        c.name = o.check;
        c.threshold = o.bound;
        c.worst = o.kind == Kind::upper   ? 0.0
                  : o.kind == Kind::lower ? std::numeric_limits<double>::infinity()
                                          : std::numeric_limits<double>::quiet_NaN();
        result.checks.push_back(c);
      }
      CheckSummary& c = result.checks[pos->second];
      ++c.evaluations;
      if (o.kind == Kind::upper) c.worst = std::isnan(o.value) ? o.value : std::max(c.worst, o.value);
      if (o.kind == Kind::lower) c.worst = std::isnan(o.value) ? o.value : std::min(c.worst, o.value);
      if (!o.pass) {
        ++c.failures;
        if (reported[o.check]++ < 5) {
          result.failures.push_back({i, seeds[i], o.check, o.detail});
        }
      }
    }
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<SuiteResult> run_all_suites(const SuiteOptions& options) {
  std::vector<SuiteResult> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, options));
  return out;
}

}  // namespace ppt
