// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "ppt/order.hpp"
#include "ppt/verify.hpp"

using namespace ppt;
using namespace ppt::test;

namespace {

const ToleranceConfig kTol;

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit;  // seconds; <= 0 means none
  std::function<Verdict()> run;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

// Every check of the named suites must pass; `bounded` lists checks whose
// worst residual is reported.
Verdict suites(const std::vector<std::string>& names, std::size_t trials,
               const std::vector<std::string>& bounded = {}) {
  SuiteOptions options;
  options.trials = trials;
  options.seed = 42;
  Verdict v{true, {}};
  std::size_t evaluations = 0, failures = 0;
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, options);
    for (const auto& c : r.checks) {
      evaluations += c.evaluations;
      failures += c.failures;
    }
    v.pass = v.pass && r.pass();
    for (const auto& f : r.failures) {
      std::fprintf(stderr, "    failure %s trial %zu seed %llu: %s\n", f.check.c_str(), f.trial,
                   static_cast<unsigned long long>(f.seed), f.detail.c_str());
    }
    for (const auto& b : bounded) {
      if (const CheckSummary* c = r.find(b)) {
        v.detail += b + " worst=" + fmt(c->worst) + " (bound " + fmt(c->threshold) + "); ";
      }
    }
  }
  v.detail += std::to_string(evaluations) + " evaluations, " + std::to_string(failures) +
              " failures";
  return v;
}

Verdict crossing_fixture() {
  const BlockMatrix a = crossing_a(), b = crossing_b();
  const double ea = max_abs_diff(jppt(a, kTol).data(), Matrix::diagonal({0, 1}));
  const double eb = max_abs_diff(jppt(b, kTol).data(), Matrix::diagonal({0, -1}));
  const MonotonicityReport r = monotonicity_report(a, b, kTol);
  const double t = r.stmt_c.witness_t.value_or(std::nan(""));
  const bool ok = ea <= 1e-12 && eb <= 1e-12 && !r.stmt_a && !r.stmt_b && !r.stmt_c.constant &&
                  std::abs(t - 0.5) <= 1e-6 && r.consistent;
  return {ok, "jppt errors " + fmt(ea) + ", " + fmt(eb) + "; witness t=" + fmt(t)};
}

Verdict singular_fixture() {
  const BlockMatrix a = singular_a(), b = singular_b();
  const double ea = max_abs_diff(jppt(a, kTol).data(), singular_jppt_a());
  const double eb = max_abs_diff(jppt(b, kTol).data(), singular_jppt_b());
  const double pa = max_abs_diff(pinv(a.a22(), kTol), Matrix::from_rows({{0.5, 0.5}, {0.5, 0.5}}));
  const double pb =
      max_abs_diff(pinv(b.a22(), kTol), Matrix::from_rows({{0.25, 0.25}, {0.25, 0.25}}));
  const MonotonicityReport r = monotonicity_report(a, b, kTol);
  const bool ker_incl = subspace_leq(kernel_basis(b.a22(), kTol), kernel_basis(b.a12(), kTol), kTol);
  const bool ok = std::max({ea, eb, pa, pb}) <= 1e-12 && r.stmt_a && r.stmt_b &&
                  r.stmt_c.constant && r.schur_mono && r.consistent && !ker_incl;
  return {ok, "max fixture error " + fmt(std::max({ea, eb, pa, pb})) +
                  "; ker B22 <= ker B12 is " + (ker_incl ? "true" : "false")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "crossing example: J ppt values, all statements false, witness t = 1/2", 0.1,
       crossing_fixture},
      {2, "singular example: J ppt and pseudoinverse values, all statements true", 0.1,
       singular_fixture},
      {3, "monotonicity statements consistent on 500 pairs per mode, both fields", 30.0,
       [] { return suites({"monotonicity"}, 500); }},
      {4, "pseudoinverse monotonicity matches the direct Loewner test on 500 pairs", 0.0,
       [] { return suites({"pinv-monotone"}, 500); }},
      {5, "spectral no-crossing verdict matches the 101-point grid on 500 pairs", 0.0,
       [] { return suites({"spectral-path"}, 500); }},
      {6, "J ppt equals the Schur complement of the hat embedding on 500 matrices", 0.0,
       [] { return suites({"hat-embedding"}, 500, {"hat.schur_is_jppt"}); }},
      {7, "Penrose identities and ppt involution on 200 matrices each", 0.0,
       [] {
         return suites({"penrose", "involution"}, 200,
                       {"penrose.m_p_m", "penrose.p_m_p", "penrose.mp_hermitian",
                        "penrose.pm_hermitian", "involution.gppt_gppt"});
       }},
      {8, "variational principles: optimality, flatness, polarization on 200 instances", 0.0,
       [] {
         return suites({"varprin"}, 200,
                       {"varprin.optimality", "varprin.flatness", "varprin.polarization"});
       }},
      {9, "saddle solver residual and J ppt packaging on 200 instances", 0.0,
       [] { return suites({"saddle"}, 200, {"saddle.residual", "saddle.packaging"}); }},
      {10, "concavity gaps PSD on 200 pairs x 31 t values; block extraction", 0.0,
       [] {
         return suites({"concavity"}, 200,
                       {"concavity.jppt_gap_psd", "concavity.schur_gap_psd",
                        "concavity.pinv_gap_psd", "concavity.schur_block",
                        "concavity.pinv_block"});
       }},
      {11, "Schur complement of a difference, both correction forms, 200 pairs", 0.0,
       [] {
         return suites({"schur-difference"}, 200,
                       {"schur_difference.residual", "schur_difference.alternate_residual"});
       }},
      {12, "imaginary part of J ppt PSD and congruence residual on 200 matrices", 0.0,
       [] {
         return suites({"ep-congruence"}, 200,
                       {"ep_congruence.jppt_im_psd", "ep_congruence.jppt_im_residual"});
       }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0.0 && secs >= c.time_limit) {
      v.pass = false;
      v.detail += "; exceeded " + fmt(c.time_limit) + " s";
    }
    if (!v.pass) ++failed;
    std::printf("%s criterion %2d: %s [%.3f s] %s\n", v.pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), secs, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
