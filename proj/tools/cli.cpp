#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <CLI11.hpp>

#include "matrix_io.hpp"
#include "ppt/block.hpp"
#include "ppt/linalg.hpp"
#include "ppt/order.hpp"
#include "ppt/varprin.hpp"
#include "ppt/verify.hpp"
#include "report.hpp"

namespace ppt::cli {
namespace {

using nlohmann::json;

struct Common {
  ToleranceConfig tol;
  bool human = false;
  std::vector<std::string> command;
};

json vector_json(const Matrix& v) { return entries_to_json(v); }

json basis_json(const SubspaceBasis& basis) {
  json out = json::array();
  for (std::size_t j = 0; j < basis.dim(); ++j) {
    out.push_back(entries_to_json(basis.vectors().block(0, j, basis.ambient_dim(), 1)));
  }
  return out;
}

json optional_json(const auto& v) { return v ? json(*v) : json(nullptr); }

int usage_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << "\n";
  return static_cast<int>(ExitCode::usage);
}

int cmd_transform(const Common& c, const std::string& file, const std::string& which,
                  std::ostream& out) {
  const BlockMatrix a = read_matrix_file(file);
  BlockMatrix result;
  if (which == "ppt") {
    result = gppt(a, c.tol);
  } else if (which == "jppt") {
    result = jppt(a, c.tol);
  } else if (which == "schur") {
    result = BlockMatrix(schur_complement(a, c.tol), a.n1(), 0);
  } else if (which == "pinv") {
    result = BlockMatrix(pinv(a.data(), c.tol), a.n1(), a.n2());
  } else {
    result = hat_embedding(a, c.tol);
  }
  out << format_matrix(result) << "\n";
  return static_cast<int>(ExitCode::ok);
}

int cmd_check_monotone(const Common& c, const std::string& file_a, const std::string& file_b,
                       std::ostream& out) {
  Report report(c.command, c.tol);
  const BlockMatrix a = read_matrix_file(file_a);
  const BlockMatrix b = read_matrix_file(file_b);
  if (!a.same_partition(b)) {
    return report.finish(out, c.human, ExitCode::usage, "partition mismatch between A and B");
  }
  MonotonicityReport r;
  try {
    r = monotonicity_report(a, b, c.tol);
  } catch (const PreconditionError& e) {
    report.check(e.hypothesis(), false);
    return report.finish(out, c.human, ExitCode::usage, e.what());
  }
  report.value("stmt_a", r.stmt_a);
  report.value("stmt_b", r.stmt_b);
  report.value("stmt_c", {{"constant", r.stmt_c.constant},
                          {"method", std::string(method_name(r.stmt_c.method))},
                          {"common_rank", optional_json(r.stmt_c.common_rank)},
                          {"witness_t", optional_json(r.stmt_c.witness_t)},
                          {"real_spectrum", r.stmt_c.real_spectrum}});
  report.value("schur_mono", r.schur_mono);
  report.check("A <= B", r.hypothesis_ok, lambda_min(b.data() - a.data()));
  report.check("consistent", r.consistent, std::nullopt, optional_json(r.stmt_c.witness_t));
  return report.finish(out, c.human, report.all_pass() ? ExitCode::ok : ExitCode::check_failed);
}

int cmd_solve(const Common& c, const std::string& file, const std::string& x1_text,
              const std::string& y2_text, std::ostream& out) {
  Report report(c.command, c.tol);
  const BlockMatrix a = read_matrix_file(file);
  const Matrix x1 = parse_vector(x1_text, "x1");
  const Matrix y2 = parse_vector(y2_text, "y2");
  if (x1.rows() != a.n1() || y2.rows() != a.n2()) {
    return report.finish(out, c.human, ExitCode::usage,
                         "x1 needs " + std::to_string(a.n1()) + " values and y2 needs " +
                             std::to_string(a.n2()));
  }
  const double bound = c.tol.eq_tol * certificate_scale(a);
  SaddleSolution s;
  try {
    s = solve_saddle(a, x1, y2, c.tol);
  } catch (const PreconditionError& e) {
    report.check(e.hypothesis(), false);
    return report.finish(out, c.human, ExitCode::usage, e.what());
  } catch (const NoSolutionError& e) {
    report.check("y2 - A21 x1 in ran A22", false, e.residual());
    return report.finish(out, c.human, ExitCode::check_failed, e.what());
  }
  report.check("ker A22 <= ker A12", true, kernel_certificate(a, c.tol));
  report.check("ran A21 <= ran A22", true, range_certificate(a, c.tol));
  report.value("y1", vector_json(s.y1));
  report.value("x2", vector_json(s.particular_x2));
  report.value("x2_kernel_basis", basis_json(s.x2_set.kernel()));
  report.check("residual", s.residual <= bound, s.residual);
  report.check("packaging", s.packaging_residual <= bound, s.packaging_residual);
  return report.finish(out, c.human, report.all_pass() ? ExitCode::ok : ExitCode::check_failed);
}

int cmd_verify(const Common& c, const std::string& suite, const SuiteOptions& options,
               std::ostream& out) {
  Report report(c.command, c.tol);
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    names.push_back(suite);
  }
  std::vector<SuiteResult> results;
  for (const auto& name : names) results.push_back(run_suite(name, options));

  for (const SuiteResult& r : results) {
    for (const CheckSummary& s : r.checks) {
      const std::optional<double> worst =
          std::isnan(s.worst) ? std::nullopt : std::optional<double>(s.worst);
      report.check(r.suite + "/" + s.name, s.pass(), worst,
                   {{"evaluations", s.evaluations},
                    {"failures", s.failures},
                    {"threshold", worst ? json(s.threshold) : json(nullptr)}});
    }
    for (const TrialFailure& f : r.failures) {
      report.record("failure",
                    {{"suite", r.suite},
                     {"check", f.check},
                     {"trial", f.trial},
                     {"seed", f.seed},
                     {"detail", f.detail},
                     {"reproduce", "verify --suite " + r.suite + " --trial-seed " +
                                       std::to_string(f.seed)}});
    }
    report.record("suite", {{"suite", r.suite},
                            {"trials", r.trials},
                            {"seed", options.seed},
                            {"seconds", r.seconds},
                            {"pass", r.pass()}});
  }
  return report.finish(out, c.human, report.all_pass() ? ExitCode::ok : ExitCode::check_failed);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Principal pivot transforms, Schur complements and their order properties"};
  app.name(args.empty() ? "pptool" : args.front());
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  common.command = args;
  app.add_option("--rank-tol", common.tol.rank_rel_tol, "relative singular value cutoff")
      ->capture_default_str();
  app.add_option("--psd-tol", common.tol.psd_tol, "eigenvalue slack for semidefiniteness")
      ->capture_default_str();
  app.add_option("--eq-tol", common.tol.eq_tol, "slack for identities and certificates")
      ->capture_default_str();
  app.add_flag("--human", common.human, "tabular output");

  std::string file, file_b, which = "jppt", x1, y2, suite = "all";
  SuiteOptions options;
  std::optional<std::uint64_t> trial_seed;

  auto* transform = app.add_subcommand("transform", "print a transformed matrix file");
  transform->add_option("file", file, "matrix file, or - for standard input")->required();
  transform->add_option("--which", which, "ppt, jppt, schur, pinv or hat")
      ->check(CLI::IsMember({"ppt", "jppt", "schur", "pinv", "hat"}))
      ->capture_default_str();

  auto* check = app.add_subcommand("check-monotone", "evaluate the monotonicity statements");
  check->add_option("a", file, "matrix file A")->required();
  check->add_option("b", file_b, "matrix file B")->required();

  auto* solve = app.add_subcommand("solve", "solve the block system for y1 and x2");
  solve->add_option("file", file, "matrix file")->required();
  solve->add_option("--x1", x1, "values of x1, e.g. 1,2 or [[1,0],2]")->required();
  solve->add_option("--y2", y2, "values of y2")->required();

  auto* verify = app.add_subcommand("verify", "run seeded property suites");
  verify->add_option("--suite", suite, "suite name or all")->capture_default_str();
  verify->add_option("--trials", options.trials, "trials per suite")->capture_default_str();
  verify->add_option("--seed", options.seed, "master seed")->capture_default_str();
  verify->add_option("--threads", options.threads, "worker threads")->capture_default_str();
  verify->add_option("--trial-seed", trial_seed, "run a single trial with this seed");

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::usage);
  }

  try {
    common.tol.validate();
    if (*transform) return cmd_transform(common, file, which, out);
    if (*check) return cmd_check_monotone(common, file, file_b, out);
    if (*solve) return cmd_solve(common, file, x1, y2, out);
    options.tol = common.tol;
    options.trial_seed = trial_seed;
    if (suite != "all" &&
        std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
      std::string known;
      for (const auto& n : suite_names()) known += " " + n;
      return usage_error(err, "unknown suite '" + suite + "'; known: all" + known);
    }
    return cmd_verify(common, suite, options, out);
  } catch (const ParseError& e) {
    return usage_error(err, e.what());
  } catch (const InvalidInput& e) {
    return usage_error(err, e.what());
  } catch (const PreconditionError& e) {
    return usage_error(err, e.what());
  }
}

}  // namespace ppt::cli
