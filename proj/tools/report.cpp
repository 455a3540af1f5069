#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace ppt::cli {
namespace {

using nlohmann::json;

std::string join_words(const json& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w.get<std::string>();
  }
  return out;
}

std::string residual_text(const json& r) {
  if (r.is_null()) return "-";
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << r.get<double>();
  return os.str();
}

void print_human(std::ostream& out, const std::vector<json>& lines) {
  std::size_t width = 5;
  for (const auto& l : lines) {
    if (l["type"] == "check" || l["type"] == "value") {
      width = std::max(width, l["name"].get<std::string>().size());
    }
  }
  for (const auto& l : lines) {
    const std::string type = l["type"];
    if (type == "header") {
      out << "command:    " << join_words(l["command"]) << "\n";
      const json& t = l["tolerance"];
      out << "tolerances: rank_rel_tol=" << t["rank_rel_tol"].dump()
          << " psd_tol=" << t["psd_tol"].dump() << " eq_tol=" << t["eq_tol"].dump() << "\n\n";
      out << std::left << std::setw(static_cast<int>(width)) << "check" << "  result  "
          << std::setw(10) << "residual" << "  witness\n";
    } else if (type == "check") {
      out << std::left << std::setw(static_cast<int>(width)) << l["name"].get<std::string>()
          << "  " << (l["pass"].get<bool>() ? "pass  " : "FAIL  ") << "  " << std::setw(10)
          << residual_text(l["residual"]) << "  "
          << (l["witness"].is_null() ? "" : l["witness"].dump()) << "\n";
    } else if (type == "value") {
      out << std::left << std::setw(static_cast<int>(width)) << l["name"].get<std::string>()
          << "  = " << l["value"].dump() << "\n";
    } else if (type == "status") {
      out << "\nstatus: " << l["status"].get<std::string>() << " (exit " << l["exit"] << ")";
      if (l.contains("message")) out << ": " << l["message"].get<std::string>();
      out << "\n";
    } else {
      json rest = l;
      rest.erase("type");
      out << type << ": " << rest.dump() << "\n";
    }
  }
}

}  // namespace

json tolerance_json(const ToleranceConfig& tol) {
  return {{"rank_rel_tol", tol.rank_rel_tol}, {"psd_tol", tol.psd_tol}, {"eq_tol", tol.eq_tol}};
}

Report::Report(std::vector<std::string> command, const ToleranceConfig& tol) {
  lines_.push_back({{"type", "header"}, {"command", command}, {"tolerance", tolerance_json(tol)}});
}

void Report::check(const std::string& name, bool pass, std::optional<double> residual,
                   json witness) {
  json r = residual ? json(*residual) : json(nullptr);
  lines_.push_back({{"type", "check"},
                    {"name", name},
                    {"pass", pass},
                    {"residual", std::move(r)},
                    {"witness", std::move(witness)}});
  all_pass_ = all_pass_ && pass;
}

void Report::value(const std::string& name, json v) {
  lines_.push_back({{"type", "value"}, {"name", name}, {"value", std::move(v)}});
}

void Report::record(const std::string& type, json fields) {
  json line = {{"type", type}};
  line.update(fields);
  lines_.push_back(std::move(line));
}

int Report::finish(std::ostream& out, bool human, ExitCode code,
                   const std::string& message) const {
  std::vector<json> lines = lines_;
  const char* status = code == ExitCode::ok             ? "pass"
                       : code == ExitCode::check_failed ? "fail"
                                                        : "error";
  json last = {{"type", "status"}, {"status", status}, {"exit", static_cast<int>(code)}};
  if (!message.empty()) last["message"] = message;
  lines.push_back(std::move(last));
  if (human) {
    print_human(out, lines);
  } else {
    for (const auto& l : lines) out << l.dump() << "\n";
  }
  return static_cast<int>(code);
}

}  // namespace ppt::cli
