#include "rext_cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace rext::cli {

using ojson = nlohmann::ordered_json;

Check& Run::check(std::string name, std::string anchor, double residual, double tol) {
  Check c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.max_residual = residual;
  c.tolerance = tol;
  c.pass = std::isfinite(residual) && residual <= tol;
  checks.push_back(std::move(c));
  return checks.back();
}

int Report::total_checks() const {
  int k = 0;
  for (const auto& run : runs)
    for (const auto& c : run.checks) k += c.gating ? 1 : 0;
  return k;
}

int Report::failed_checks() const {
  int k = 0;
  for (const auto& run : runs)
    for (const auto& c : run.checks) k += (c.gating && !c.pass) ? 1 : 0;
  return k;
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

namespace {

void write(std::ostringstream& os, const ojson& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case ojson::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) os << ",\n";
        first = false;
        os << pad << ojson(k).dump() << ": ";
        write(os, v, indent + 2);
      }
      os << "\n" << close << "}";
      return;
    }
    case ojson::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << pad;
        write(os, j[i], indent + 2);
      }
      os << "\n" << close << "]";
      return;
    }
    case ojson::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
  }
}

ojson params_json(const RExtParams& p) {
  ojson j;
  j["a"] = p.a;
  j["b"] = p.b;
  return j;
}

}  // namespace

std::string to_json(const Report& r) {
  ojson j;
  j["tool"] = "rext";
  j["subcommand"] = r.subcommand;
  j["input"] = r.input;
  j["scenario"] = r.scenario;
  ojson env;
  env["seed"] = r.seed;
  env["points"] = r.points;
  env["tolerances"] = {{"identity", r.tol_identity}, {"equivalence", r.tol_equivalence}};
  j["environment"] = env;

  ojson runs = ojson::array();
  for (const auto& run : r.runs) {
    ojson rj;
    rj["suite"] = run.suite;
    rj["params"] = run.params ? params_json(*run.params) : ojson(nullptr);
    rj["samples"] = {{"accepted", run.accepted}, {"rejected", run.rejected}};
    ojson checks = ojson::array();
    for (const auto& c : run.checks) {
      ojson cj;
      cj["name"] = c.name;
      cj["anchor"] = c.anchor;
      cj["max_residual"] = c.max_residual;
      cj["tolerance"] = c.tolerance;
      cj["pass"] = c.pass;
      cj["gating"] = c.gating;
      if (!c.note.empty()) cj["note"] = c.note;
      checks.push_back(cj);
    }
    rj["checks"] = checks;
    ojson verdicts = ojson::object();
    for (const auto& [k, v] : run.verdicts) verdicts[k] = v;
    rj["verdicts"] = verdicts;
    rj["notes"] = run.notes;
    runs.push_back(rj);
  }
  j["runs"] = runs;
  j["summary"] = {{"checks", r.total_checks()}, {"failed", r.failed_checks()}, {"pass", r.pass()}};

  std::ostringstream os;
  write(os, j, 0);
  os << "\n";
  return os.str();
}

std::string to_table(const Report& r) {
  std::ostringstream os;
  os << "rext " << r.subcommand;
  if (!r.scenario.empty()) os << "  scenario: " << r.scenario;
  os << "  seed: " << r.seed << "  points: " << r.points << "\n";
  char buf[256];
  for (const auto& run : r.runs) {
    os << "\n== " << run.suite;
    if (run.params) os << "  (a = " << format_double(run.params->a) << ", b = " << format_double(run.params->b) << ")";
    os << "  samples: " << run.accepted << " accepted, " << run.rejected << " rejected\n";
    for (const auto& c : run.checks) {
      const char* tag = c.pass ? "PASS" : (c.gating ? "FAIL" : "DIFF");
      std::snprintf(buf, sizeof buf, "  [%s] %-40s max %-10.3g tol %-8.3g %s\n", tag, c.name.c_str(), c.max_residual,
                    c.tolerance, c.anchor.c_str());
      os << buf;
      if (!c.note.empty()) os << "         " << c.note << "\n";
    }
    for (const auto& [k, v] : run.verdicts) os << "  " << k << ": " << v << "\n";
    for (const auto& n : run.notes) os << "  note: " << n << "\n";
  }
  os << "\n" << (r.pass() ? "PASS" : "FAIL") << ": " << (r.total_checks() - r.failed_checks()) << "/"
     << r.total_checks() << " checks passed\n";
  return os.str();
}

}  // namespace rext::cli
