#include "rext_cli/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rext::cli {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

double as_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw InputError(where + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError(where + ": expected a finite number");
  return v;
}

std::string as_expression(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number()) {
    std::ostringstream os;
    os.precision(17);
    os << j.get<double>();
    return os.str();
  }
  throw InputError(where + ": expected an expression string");
}

std::array<int, 3> parse_key(const std::string& key) {
  std::array<int, 3> out{};
  std::istringstream is(key);
  char c1 = 0, c2 = 0;
  if (!(is >> out[0] >> c1 >> out[1] >> c2 >> out[2]) || c1 != ',' || c2 != ',' || !(is >> std::ws).eof()) {
    throw InputError("manifold.gamma: key \"" + key + "\" is not of the form \"k,i,j\"");
  }
  return out;
}

std::vector<Interval> parse_box(const json& j, int n, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw InputError(where + ": expected " + std::to_string(n) + " [lo, hi] pairs");
  }
  std::vector<Interval> box;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) throw InputError(w + ": expected [lo, hi]");
    Interval iv{as_number(j[i][0], w), as_number(j[i][1], w)};
    if (!(iv.lo <= iv.hi)) throw InputError(w + ": lo must not exceed hi");
    box.push_back(iv);
  }
  return box;
}

RExtParams parse_params(const json& j, const std::string& where) {
  RExtParams p{as_number(require(j, "a", where), where + ".a"), as_number(require(j, "b", where), where + ".b")};
  if (!(p.a > 0.0)) throw InputError(where + ".a: must be positive");
  return p;
}

template <class F>
auto with_expr_context(const std::string& where, F&& fn) {
  try {
    return fn();
  } catch (const expr::ParseError& e) {
    throw InputError(where + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
}

}  // namespace

HypersurfaceSpec Scenario::hypersurface(const RExtParams& prm) const {
  if (!has_hypersurface_data()) throw InputError("hypersurface checks need xi, f and t in the scenario");
  if (!(prm.b > 0.0)) throw InputError("hypersurface checks need b > 0");
  HypersurfaceSpec s{connection, prm, *xi, *f, *t};
  s.validate();
  return s;
}

Scenario parse_scenario(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) throw InputError("scenario: expected a JSON object");

  Scenario s;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError("name: expected a string");
    s.name = j["name"].get<std::string>();
  }

  const json& man = require(j, "manifold", "scenario");
  const json& dim = require(man, "dim", "manifold");
  if (!dim.is_number_integer() || dim.get<int>() < 2) throw InputError("manifold.dim: expected an integer >= 2");
  s.dim = dim.get<int>();
  const int n = s.dim;

  ConnectionSpec::Table table;
  if (man.contains("gamma")) {
    if (!man["gamma"].is_object()) throw InputError("manifold.gamma: expected an object");
    for (const auto& [key, val] : man["gamma"].items()) {
      table[parse_key(key)] = as_expression(val, "manifold.gamma[\"" + key + "\"]");
    }
  }
  s.connection = with_expr_context("manifold.gamma", [&] { return ConnectionSpec(n, table); });

  if (j.contains("xi")) {
    const json& xj = j["xi"];
    if (!xj.is_array()) throw InputError("xi: expected an array of expression strings");
    std::vector<std::string> comps;
    for (std::size_t i = 0; i < xj.size(); ++i) comps.push_back(as_expression(xj[i], "xi[" + std::to_string(i) + "]"));
    s.xi = with_expr_context("xi", [&] { return VectorFieldSpec::parse(comps, n); });
  }
  if (j.contains("f")) {
    const std::string ftext = as_expression(j["f"], "f");
    s.f = with_expr_context("f", [&] { return ScalarFieldSpec::parse(ftext, n); });
  }
  if (j.contains("t")) s.t = as_number(j["t"], "t");

  const json& pj = require(j, "params", "scenario");
  if (pj.is_array()) {
    if (pj.empty()) throw InputError("params: expected at least one {a, b}");
    for (std::size_t i = 0; i < pj.size(); ++i) s.params.push_back(parse_params(pj[i], "params[" + std::to_string(i) + "]"));
  } else {
    s.params.push_back(parse_params(pj, "params"));
  }

  s.x_box.assign(static_cast<std::size_t>(n), Interval{});
  s.omega_box.assign(static_cast<std::size_t>(n), Interval{});
  if (j.contains("sampling")) {
    const json& sj = j["sampling"];
    if (!sj.is_object()) throw InputError("sampling: expected an object");
    if (sj.contains("seed")) {
      if (!sj["seed"].is_number_unsigned()) throw InputError("sampling.seed: expected an unsigned integer");
      s.seed = sj["seed"].get<std::uint64_t>();
    }
    if (sj.contains("count")) {
      if (!sj["count"].is_number_integer() || sj["count"].get<long long>() < 1) {
        throw InputError("sampling.count: expected a positive integer");
      }
      s.count = sj["count"].get<int>();
    }
    if (sj.contains("x_box")) s.x_box = parse_box(sj["x_box"], n, "sampling.x_box");
    if (sj.contains("omega_box")) s.omega_box = parse_box(sj["omega_box"], n, "sampling.omega_box");
  }
  if (j.contains("tolerances")) {
    const json& tj = j["tolerances"];
    if (!tj.is_object()) throw InputError("tolerances: expected an object");
    if (tj.contains("identity")) s.tol_identity = as_number(tj["identity"], "tolerances.identity");
    if (tj.contains("equivalence")) s.tol_equivalence = as_number(tj["equivalence"], "tolerances.equivalence");
    if (!(s.tol_identity > 0.0) || !(s.tol_equivalence > 0.0)) throw InputError("tolerances: must be positive");
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Scenario load_scenario(const std::string& path) { return parse_scenario(read_file(path)); }

}  // namespace rext::cli
