#include "rext_cli/acm_io.hpp"

#include <cmath>

#include "json.hpp"
#include "rext_cli/report.hpp"
#include "rext_cli/scenario.hpp"

namespace rext::cli {

using json = nlohmann::ordered_json;

namespace {

double number(const json& j, const std::string& where) {
  if (!j.is_number() || !std::isfinite(j.get<double>())) throw InputError(where + ": expected a finite number");
  return j.get<double>();
}

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("sample: missing \"") + key + "\"");
  return j.at(key);
}

void expect_array(const json& j, int m, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != m) {
    throw InputError(where + ": expected an array of length " + std::to_string(m));
  }
}

Eigen::VectorXd vector_of(const json& j, int m, const std::string& where) {
  expect_array(j, m, where);
  Eigen::VectorXd v(m);
  for (int i = 0; i < m; ++i) v(i) = number(j[static_cast<std::size_t>(i)], where);
  return v;
}

Eigen::MatrixXd matrix_of(const json& j, int m, const std::string& where) {
  expect_array(j, m, where);
  Eigen::MatrixXd a(m, m);
  for (int i = 0; i < m; ++i) a.row(i) = vector_of(j[static_cast<std::size_t>(i)], m, where).transpose();
  return a;
}

Tensor3 tensor_of(const json& j, int m, const std::string& where) {
  expect_array(j, m, where);
  Tensor3 F = Tensor3::cube(m);
  for (int a = 0; a < m; ++a) {
    const Eigen::MatrixXd slice = matrix_of(j[static_cast<std::size_t>(a)], m, where);
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) F(a, b, c) = slice(b, c);
  }
  return F;
}

std::string vec_json(const Eigen::VectorXd& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_double(v(i));
  return s + "]";
}

std::string mat_json(const Eigen::MatrixXd& a, const std::string& pad) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < a.rows(); ++i) s += (i ? ",\n" + pad + " " : "") + vec_json(a.row(i).transpose());
  return s + "]";
}

std::string tensor_json(const Tensor3& F, const std::string& pad) {
  const int m = F.extent(0);
  std::string s = "[";
  for (int a = 0; a < m; ++a) {
    Eigen::MatrixXd slice(m, m);
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) slice(b, c) = F(a, b, c);
    s += (a ? ",\n" + pad + " " : "") + mat_json(slice, pad + " ");
  }
  return s + "]";
}

}  // namespace

ACMSample parse_acm_sample(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) throw InputError("sample: expected a JSON object");
  const json& mj = field(j, "m");
  if (!mj.is_number_integer() || mj.get<int>() < 3 || mj.get<int>() % 2 == 0) {
    throw InputError("m: expected an odd integer >= 3");
  }
  ACMSample s;
  s.m = mj.get<int>();
  s.g = matrix_of(field(j, "g"), s.m, "g");
  s.phi = matrix_of(field(j, "phi"), s.m, "phi");
  s.xibar = vector_of(field(j, "xibar"), s.m, "xibar");
  s.eta = vector_of(field(j, "eta"), s.m, "eta");
  s.F = tensor_of(field(j, "F"), s.m, "F");
  if (j.contains("parts")) {
    const json& pj = j["parts"];
    if (pj.is_object()) {
      for (const auto& [name, t] : pj.items()) s.parts.push_back({name, tensor_of(t, s.m, "parts." + name)});
    } else if (pj.is_array()) {
      for (const auto& p : pj) {
        if (!p.is_object() || !p.contains("name") || !p["name"].is_string() || !p.contains("F")) {
          throw InputError("parts: expected {\"name\", \"F\"} objects");
        }
        const std::string name = p["name"].get<std::string>();
        s.parts.push_back({name, tensor_of(p["F"], s.m, "parts." + name)});
      }
    } else {
      throw InputError("parts: expected an object or a list");
    }
  }
  try {
    s.validate_shape();
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("sample: ") + e.what());
  }
  return s;
}

ACMSample load_acm_sample(const std::string& path) { return parse_acm_sample(read_file(path)); }

std::string acm_sample_to_json(const ACMSample& s) {
  std::string out = "{\n";
  out += "  \"m\": " + std::to_string(s.m) + ",\n";
  out += "  \"g\": " + mat_json(s.g, "  ") + ",\n";
  out += "  \"phi\": " + mat_json(s.phi, "  ") + ",\n";
  out += "  \"xibar\": " + vec_json(s.xibar) + ",\n";
  out += "  \"eta\": " + vec_json(s.eta) + ",\n";
  out += "  \"F\": " + tensor_json(s.F, "  ");
  if (!s.parts.empty()) {
    out += ",\n  \"parts\": {";
    for (std::size_t i = 0; i < s.parts.size(); ++i) {
      out += (i ? ",\n" : "\n");
      out += "    " + json(s.parts[i].name).dump() + ": " + tensor_json(s.parts[i].F, "    ");
    }
    out += "\n  }";
  }
  return out + "\n}\n";
}

}  // namespace rext::cli
