#include "nonext/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "nonext/error.hpp"

namespace nonext::io {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void parse_error(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + what);
}

double number_field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) parse_error(path + "." + key, "missing");
  if (!j.at(key).is_number()) parse_error(path + "." + key, "must be a number");
  return j.at(key).get<double>();
}

std::uint64_t odd_integer_field(const Json& j, const std::string& key, const std::string& path) {
  const double v = number_field(j, key, path);
  if (v < 0 || v != std::floor(v) || v > 9.0e15) parse_error(path + "." + key, "must be a nonnegative integer");
  return static_cast<std::uint64_t>(v);
}

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

DeformationFunction function_from_json(const Json& j, const std::string& field) {
  if (!j.is_object()) parse_error(field, "must be an object with a \"kind\"");
  if (!j.contains("kind") || !j.at("kind").is_string()) parse_error(field + ".kind", "missing or not a string");
  const std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "tsallis_phi") return DeformationFunction::tsallis_phi();
    if (kind == "negated_phi") return DeformationFunction::negated_phi();
    if (kind == "one_minus_q_alpha") return DeformationFunction::one_minus_q_alpha();
    if (kind == "power_phi") return DeformationFunction::power_phi(number_field(j, "gamma", field));
    if (kind == "power_alpha") return DeformationFunction::power_alpha(number_field(j, "gamma", field));
    if (kind == "constant") return DeformationFunction::constant(number_field(j, "value", field));
    if (kind == "weierstrass_phi") {
      const double eps = j.contains("eps") ? number_field(j, "eps", field) : 1e-12;
      return DeformationFunction::weierstrass_phi(WeierstrassParams::make(
          number_field(j, "a", field), odd_integer_field(j, "b", field), eps));
    }
    if (kind == "tabulated") {
      if (!j.contains("points") || !j.at("points").is_array())
        parse_error(field + ".points", "missing or not an array");
      std::vector<std::pair<double, double>> pts;
      for (const auto& p : j.at("points")) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
          parse_error(field + ".points", "entries must be [q, value] number pairs");
        pts.emplace_back(p[0].get<double>(), p[1].get<double>());
      }
      return DeformationFunction::tabulated(std::move(pts));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(e.code(), "field '" + field + "': " + e.what());
  }
  parse_error(field + ".kind", "unknown kind \"" + kind + "\"");
}

Json function_to_json(const DeformationFunction& f) {
  Json j;
  j["kind"] = std::string(f.kind_name());
  std::visit(overloaded{
                 [](const deform::QMinusOne&) {},
                 [](const deform::OneMinusQ&) {},
                 [&](const deform::PowerPhi& p) { j["gamma"] = p.gamma; },
                 [&](const deform::PowerAlpha& p) { j["gamma"] = p.gamma; },
                 [&](const deform::Constant& p) { j["value"] = p.value; },
                 [&](const deform::WeierstrassPhi& p) {
                   j["a"] = p.params.a();
                   j["b"] = p.params.b();
                   j["eps"] = p.params.eps();
                 },
                 [&](const deform::Tabulated& p) {
                   Json pts = Json::array();
                   for (const auto& [q, v] : p.points) pts.push_back(Json::array({q, v}));
                   j["points"] = std::move(pts);
                 },
             },
             f.kind());
  return j;
}

EntropyFamily family_from_json(const Json& j) {
  if (!j.is_object()) parse_error("<root>", "family spec must be a JSON object");
  if (!j.contains("phi")) parse_error("phi", "missing");
  if (!j.contains("alpha")) parse_error("alpha", "missing");
  if (!j.contains("k")) parse_error("k", "missing");
  if (!j.at("k").is_number()) parse_error("k", "must be a number");
  const double k = j.at("k").get<double>();
  if (!(k > 0.0)) throw Error(ErrorCode::NonPositiveK, "field 'k': must be positive, got " + j.at("k").dump());

  FamilyValidation validation = FamilyValidation::strict;
  if (j.contains("validation")) {
    const auto& v = j.at("validation");
    if (v == "strict") validation = FamilyValidation::strict;
    else if (v == "permissive") validation = FamilyValidation::permissive;
    else parse_error("validation", "must be \"strict\" or \"permissive\"");
  }
  auto phi = function_from_json(j.at("phi"), "phi");
  auto alpha = function_from_json(j.at("alpha"), "alpha");
  try {
    return EntropyFamily::make(std::move(phi), std::move(alpha), k, validation);
  } catch (const Error& e) {
    throw Error(e.code(), std::string("family: ") + e.what());
  }
}

Json family_to_json(const EntropyFamily& f) {
  Json j;
  j["phi"] = function_to_json(f.phi_function());
  j["alpha"] = function_to_json(f.alpha_function());
  j["k"] = f.k();
  if (f.validation() == FamilyValidation::permissive) j["validation"] = "permissive";
  return j;
}

Distribution distribution_from_json(const Json& j, NormalizeMode mode) {
  if (!j.is_array()) parse_error("dist", "must be a JSON array of numbers");
  std::vector<double> v;
  for (const auto& x : j) {
    if (!x.is_number()) parse_error("dist", "entries must be numbers");
    v.push_back(x.get<double>());
  }
  return Distribution::make(v, mode);
}

Refinement refinement_from_json(const Json& j, NormalizeMode mode) {
  if (!j.is_array()) parse_error("rows", "must be an array of arrays");
  std::vector<std::vector<double>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) parse_error("rows", "each row must be an array");
    auto& r = rows.emplace_back();
    for (const auto& x : row) {
      if (!x.is_number()) parse_error("rows", "entries must be numbers");
      r.push_back(x.get<double>());
    }
  }
  return Refinement::make(std::move(rows), mode);
}

Json config_to_json(const CheckConfig& c) {
  Json j;
  j["q_grid"] = c.q_grid;
  j["dims"] = c.dims;
  j["samples"] = c.samples;
  j["refinements"] = c.refinements;
  j["max_rows"] = c.max_rows;
  j["max_m"] = c.max_m;
  j["seed"] = c.seed;
  j["convexity_grid"] = c.convexity_grid;
  j["sign_grid"] = c.sign_grid;
  j["sign_upper"] = c.sign_upper;
  j["probe_points"] = c.probe_points;
  j["probe_scales"] = c.probe_scales;
  j["shannon_limit_scales"] = {c.shannon_limit_scales.first, c.shannon_limit_scales.last};
  j["ratio_scales"] = {c.ratio_scales.first, c.ratio_scales.last};
  j["derivative_scales"] = {c.derivative_scales.first, c.derivative_scales.last};
  const Thresholds& t = c.thresholds;
  j["thresholds"] = {{"identity", t.identity},
                     {"expandability", t.expandability},
                     {"limit", t.limit},
                     {"alpha_phi", t.alpha_phi},
                     {"phi_derivative", t.phi_derivative},
                     {"convexity", t.convexity},
                     {"continuity_ratio", t.continuity_ratio},
                     {"probe", t.probe}};
  return j;
}

Json record_to_json(const CheckRecord& r) {
  Json j;
  j["name"] = r.name;
  j["verdict"] = std::string(to_string(r.verdict));
  j["q_values"] = r.q_values;
  j["sample_count"] = r.sample_count;
  j["max_residual"] = number_or_null(r.max_residual);
  j["threshold"] = r.threshold;
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json input = Json::array();
    for (const auto& row : w.input) {
      Json jr = Json::array();
      for (double x : row) jr.push_back(number_or_null(x));
      input.push_back(std::move(jr));
    }
    witnesses.push_back({{"q", number_or_null(w.q)},
                         {"residual", number_or_null(w.residual)},
                         {"input", std::move(input)},
                         {"note", w.note}});
  }
  j["witnesses"] = std::move(witnesses);
  Json metrics = Json::object();
  for (const auto& [name, value] : r.metrics) metrics[name] = number_or_null(value);
  j["metrics"] = std::move(metrics);
  j["diagnostic"] = r.diagnostic;
  return j;
}

Json report_to_json(const AxiomReport& r) {
  Json j;
  j["family"] = family_to_json(r.family);
  j["family_id"] = r.family.id();
  j["config"] = config_to_json(r.config);
  j["classification"] = r.classification;
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(record_to_json(c));
  j["checks"] = std::move(checks);
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, "malformed JSON in '" + path + "': " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace nonext::io
