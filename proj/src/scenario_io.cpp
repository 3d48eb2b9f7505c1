#include "ecal/scenario_io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ecal {

namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

std::string join(const std::string& parent, const std::string& key) {
  return parent.empty() ? key : parent + "." + key;
}

std::string index_path(const std::string& parent, std::size_t i) {
  return parent + "[" + std::to_string(i) + "]";
}

void reject_unknown_keys(const Json& obj, const std::string& path, const std::set<std::string>& allowed) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) throw SchemaError(join(path, key), "unknown field");
  }
}

const Json& require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path.empty() ? "<root>" : path, "expected an object");
  return j;
}

std::uint64_t as_count(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) {
    if (j.get<std::int64_t>() < 0) throw SchemaError(path, "must be non-negative");
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  }
  throw SchemaError(path, "expected a non-negative integer");
}

std::uint64_t as_positive_count(const Json& j, const std::string& path) {
  const auto v = as_count(j, path);
  if (v == 0) throw SchemaError(path, "must be at least 1");
  return v;
}

double as_real(const Json& j, const std::string& path) {
  if (!j.is_number()) throw SchemaError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw SchemaError(path, "must be finite");
  return v;
}

double as_positive_real(const Json& j, const std::string& path) {
  const double v = as_real(j, path);
  if (!(v > 0.0)) throw SchemaError(path, "must be positive");
  return v;
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

const Json& require_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

TechnologyProfile parse_technology(const Json& j, const std::string& path) {
  if (j.is_string()) return technology_by_name(j.get<std::string>());
  require_object(j, path);
  reject_unknown_keys(j, path, {"name", "f_u", "omega_u", "p_t_w", "r_t_bps", "packets_override"});
  for (const char* key : {"f_u", "omega_u", "p_t_w", "r_t_bps"}) {
    if (!j.contains(key)) throw SchemaError(join(path, key), "required field missing");
  }
  TechnologyProfile t{j.contains("name") ? as_string(j["name"], join(path, "name")) : "custom",
                      BitCount(as_positive_count(j["f_u"], join(path, "f_u"))),
                      BitCount(as_count(j["omega_u"], join(path, "omega_u"))),
                      Power(0.0),
                      BitRate(as_positive_real(j["r_t_bps"], join(path, "r_t_bps"))),
                      std::nullopt};
  const double p = as_real(j["p_t_w"], join(path, "p_t_w"));
  if (p < 0.0) throw SchemaError(join(path, "p_t_w"), "must be non-negative");
  t.p_t = Power(p);
  if (j.contains("packets_override")) {
    t.packets_override = as_positive_count(j["packets_override"], join(path, "packets_override"));
  }
  return t;
}

StorageProfile parse_storage(const Json& j, const std::string& path) {
  if (j.is_string()) return storage_by_name(j.get<std::string>());
  require_object(j, path);
  reject_unknown_keys(j, path, {"name", "wh_per_tb"});
  if (!j.contains("wh_per_tb")) throw SchemaError(join(path, "wh_per_tb"), "required field missing");
  const double density = as_real(j["wh_per_tb"], join(path, "wh_per_tb"));
  if (density < 0.0) throw SchemaError(join(path, "wh_per_tb"), "must be non-negative");
  return {j.contains("name") ? as_string(j["name"], join(path, "name")) : "custom", density};
}

ProcessingUnitProfile parse_processing_unit(const Json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown_keys(j, path, {"preprocessing_power_w", "preprocessing_flops_per_s", "flops_per_joule"});
  ProcessingUnitProfile pu;
  if (j.contains("preprocessing_power_w")) {
    pu.p_pre = Power(as_positive_real(j["preprocessing_power_w"], join(path, "preprocessing_power_w")));
  }
  if (j.contains("preprocessing_flops_per_s")) {
    pu.m_pu = as_positive_real(j["preprocessing_flops_per_s"], join(path, "preprocessing_flops_per_s"));
  }
  if (j.contains("flops_per_joule")) {
    pu.flops_per_joule = as_positive_real(j["flops_per_joule"], join(path, "flops_per_joule"));
  }
  return pu;
}

MlpArchitecture parse_mlp(const Json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown_keys(j, path, {"layers"});
  if (!j.contains("layers")) throw SchemaError(join(path, "layers"), "required field missing");
  const std::string layers_path = join(path, "layers");
  const auto& arr = require_array(j["layers"], layers_path);
  if (arr.size() < 2) throw SchemaError(layers_path, "needs at least an input and an output layer");
  std::vector<std::uint64_t> layers;
  for (std::size_t i = 0; i < arr.size(); ++i) layers.push_back(as_positive_count(arr[i], index_path(layers_path, i)));
  return MlpArchitecture(std::move(layers));
}

Sweeps parse_sweeps(const Json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown_keys(j, path, {"gamma", "overhead_pct", "invalid_samples"});
  Sweeps sweeps;
  if (j.contains("gamma")) {
    const std::string p = join(path, "gamma");
    const auto& arr = require_array(j["gamma"], p);
    for (std::size_t i = 0; i < arr.size(); ++i) sweeps.gamma.push_back(as_positive_count(arr[i], index_path(p, i)));
  }
  if (j.contains("overhead_pct")) {
    const std::string p = join(path, "overhead_pct");
    const auto& arr = require_array(j["overhead_pct"], p);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const double v = as_real(arr[i], index_path(p, i));
      if (v < 0.0) throw SchemaError(index_path(p, i), "must be non-negative");
      sweeps.overhead_pct.push_back(v);
    }
  }
  if (j.contains("invalid_samples")) {
    const std::string p = join(path, "invalid_samples");
    const auto& arr = require_array(j["invalid_samples"], p);
    for (std::size_t i = 0; i < arr.size(); ++i) sweeps.invalid_samples.push_back(as_count(arr[i], index_path(p, i)));
  }
  return sweeps;
}

bool valid_country_code(const std::string& code) {
  return code.size() == 2 && std::isupper(static_cast<unsigned char>(code[0])) &&
         std::isupper(static_cast<unsigned char>(code[1]));
}

}  // namespace

ScenarioDocument parse_scenario(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("<root>", std::string("malformed JSON: ") + e.what());
  }
  require_object(root, "");
  reject_unknown_keys(root, "",
                      {"samples", "invalid_samples", "bit_precision", "technology", "storage", "preprocessing",
                       "split_ratio", "epochs", "mlp", "inference_batch", "inference_invalid_samples", "gamma",
                       "processing_unit", "countries", "sweeps"});
  for (const char* key : {"samples", "epochs", "mlp", "inference_batch", "gamma"}) {
    if (!root.contains(key)) throw SchemaError(key, "required field missing");
  }

  ScenarioDocument doc;
  Scenario& s = doc.scenario;
  s.spec.n_s = as_count(root["samples"], "samples");
  if (root.contains("invalid_samples")) s.n_nan = as_count(root["invalid_samples"], "invalid_samples");
  if (s.n_nan > s.spec.n_s) throw SchemaError("invalid_samples", "exceeds samples");
  if (root.contains("bit_precision")) {
    const auto alpha = as_positive_count(root["bit_precision"], "bit_precision");
    if (alpha > std::numeric_limits<std::uint32_t>::max()) throw SchemaError("bit_precision", "too large");
    s.spec.alpha = static_cast<std::uint32_t>(alpha);
  }
  if (root.contains("technology")) s.technology = parse_technology(root["technology"], "technology");
  if (root.contains("storage")) s.storage = parse_storage(root["storage"], "storage");
  if (root.contains("preprocessing")) {
    const auto method = as_string(root["preprocessing"], "preprocessing");
    if (method != "minmax" && method != "normalization") {
      throw SchemaError("preprocessing", "expected \"minmax\" or \"normalization\"");
    }
    s.method = parse_method(method);
  }
  if (root.contains("split_ratio")) {
    s.beta = as_real(root["split_ratio"], "split_ratio");
    if (!(s.beta > 0.0) || s.beta > 1.0) throw SchemaError("split_ratio", "beta must be in (0, 1]");
  }
  s.n_epochs = as_positive_count(root["epochs"], "epochs");
  s.arch = parse_mlp(root["mlp"], "mlp");
  s.n_infer_batch = as_positive_count(root["inference_batch"], "inference_batch");
  if (root.contains("inference_invalid_samples")) {
    s.n_infer_nan = as_count(root["inference_invalid_samples"], "inference_invalid_samples");
    if (s.n_infer_nan >= s.n_infer_batch) {
      throw SchemaError("inference_invalid_samples", "must be below inference_batch");
    }
  }
  s.gamma = as_positive_count(root["gamma"], "gamma");
  if (root.contains("processing_unit")) s.pu = parse_processing_unit(root["processing_unit"], "processing_unit");
  if (root.contains("countries")) {
    const auto& arr = require_array(root["countries"], "countries");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      auto code = as_string(arr[i], index_path("countries", i));
      if (!valid_country_code(code)) throw SchemaError(index_path("countries", i), "expected two uppercase letters");
      s.countries.push_back(std::move(code));
    }
  }
  if (root.contains("sweeps")) doc.sweeps = parse_sweeps(root["sweeps"], "sweeps");

  try {
    s.validate();
  } catch (const InvalidArgument& e) {
    throw SchemaError("<root>", e.what());
  }
  return doc;
}

ScenarioDocument load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open scenario file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError(path.string(), "read failed");
  return parse_scenario(buf.str());
}

std::string serialize_scenario(const ScenarioDocument& doc) {
  const Scenario& s = doc.scenario;
  OrderedJson j;
  j["samples"] = s.spec.n_s;
  j["invalid_samples"] = s.n_nan;
  j["bit_precision"] = s.spec.alpha;

  OrderedJson tech;
  tech["name"] = s.technology.name;
  tech["f_u"] = s.technology.f_u.value();
  tech["omega_u"] = s.technology.omega_u.value();
  tech["p_t_w"] = s.technology.p_t.value();
  tech["r_t_bps"] = s.technology.r_t.value();
  if (s.technology.packets_override) tech["packets_override"] = *s.technology.packets_override;
  j["technology"] = std::move(tech);

  j["storage"] = OrderedJson{{"name", s.storage.name}, {"wh_per_tb", s.storage.wh_per_tb}};
  j["preprocessing"] = std::string(to_string(s.method));
  j["split_ratio"] = s.beta;
  j["epochs"] = s.n_epochs;
  j["mlp"] = OrderedJson{{"layers", std::vector<std::uint64_t>(s.arch.layer_sizes().begin(), s.arch.layer_sizes().end())}};
  j["inference_batch"] = s.n_infer_batch;
  j["inference_invalid_samples"] = s.n_infer_nan;
  j["gamma"] = s.gamma;
  j["processing_unit"] = OrderedJson{{"preprocessing_power_w", s.pu.p_pre.value()},
                                     {"preprocessing_flops_per_s", s.pu.m_pu},
                                     {"flops_per_joule", s.pu.flops_per_joule}};
  j["countries"] = s.countries;
  if (!doc.sweeps.empty()) {
    OrderedJson sw;
    if (!doc.sweeps.gamma.empty()) sw["gamma"] = doc.sweeps.gamma;
    if (!doc.sweeps.overhead_pct.empty()) sw["overhead_pct"] = doc.sweeps.overhead_pct;
    if (!doc.sweeps.invalid_samples.empty()) sw["invalid_samples"] = doc.sweeps.invalid_samples;
    j["sweeps"] = std::move(sw);
  }
  return j.dump(2) + "\n";
}

}  // namespace ecal
