#include "ecal/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecal/carbon.hpp"
#include "ecal/lifecycle.hpp"
#include "ecal/mlp_cost.hpp"
#include "ecal/preprocessing.hpp"
#include "ecal/report.hpp"
#include "ecal/reproduce.hpp"
#include "ecal/scenario_io.hpp"
#include "ecal/storage.hpp"
#include "ecal/transmission.hpp"

#ifndef ECAL_DEFAULT_CI_FILE
#define ECAL_DEFAULT_CI_FILE "data/ci_2023.csv"
#endif

namespace ecal::cli {

namespace {

namespace fs = std::filesystem;

// Named tables emitted by one invocation.
class Output {
 public:
  void add(std::string name, ReportTable table) { tables_.emplace_back(std::move(name), std::move(table)); }

  std::string render(bool json) const {
    if (!json) {
      std::string text;
      for (std::size_t i = 0; i < tables_.size(); ++i) {
        if (i) text += '\n';
        text += to_csv(tables_[i].second);
      }
      return text;
    }
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (const auto& [name, table] : tables_) doc[name] = nlohmann::ordered_json::parse(to_json(table));
    return doc.dump(2) + "\n";
  }

 private:
  std::vector<std::pair<std::string, ReportTable>> tables_;
};

ReportTable quantities(std::initializer_list<std::pair<std::string, Cell>> rows) {
  ReportTable t({"quantity", "value"});
  for (const auto& [name, value] : rows) t.add_row({name, value});
  return t;
}

Cell integer(std::uint64_t v) { return static_cast<std::int64_t>(v); }

CarbonIntensityTable load_ci(const std::optional<std::string>& explicit_path) {
  std::optional<fs::path> path;
  if (explicit_path) {
    path = *explicit_path;
  } else if (const char* env = std::getenv("ECAL_CI_FILE"); env && *env) {
    path = env;
  } else if (fs::exists(ECAL_DEFAULT_CI_FILE)) {
    path = ECAL_DEFAULT_CI_FILE;
  }
  if (!path) return bundled_ci_2023();

  std::ifstream in(*path, std::ios::binary);
  if (!in) throw IoError(path->string(), "cannot open carbon intensity file");
  return load_ci_table(in);
}

std::vector<std::uint64_t> parse_gamma_list(const std::string& text) {
  std::vector<std::uint64_t> gammas;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::uint64_t g = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), g);
    if (ec != std::errc() || ptr != item.data() + item.size() || g == 0) {
      throw InvalidArgument("--gamma-sweep: '" + item + "' is not a positive integer");
    }
    gammas.push_back(g);
  }
  if (gammas.empty()) throw InvalidArgument("--gamma-sweep: empty list");
  return gammas;
}

ScenarioDocument load_document(const std::string& path, bool strict_eq2) {
  ScenarioDocument doc = load_scenario_file(path);
  if (strict_eq2) doc.scenario.technology = doc.scenario.technology.strict();
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lifecycle energy and carbon model for AIoT systems", "ecal"};
  app.require_subcommand(1);
  bool json = false;
  std::optional<std::string> output_path;
  app.add_flag("--json", json, "Emit JSON instead of CSV")->configurable(false);
  app.add_option("--output", output_path, "Write the report to a file instead of stdout");
  app.fallthrough();

  // transmit
  auto* transmit = app.add_subcommand("transmit", "Transmitted bits and energy for one payload");
  std::string tech_name = "ble5";
  std::uint64_t samples = 256;
  std::uint32_t precision = 64;
  bool strict_eq2 = false;
  std::optional<std::uint64_t> f_u, omega_u;
  std::optional<double> p_t_w, r_t_bps, interval_s, horizon_s;
  transmit->add_option("--tech", tech_name, "Built-in technology: ble5, zigbee, lorawan")->capture_default_str();
  transmit->add_option("--samples", samples, "Sample count N_S")->required();
  transmit->add_option("--precision", precision, "Bits per sample")->capture_default_str();
  transmit->add_option("--f-u", f_u, "Custom profile: payload bits per packet");
  transmit->add_option("--omega-u", omega_u, "Custom profile: overhead bits per packet");
  transmit->add_option("--p-t-w", p_t_w, "Custom profile: transmit power in W");
  transmit->add_option("--r-t-bps", r_t_bps, "Custom profile: transmit rate in b/s");
  transmit->add_flag("--strict-eq2", strict_eq2, "Ignore packet-count overrides");
  transmit->add_option("--interval", interval_s, "Also emit cumulative energy for one transmission every N seconds");
  transmit->add_option("--horizon", horizon_s, "Cumulative series horizon in seconds")->default_str("86400");

  // storage
  auto* storage = app.add_subcommand("storage", "Energy to store one payload");
  std::string medium = "hdd";
  std::optional<double> wh_per_tb;
  storage->add_option("--medium", medium, "Built-in medium: hdd, ssd")->capture_default_str();
  storage->add_option("--wh-per-tb", wh_per_tb, "Custom density in Wh per TB");
  storage->add_option("--samples", samples, "Sample count N_S")->required();
  storage->add_option("--precision", precision, "Bits per sample")->capture_default_str();

  // preprocess
  auto* preprocess = app.add_subcommand("preprocess", "Preprocessing FLOPs and energy");
  std::string method_name;
  std::uint64_t invalid = 0;
  double power_w = 140.0;
  double flops_per_s = 1e10;
  std::optional<std::string> data_path;
  preprocess->add_option("--method", method_name, "minmax or normalization")->required();
  preprocess->add_option("--samples", samples, "Sample count N_S");
  preprocess->add_option("--invalid", invalid, "Invalid sample count N_NaN")->capture_default_str();
  preprocess->add_option("--precision", precision, "Bits per sample")->capture_default_str();
  preprocess->add_option("--power-w", power_w, "Processing unit power in W")->capture_default_str();
  preprocess->add_option("--flops-per-s", flops_per_s, "Processing unit throughput")->capture_default_str();
  preprocess->add_option("--data", data_path, "Raw dataset CSV (one value per line, NaN or empty = invalid)");

  // train-cost, lifecycle, carbon
  std::string scenario_path;
  std::optional<std::string> gamma_sweep_text;
  std::optional<std::string> ci_file;
  auto* train_cost = app.add_subcommand("train-cost", "MLP FLOPs and training, evaluation, inference energy");
  train_cost->add_option("--scenario", scenario_path, "Scenario JSON")->required();

  auto* lifecycle = app.add_subcommand("lifecycle", "Full lifecycle report");
  lifecycle->add_option("--scenario", scenario_path, "Scenario JSON")->required();
  lifecycle->add_option("--gamma-sweep", gamma_sweep_text, "Comma-separated inference counts");
  lifecycle->add_flag("--strict-eq2", strict_eq2, "Ignore packet-count overrides");

  auto* carbon = app.add_subcommand("carbon", "Carbon footprint per country");
  carbon->add_option("--scenario", scenario_path, "Scenario JSON")->required();
  carbon->add_option("--ci-file", ci_file, "Carbon intensity CSV (default: $ECAL_CI_FILE or bundled 2023 data)");
  carbon->add_option("--gamma-sweep", gamma_sweep_text, "Comma-separated inference counts");
  carbon->add_flag("--strict-eq2", strict_eq2, "Ignore packet-count overrides");

  // reproduce
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Regenerate reference tables and figure data");
  std::string target;
  std::optional<std::string> out_dir;
  reproduce_cmd->add_option("--target", target, "Target name or 'all'")->required();
  reproduce_cmd->add_option("--out", out_dir, "Directory for <target>.csv files");
  reproduce_cmd->add_option("--ci-file", ci_file, "Carbon intensity CSV");
  reproduce_cmd->add_flag("--strict-eq2", strict_eq2, "Ignore packet-count overrides");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    Output output;

    if (*transmit) {
      TechnologyProfile profile;
      if (f_u || omega_u || p_t_w || r_t_bps) {
        if (!(f_u && omega_u && p_t_w && r_t_bps)) {
          throw InvalidArgument("custom technology needs --f-u, --omega-u, --p-t-w and --r-t-bps");
        }
        profile = {"custom", BitCount(*f_u), BitCount(*omega_u), Power(*p_t_w), BitRate(*r_t_bps), std::nullopt};
      } else {
        profile = technology_by_name(tech_name);
      }
      if (strict_eq2) profile = profile.strict();
      const PayloadSpec spec{precision, samples};
      const BitCount b_t = transmitted_bits(profile, spec);
      output.add("transmission", quantities({{"technology", profile.name},
                                              {"payload_bits", integer(payload_bits(spec).value())},
                                              {"packets", integer(packet_count(profile, spec))},
                                              {"B_T", integer(b_t.value())},
                                              {"E_T", transmission_energy(profile, b_t).value()},
                                              {"E_T_b", transmission_energy_per_bit(profile).value()}}));
      if (interval_s) {
        ReportTable series({"time_s", "e_t_cum_j"});
        for (const auto& p : cumulative_transmission_energy(profile, spec, *interval_s, horizon_s.value_or(86400.0))) {
          series.add_row({p.time_s, p.energy.value()});
        }
        output.add("cumulative", std::move(series));
      }
    } else if (*storage) {
      const StorageProfile profile = wh_per_tb ? StorageProfile{"custom", *wh_per_tb} : storage_by_name(medium);
      const BitCount payload = payload_bits({precision, samples});
      output.add("storage", quantities({{"medium", profile.name},
                                        {"payload_bits", integer(payload.value())},
                                        {"E_storage", storage_energy(profile, payload).value()},
                                        {"E_storage_b", storage_energy_per_bit(profile).value()}}));
    } else if (*preprocess) {
      const StandardizationMethod method = parse_method(method_name);
      ProcessingUnitProfile pu;
      pu.p_pre = Power(power_w);
      pu.m_pu = flops_per_s;
      std::optional<StandardizeResult> executed;
      if (data_path) {
        std::ifstream in(*data_path, std::ios::binary);
        if (!in) throw IoError(*data_path, "cannot open dataset");
        const RawDataset raw = read_raw_dataset(in);
        samples = raw.n_s();
        invalid = raw.n_nan();
        const auto cleaned = clean(raw);
        executed = method == StandardizationMethod::MinMax ? minmax_scale(cleaned.valid) : normalize(cleaned.valid);
      } else if (preprocess->count("--samples") == 0) {
        throw InvalidArgument("preprocess needs --samples or --data");
      }
      const FlopCount flops = preprocessing_flops(method, samples, invalid);
      const auto cost = preprocessing_energy(pu, flops);
      ReportTable t({"quantity", "value"});
      t.add_row({std::string("method"), std::string(to_string(method))});
      t.add_row({std::string("samples"), integer(samples)});
      t.add_row({std::string("invalid"), integer(invalid)});
      t.add_row({std::string("flops"), integer(flops.value())});
      t.add_row({std::string("T_pre"), cost.t_pre.value()});
      t.add_row({std::string("E_pre"), cost.e_pre.value()});
      t.add_row({std::string("E_pre_b"), preprocessing_energy_per_bit(cost.e_pre, {precision, samples}).value()});
      if (executed) t.add_row({std::string("ledger_flops"), integer(executed->ledger.total().value())});
      output.add("preprocessing", std::move(t));
    } else if (*train_cost) {
      const Scenario s = load_document(scenario_path, false).scenario;
      const TrainSplit split = make_split(s.spec.n_s, s.beta);
      const FlopCount m_mlp_fp = training_forward_flops(s.arch, s.n_epochs, split.n_s_t);
      const auto train = training_energy(s.arch, s.n_epochs, split.n_s_t, s.pu, s.spec.alpha);
      const auto eval = evaluation_energy(s.arch, split.n_s_e, s.pu, s.spec.alpha);
      output.add("training", quantities({{"n_s_t", integer(split.n_s_t)},
                                         {"n_s_e", integer(split.n_s_e)},
                                         {"M_FP", integer(forward_flops(s.arch).value())},
                                         {"M_MLP_FP", integer(m_mlp_fp.value())},
                                         {"M_MLP", integer(training_total_flops(m_mlp_fp).value())},
                                         {"N_inf", integer(inference_flops(s.arch, s.n_infer_batch).value())},
                                         {"E_train", train.e_train.value()},
                                         {"E_train_b", train.e_train_b.value()},
                                         {"E_eval", eval.e_eval.value()},
                                         {"E_eval_b", eval.e_eval_b.value()},
                                         {"E_inf", inference_energy(s.arch, s.n_infer_batch, s.pu).value()}}));
    } else if (*lifecycle) {
      const ScenarioDocument doc = load_document(scenario_path, strict_eq2);
      output.add("report", lifecycle_table(evaluate(doc.scenario)));
      const auto gammas = gamma_sweep_text ? parse_gamma_list(*gamma_sweep_text) : doc.sweeps.gamma;
      if (!gammas.empty()) output.add("gamma_sweep", gamma_sweep_table(gamma_sweep(doc.scenario, gammas)));
      if (!doc.sweeps.overhead_pct.empty()) {
        output.add("overhead_sweep", overhead_sweep_table(doc.scenario, doc.sweeps.overhead_pct));
      }
      if (!doc.sweeps.invalid_samples.empty()) {
        output.add("invalid_sample_sweep", invalid_sample_sweep_table(doc.scenario, doc.sweeps.invalid_samples));
      }
    } else if (*carbon) {
      const ScenarioDocument doc = load_document(scenario_path, strict_eq2);
      const CarbonIntensityTable ci = load_ci(ci_file);
      std::vector<std::uint64_t> gammas = gamma_sweep_text ? parse_gamma_list(*gamma_sweep_text) : doc.sweeps.gamma;
      if (gammas.empty()) gammas = {doc.scenario.gamma};
      output.add("carbon", carbon_table(cf_vs_gamma(doc.scenario, ci, gammas)));
    } else if (*reproduce_cmd) {
      ReproduceOptions options;
      options.strict_eq2 = strict_eq2;
      options.ci = load_ci(ci_file);
      std::vector<std::string> targets;
      if (target == "all") {
        targets = reproduce_targets();
      } else {
        targets = {target};
      }
      if (out_dir) {
        std::error_code ec;
        fs::create_directories(*out_dir, ec);
        if (ec) throw IoError(*out_dir, "cannot create directory: " + ec.message());
        ReportTable written({"target", "path", "bytes"});
        for (const auto& name : targets) {
          const fs::path path = fs::path(*out_dir) / (name + ".csv");
          const std::size_t bytes = write_report(reproduce(name, options), path);
          written.add_row({name, path.string(), integer(bytes)});
        }
        output.add("written", std::move(written));
      } else {
        for (const auto& name : targets) output.add(name, reproduce(name, options));
      }
    }

    const std::string rendered = output.render(json);
    if (output_path) {
      std::ofstream file(*output_path, std::ios::binary | std::ios::trunc);
      if (!file) throw IoError(*output_path, "cannot open for writing");
      file << rendered;
      if (!file.flush()) throw IoError(*output_path, "write failed");
    } else {
      out << rendered;
    }
    return kExitOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace ecal::cli
