#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ecal/cli.hpp"
#include "ecal/lifecycle.hpp"
#include "ecal/report.hpp"

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ecal::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kDefault = ECAL_SOURCE_DIR "/scenarios/default.json";
const std::string kSweeps = ECAL_SOURCE_DIR "/scenarios/sweeps.json";

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("transmit prints B_T for BLE") {
  const auto r = invoke({"transmit", "--tech", "ble5", "--samples", "256", "--precision", "64"});
  CHECK(r.code == ecal::cli::kExitOk);
  CHECK(has_line(r.out, "B_T,17728"));
  CHECK(has_line(r.out, "E_T_b,3.1628e-09"));
}

TEST_CASE("transmit strict mode and custom profiles") {
  CHECK(has_line(invoke({"transmit", "--tech", "lorawan", "--samples", "256"}).out, "B_T,18796"));
  CHECK(has_line(invoke({"transmit", "--tech", "lorawan", "--samples", "256", "--strict-eq2"}).out, "B_T,18528"));
  const auto custom = invoke({"transmit", "--samples", "256", "--f-u", "2000", "--omega-u", "1400", "--p-t-w", "0.01",
                              "--r-t-bps", "1000"});
  CHECK(has_line(custom.out, "B_T,28984"));
  CHECK(has_line(custom.out, "E_T,0.28984"));
  CHECK(invoke({"transmit", "--samples", "256", "--f-u", "2000"}).code == ecal::cli::kExitValidation);
}

TEST_CASE("transmit cumulative series") {
  const auto r = invoke({"transmit", "--tech", "zigbee", "--samples", "256", "--interval", "60"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "time_s,e_t_cum_j"));
  CHECK(has_line(r.out, "86400,1.147392"));
}

TEST_CASE("storage") {
  const auto r = invoke({"storage", "--medium", "ssd", "--samples", "256"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "payload_bits,16384"));
}

TEST_CASE("preprocess") {
  CHECK(has_line(invoke({"preprocess", "--method", "minmax", "--samples", "1", "--invalid", "0"}).out, "flops,1"));
  const auto r = invoke({"preprocess", "--method", "normalization", "--samples", "256", "--invalid", "0"});
  CHECK(has_line(r.out, "flops,1533"));
  CHECK(has_line(r.out, "T_pre,1.533e-07"));
  CHECK(has_line(r.out, "E_pre,2.1462e-05"));
  CHECK(invoke({"preprocess", "--method", "minmax"}).code == ecal::cli::kExitValidation);
  CHECK(invoke({"preprocess", "--method", "minmax", "--samples", "4", "--invalid", "4"}).code ==
        ecal::cli::kExitValidation);
}

TEST_CASE("preprocess runs the instrumented routines on a dataset file") {
  const auto path = std::filesystem::temp_directory_path() / "ecal_cli_dataset.csv";
  {
    std::ofstream f(path);
    f << "1\n2\nNaN\n4\n\n8\n";
  }
  const auto r = invoke({"preprocess", "--method", "minmax", "--data", path.string()});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "samples,6"));
  CHECK(has_line(r.out, "invalid,2"));
  CHECK(has_line(r.out, "flops,7"));
  CHECK(has_line(r.out, "ledger_flops,9"));
  std::filesystem::remove(path);
  CHECK(invoke({"preprocess", "--method", "minmax", "--data", path.string()}).code == ecal::cli::kExitIo);
}

TEST_CASE("train-cost") {
  const auto r = invoke({"train-cost", "--scenario", kDefault});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "M_FP,226"));
  CHECK(has_line(r.out, "M_MLP_FP,404540"));
  CHECK(has_line(r.out, "M_MLP,1213620"));
  CHECK(has_line(r.out, "N_inf,17402"));
}

TEST_CASE("lifecycle gamma sweep gives decreasing eCAL in input order") {
  const auto r = invoke({"lifecycle", "--scenario", kDefault, "--gamma-sweep", "100,1000"});
  REQUIRE(r.code == 0);
  const auto pos = r.out.find("gamma,ecal_abs_j,ecal_abs_mean_j,ecal_j_per_b\n");
  REQUIRE(pos != std::string::npos);
  std::istringstream rows(r.out.substr(pos));
  std::string header, first, second;
  std::getline(rows, header);
  std::getline(rows, first);
  std::getline(rows, second);
  REQUIRE(first.rfind("100,", 0) == 0);
  REQUIRE(second.rfind("1000,", 0) == 0);
  const double e100 = std::stod(first.substr(first.rfind(',') + 1));
  const double e1000 = std::stod(second.substr(second.rfind(',') + 1));
  CHECK(e100 > e1000);
}

TEST_CASE("lifecycle values come straight from the library") {
  const auto r = invoke({"lifecycle", "--scenario", kDefault});
  const auto report = ecal::evaluate(ecal::default_scenario());
  CHECK(has_line(r.out, "E_D," + ecal::format_cell(report.development.e_d.value())));
  CHECK(has_line(r.out, "eCAL," + ecal::format_cell(report.ecal.value())));
  CHECK(has_line(r.out, "eCAL_abs," + ecal::format_cell(report.ecal_abs.value())));
}

TEST_CASE("lifecycle emits the document's sweeps") {
  const auto r = invoke({"lifecycle", "--scenario", kSweeps});
  CHECK(r.code == 0);
  CHECK(r.out.find("overhead_pct,f_u,omega_u") != std::string::npos);
  CHECK(r.out.find("n_s,n_nan,method,flops") != std::string::npos);
  CHECK(r.out.find("\n70,2000,1400,9,16784,") == std::string::npos);
}

TEST_CASE("carbon") {
  const auto r = invoke({"carbon", "--scenario", kDefault, "--ci-file", ECAL_SOURCE_DIR "/data/ci_2023.csv"});
  CHECK(r.code == 0);
  const auto de = r.out.find("\n1000,DE,");
  const auto fi = r.out.find("\n1000,FI,");
  CHECK(de != std::string::npos);
  CHECK(fi != std::string::npos);
  CHECK(de < fi);
  CHECK(invoke({"carbon", "--scenario", kDefault, "--ci-file", "/nonexistent/ci.csv"}).code == ecal::cli::kExitIo);
}

TEST_CASE("json output") {
  const auto r = invoke({"--json", "transmit", "--tech", "ble5", "--samples", "256"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"transmission\"") != std::string::npos);
  CHECK(r.out.find("17728") != std::string::npos);
}

TEST_CASE("reproduce writes files") {
  const auto dir = std::filesystem::temp_directory_path() / "ecal_cli_reproduce";
  std::filesystem::remove_all(dir);
  const auto r = invoke({"reproduce", "--target", "table1", "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(std::filesystem::exists(dir / "table1.csv"));
  std::filesystem::remove_all(dir);
  CHECK(invoke({"reproduce", "--target", "fig99"}).code == ecal::cli::kExitValidation);
}

TEST_CASE("exit codes for bad usage and missing files") {
  const auto bad_flag = invoke({"transmit", "--bogus"});
  CHECK(bad_flag.code == ecal::cli::kExitValidation);
  CHECK_FALSE(bad_flag.err.empty());
  CHECK(invoke({}).code == ecal::cli::kExitValidation);
  CHECK(invoke({"transmit", "--tech", "wifi", "--samples", "3"}).code == ecal::cli::kExitValidation);
  CHECK(invoke({"lifecycle", "--scenario", "/nonexistent/s.json"}).code == ecal::cli::kExitIo);
  CHECK(invoke({"lifecycle", "--scenario", kDefault, "--gamma-sweep", "10,x"}).code == ecal::cli::kExitValidation);
  CHECK(invoke({"--help"}).code == ecal::cli::kExitOk);
}

TEST_CASE("output flag writes the report to a file") {
  const auto path = std::filesystem::temp_directory_path() / "ecal_cli_out.csv";
  const auto r = invoke({"--output", path.string(), "storage", "--samples", "256"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(has_line(ss.str(), "payload_bits,16384"));
  std::filesystem::remove(path);
  CHECK(invoke({"--output", "/nonexistent/dir/x.csv", "storage", "--samples", "1"}).code == ecal::cli::kExitIo);
}

TEST_CASE("identical invocations are byte-identical") {
  const std::vector<std::vector<std::string>> cases{
      {"lifecycle", "--scenario", kSweeps},
      {"carbon", "--scenario", kDefault, "--gamma-sweep", "1,10,100"},
      {"reproduce", "--target", "all"},
      {"--json", "lifecycle", "--scenario", kDefault}};
  for (const auto& args : cases) {
    const auto a = invoke(args);
    const auto b = invoke(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
