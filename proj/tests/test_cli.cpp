#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "stare/analytics.hpp"
#include "stare/eigenframe.hpp"
#include "stare/integrator.hpp"
#include "stare/scan.hpp"

#ifndef STARE_CLI_PATH
#error "STARE_CLI_PATH must point at the built binary"
#endif

using namespace stare;

TEST_SUITE_BEGIN("cli");

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string out_file = std::string(CLI_TMP_DIR) + "/cli_stdout.txt";
  const std::string cmd =
      env + " " + std::string(STARE_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream buf;
  buf << in.rdbuf();
  return {WEXITSTATUS(status), buf.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string tmp_path(const std::string& name) { return std::string(CLI_TMP_DIR) + "/" + name; }

}  // namespace

TEST_CASE("evolve stare writes a csv whose metadata matches the library") {
  const std::string out = tmp_path("evolve.csv");
  const RunResult r = run_cli("evolve --kind stare --a 10 --b 30 --di -8 --df 8 --schedule os "
                              "--points 41 --out " + out);
  REQUIRE(r.exit_code == 0);
  const std::string csv = slurp(out);
  REQUIRE(csv.rfind("# {", 0) == 0);
  const auto meta = nlohmann::json::parse(csv.substr(2, csv.find('\n') - 2));

  SweepSpec sweep{10.0, 30.0, -8.0, 8.0, ScheduleKind::OptimalStare};
  IntegrationConfig cfg;
  cfg.output_points = 41;
  const Trajectory traj = evolve(LiouvillianSpec::stare(sweep),
                                 DensityMatrix::checked(eigenframe(0.0, 10.0, -8.0).p_minus),
                                 {0.0, 1.0}, cfg);
  CHECK(meta.at("final_infidelity").get<double>() ==
        doctest::Approx(infidelity_final(traj, sweep)).epsilon(1e-12));
}

TEST_CASE("missing required flags exit with the usage code") {
  const RunResult r = run_cli("evolve --kind stare");
  CHECK(r.exit_code == 2);
  const RunResult r2 = run_cli("schedule --kind os");
  CHECK(r2.exit_code == 2);
  const RunResult r3 = run_cli("nonsense");
  CHECK(r3.exit_code == 2);
}

TEST_CASE("unit-system mixing is rejected") {
  const RunResult r =
      run_cli("evolve --kind stare --a 10 --b 30 --di -8 --df 8 --kappa 1");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("rejected") != std::string::npos);
  const RunResult r2 = run_cli("evolve --kind composite --ti -20 --tf 20 --a 4");
  CHECK(r2.exit_code == 2);
}

TEST_CASE("analytic prints the closed forms") {
  const RunResult r = run_cli("analytic --a 2 --b 100 --di -100 --df 100");
  REQUIRE(r.exit_code == 0);
  const SweepSpec spec{2.0, 100.0, -100.0, 100.0, ScheduleKind::OptimalStare};
  std::ostringstream expected;
  expected << "i_min," << format_double(i_min(spec));
  CHECK(r.output.find(expected.str()) != std::string::npos);
}

TEST_CASE("analytic transfer-time mode") {
  const RunResult r = run_cli("analytic --gamma 0.5 --g0 1 --target-i 0.01 --di -100 --df 100");
  REQUIRE(r.exit_code == 0);
  std::ostringstream expected;
  expected << "t_min," << format_double(t_min(0.5, 0.01, 1.0, -100.0, 100.0));
  CHECK(r.output.find(expected.str()) != std::string::npos);
}

TEST_CASE("analytic rejects mixing dimensionless and physical modes") {
  const RunResult r = run_cli("analytic --a 2 --b 100 --di -1 --df 1 --gamma 3");
  CHECK(r.exit_code == 2);
}

TEST_CASE("schedule table hits exact endpoints") {
  const RunResult r = run_cli("schedule --kind os --a 10 --b 30 --di -8 --df 8 --points 5");
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string line;
  std::getline(lines, line);  // metadata
  std::getline(lines, line);  // header
  std::getline(lines, line);
  CHECK(line.rfind("0,", 0) == 0);
  double q0 = std::abs(std::stod(line.substr(2, line.find(',', 2) - 2)));
  CHECK(q0 < 1e-10);
  std::string last;
  while (std::getline(lines, line))
    if (!line.empty()) last = line;
  CHECK(last.rfind("1,1,", 0) == 0);
}

TEST_CASE("schedule command reports the weak-dephasing fallback") {
  const RunResult r = run_cli("schedule --kind os --a 10 --b 1e-9 --di -8 --df 8 --points 3");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("\"fallback\":true") != std::string::npos);
}

TEST_CASE("validity reports the strong-coupling failure") {
  const RunResult r = run_cli("validity --x0 2 --g0 1 --kappa 1 --omega-a 1 --T 40");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("markov,4,0") != std::string::npos);
}

TEST_CASE("scan metadata round-trips through a config file") {
  const std::string out1 = tmp_path("scan1.csv");
  const RunResult r = run_cli("scan --axis a:2:10:2 --axis b:20:100:2:log --di -10 --df 10 "
                              "--protocols os,analytic --rtol 1e-9 --out " + out1);
  REQUIRE(r.exit_code == 0);
  const std::string csv1 = slurp(out1);
  const auto meta = nlohmann::json::parse(csv1.substr(2, csv1.find('\n') - 2));

  // regenerate a config from the metadata echo
  const std::string cfg_path = tmp_path("scan.toml");
  {
    std::ofstream cfg(cfg_path);
    cfg << "[scan]\n";
    cfg << "axis=[";
    bool first = true;
    for (const auto& ax : meta.at("axes")) {
      const std::string spec = ax.at("name").get<std::string>() + ":" +
                               format_double(ax.at("min").get<double>()) + ":" +
                               format_double(ax.at("max").get<double>()) + ":" +
                               std::to_string(ax.at("count").get<int>()) +
                               (ax.at("log").get<bool>() ? ":log" : "");
      cfg << (first ? "" : ",") << '"' << spec << '"';
      first = false;
    }
    cfg << "]\n";
    cfg << "a=" << format_double(meta.at("base").at("a").get<double>()) << "\n";
    cfg << "b=" << format_double(meta.at("base").at("b").get<double>()) << "\n";
    cfg << "di=" << format_double(meta.at("base").at("di").get<double>()) << "\n";
    cfg << "df=" << format_double(meta.at("base").at("df").get<double>()) << "\n";
    cfg << "protocols=[";
    bool p_first = true;
    for (const auto& p : meta.at("protocols")) {
      cfg << (p_first ? "" : ",") << '"' << p.get<std::string>() << '"';
      p_first = false;
    }
    cfg << "]\n";
    cfg << "parallel=" << meta.at("parallelism").get<int>() << "\n";
    cfg << "rtol=" << format_double(meta.at("integration").at("rtol").get<double>()) << "\n";
    cfg << "atol=" << format_double(meta.at("integration").at("atol").get<double>()) << "\n";
  }

  const std::string out2 = tmp_path("scan2.csv");
  const RunResult r2 = run_cli("scan --config " + cfg_path + " --out " + out2);
  REQUIRE(r2.exit_code == 0);
  CHECK(slurp(out2) == csv1);
}

TEST_CASE("evolve metadata round-trips through a config file") {
  const std::string out1 = tmp_path("ev1.csv");
  const RunResult r = run_cli(
      "evolve --kind stare --a 10 --b 30 --di -8 --df 8 --schedule os --points 21 --out " + out1);
  REQUIRE(r.exit_code == 0);
  const std::string csv1 = slurp(out1);
  const auto meta = nlohmann::json::parse(csv1.substr(2, csv1.find('\n') - 2));

  const std::string cfg_path = tmp_path("ev.toml");
  {
    std::ofstream cfg(cfg_path);
    cfg << "[evolve]\n";
    for (const auto& [key, value] : meta.items()) {
      if (value.is_string())
        cfg << key << "=\"" << value.get<std::string>() << "\"\n";
      else if (value.is_boolean())
        cfg << key << "=" << (value.get<bool>() ? "true" : "false") << "\n";
      else if (value.is_number_integer())
        cfg << key << "=" << value.get<long long>() << "\n";
      else
        cfg << key << "=" << format_double(value.get<double>()) << "\n";
    }
  }
  const std::string out2 = tmp_path("ev2.csv");
  const RunResult r2 = run_cli("evolve --config " + cfg_path + " --out " + out2);
  REQUIRE(r2.exit_code == 0);
  CHECK(slurp(out2) == csv1);
}

TEST_CASE("output directory override through the environment") {
  const RunResult r = run_cli("schedule --kind linear --di -1 --df 1 --points 3 --out env_test.csv",
                              "STARESIM_OUT_DIR=" + std::string(CLI_TMP_DIR));
  REQUIRE(r.exit_code == 0);
  CHECK(!slurp(tmp_path("env_test.csv")).empty());
  std::remove(tmp_path("env_test.csv").c_str());
}

TEST_SUITE_END();
