// Runs the ahn executable as a subprocess and inspects exit codes, stdout,
// stderr and the files it writes.

#include "ahn/compound.hpp"
#include "ahn/model_io.hpp"
#include "dot_checker.hpp"
#include "oracles.hpp"

#include "doctest.h"

#include <sys/wait.h>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ahn;
namespace fs = std::filesystem;

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("ahn_cli_tests_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path scratch(const std::string& name) { return scratch_dir() / name; }

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write(const fs::path& path, const std::string& text) { std::ofstream(path) << text; }

Run ahn_cli(const std::string& args) {
  const auto out = scratch("stdout.txt");
  const auto err = scratch("stderr.txt");
  const std::string cmd = std::string("\"") + AHN_CLI_PATH + "\" " + args + " >\"" +
                          out.string() + "\" 2>\"" + err.string() + "\"";
  const int status = std::system(cmd.c_str());
  Run run;
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  run.out = slurp(out);
  run.err = slurp(err);
  return run;
}

std::string q(const fs::path& path) { return "\"" + path.string() + "\""; }

// Value printed on the line after `heading` in the summary text.
double summary_value(const std::string& text, const std::string& heading) {
  const auto pos = text.find(heading + "\n");
  REQUIRE(pos != std::string::npos);
  return std::stod(text.substr(pos + heading.size() + 1));
}

double metric(const std::string& text, const std::string& name) {
  const auto pos = text.find(name + ": ");
  REQUIRE(pos != std::string::npos);
  return std::stod(text.substr(pos + name.size() + 2));
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    out.push_back(line);
  }
  return out;
}

std::string shortest(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, ptr};
}

// Two-molecule compound over (x1, x2) with hand-picked coefficients.
CompoundModel exact_model() {
  CompoundModel model;
  model.feature_names = {"x1", "x2"};
  model.learning_rate = 0.1;
  Eigen::VectorXd c1(2), c2(2);
  c1 << -1.0, 0.0;
  c2 << 1.0, 0.0;
  auto m1 = Molecule::zeros(3, c1);
  m1.carbon_value = 0.5;
  m1.hydrogen_coeffs << 1.0, -2.0, 0.25, 0.0, -0.125, 0.5;
  auto m2 = Molecule::zeros(3, c2);
  m2.carbon_value = -1.5;
  m2.hydrogen_coeffs << -0.75, 1.0, 0.0, 0.5, 0.5, 0.0;
  model.molecules = {m1, m2};
  return model;
}

// Oracle evaluation: nearest center by brute force, then the polynomial.
double exact_target(const CompoundModel& model, const std::vector<double>& x) {
  std::vector<std::vector<double>> centers;
  for (const auto& m : model.molecules) {
    centers.emplace_back(m.center.data(), m.center.data() + m.center.size());
  }
  const auto& m = model.molecules[oracle::nearest(x, centers)];
  oracle::Mat coeffs(static_cast<std::size_t>(m.hydrogen_count));
  for (int i = 0; i < m.hydrogen_count; ++i) {
    for (int r = 0; r < 2; ++r) {
      coeffs[static_cast<std::size_t>(i)].push_back(m.hydrogen_coeffs(i, r));
    }
  }
  return oracle::polynomial(m.carbon_value, coeffs, x);
}

}  // namespace

TEST_CASE("fit --demo sine prints a summary with a small overall error") {
  const auto model_path = scratch("sine.json");
  const auto run = ahn_cli("fit --demo sine --output " + q(model_path));
  REQUIRE(run.exit_code == 0);
  CHECK(run.out.rfind("Artificial Hydrocarbon Network trained:", 0) == 0);
  CHECK(summary_value(run.out, "Number of molecules:") == 5);
  CHECK(summary_value(run.out, "Overall error:") <= 0.1);
  CHECK(fs::exists(model_path));

  SUBCASE("summary of the saved model matches the fit output") {
    const auto summary = ahn_cli("summary --model " + q(model_path));
    CHECK(summary.exit_code == 0);
    CHECK(summary.out == run.out);
  }
  SUBCASE("visualize draws 5 carbons and 12 hydrogens") {
    const auto viz = ahn_cli("visualize --model " + q(model_path));
    REQUIRE(viz.exit_code == 0);
    const auto graph = dot::parse(viz.out);
    std::size_t carbons = 0;
    for (const auto& node : graph.nodes) {
      carbons += node.front() == 'C' ? 1 : 0;
    }
    CHECK(carbons == 5);
    CHECK(graph.nodes.size() - carbons == 12);
    CHECK(graph.edges == 4 + 12);
  }
  SUBCASE("visualize --format json") {
    const auto viz = ahn_cli("visualize --format json --model " + q(model_path));
    REQUIRE(viz.exit_code == 0);
    CHECK(nlohmann::json::parse(viz.out).at("nodes").size() == 17);
  }
}

TEST_CASE("fit is deterministic for a fixed seed") {
  const auto a = scratch("det_a.json");
  const auto b = scratch("det_b.json");
  REQUIRE(ahn_cli("fit --demo sine --seed 7 --max-iter 80 --output " + q(a)).exit_code == 0);
  REQUIRE(ahn_cli("fit --demo sine --seed 7 --max-iter 80 --threads 3 --output " + q(b)).exit_code ==
          0);
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("fit reports user errors with exit code 1") {
  const auto csv = scratch("small.csv");
  write(csv, "a,b,y\n1,2,3\n2,3,4\n3,1,2\n4,4,1\n");
  const auto model_path = scratch("never.json");

  SUBCASE("missing target column") {
    const auto run = ahn_cli("fit --input " + q(csv) + " --target energy --output " + q(model_path));
    CHECK(run.exit_code == 1);
    CHECK(run.err.find("energy") != std::string::npos);
    CHECK(run.out.empty());
  }
  SUBCASE("bad flags are rejected before the input is read") {
    const auto run = ahn_cli("fit --input /nonexistent.csv --target y --split 1.5");
    CHECK(run.exit_code == 1);
    CHECK(run.err.find("--split") != std::string::npos);
  }
  SUBCASE("non-numeric data") {
    write(csv, "a,y\n1,2\nx,3\n");
    const auto run = ahn_cli("fit --input " + q(csv) + " --target y --output " + q(model_path));
    CHECK(run.exit_code == 1);
    CHECK(run.err.find("row 2") != std::string::npos);
  }
  SUBCASE("unknown flag") {
    CHECK(ahn_cli("fit --demo sine --colour blue").exit_code == 1);
  }
  CHECK_FALSE(fs::exists(model_path));
}

TEST_CASE("fit with a held-out split reports the test error") {
  const auto run = ahn_cli("fit --demo sine --max-iter 50 --split 0.7 --split-mode chronological");
  REQUIRE(run.exit_code == 0);
  CHECK(run.out.find("Test error:") != std::string::npos);
}

TEST_CASE("predict reproduces an exact-fit model") {
  const auto model = exact_model();
  const auto model_path = scratch("exact.json");
  save_model(model, model_path);

  std::string csv = "x2,x1,y\n";
  std::vector<double> targets;
  for (int i = 0; i < 40; ++i) {
    const double x1 = -2.0 + 0.1 * i;
    const double x2 = std::sin(0.3 * i);
    targets.push_back(exact_target(model, {x1, x2}));
    csv += shortest(x2) + "," + shortest(x1) + "," + shortest(targets.back()) + "\n";
  }
  const auto data_path = scratch("exact.csv");
  write(data_path, csv);

  const auto run = ahn_cli("predict --model " + q(model_path) + " --input " + q(data_path));
  REQUIRE(run.exit_code == 0);
  const auto rows = lines(run.out);
  REQUIRE(rows.size() == 41);
  CHECK(rows[0] == "prediction");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    CHECK(std::abs(std::stod(rows[i + 1]) - targets[i]) <= 1e-8);
  }

  const auto out_path = scratch("pred.csv");
  const auto with_mse = ahn_cli("predict --model " + q(model_path) + " --input " + q(data_path) +
                                " --target y --mse --output " + q(out_path));
  REQUIRE(with_mse.exit_code == 0);
  CHECK(slurp(out_path) == run.out);
  CHECK(metric(with_mse.out, "mse") <= 1e-16);
}

TEST_CASE("predict edge cases") {
  const auto model_path = scratch("edge.json");
  save_model(exact_model(), model_path);

  SUBCASE("zero data rows give an empty prediction column") {
    const auto empty = scratch("empty.csv");
    write(empty, "x1,x2\n");
    const auto run = ahn_cli("predict --model " + q(model_path) + " --input " + q(empty));
    CHECK(run.exit_code == 0);
    CHECK(run.out == "prediction\n");
  }
  SUBCASE("feature-name mismatch lists both name sets") {
    const auto other = scratch("ab.csv");
    write(other, "a,b\n1,2\n");
    const auto run = ahn_cli("predict --model " + q(model_path) + " --input " + q(other));
    CHECK(run.exit_code == 1);
    CHECK(run.err.find("x1,x2") != std::string::npos);
    CHECK(run.err.find("a,b") != std::string::npos);
  }
  SUBCASE("corrupted model file") {
    const auto bad = scratch("bad.json");
    write(bad, "{\"format_version\": \"1.0\", \"kind\": ");
    CHECK(ahn_cli("summary --model " + q(bad)).exit_code == 1);
  }
  SUBCASE("newer format version") {
    auto doc = to_document(exact_model());
    doc["format_version"] = "2.0";
    const auto future = scratch("future.json");
    write(future, doc.dump());
    const auto run = ahn_cli("summary --model " + q(future));
    CHECK(run.exit_code == 1);
    CHECK(run.err.find("2.0") != std::string::npos);
  }
}

TEST_CASE("forecast on the sinusoid demo beats persistence") {
  const auto predictions = scratch("forecast.csv");
  const auto model_path = scratch("forecast.json");
  const auto run = ahn_cli("forecast --demo sinusoid --molecules 10 --learning-rate 0.1 --window 3 "
                           "--split 0.7 --output " + q(predictions) + " --save-model " + q(model_path));
  REQUIRE(run.exit_code == 0);
  const double test_mse = metric(run.out, "test_mse");
  CHECK(test_mse < metric(run.out, "persistence_mse"));
  metric(run.out, "train_mse");
  const auto rows = lines(slurp(predictions));
  REQUIRE(rows.size() == 1 + 218);
  CHECK(rows[0] == "t,actual,predicted,split");
  CHECK(rows[1].rfind("3,", 0) == 0);
  CHECK(rows[152].find(",train") != std::string::npos);
  CHECK(rows[153].rfind("155,", 0) == 0);
  CHECK(rows[153].find(",test") != std::string::npos);
  CHECK(ahn_cli("visualize --model " + q(model_path)).exit_code == 0);
}

TEST_CASE("forecast of a constant series has zero error") {
  std::string csv = "day,rate\n";
  for (int i = 0; i < 40; ++i) {
    csv += std::to_string(i) + ",1.25\n";
  }
  const auto path = scratch("constant.csv");
  write(path, csv);
  const auto run = ahn_cli("forecast --input " + q(path) + " --target rate --max-iter 50");
  REQUIRE(run.exit_code == 0);
  CHECK(metric(run.out, "train_mse") == 0.0);
  CHECK(metric(run.out, "test_mse") == 0.0);
}

TEST_CASE("forecast rejects unusable settings") {
  CHECK(ahn_cli("forecast --demo sinusoid --split-mode random").exit_code == 1);
  const auto path = scratch("short.csv");
  write(path, "v\n1\n2\n3\n");
  const auto run = ahn_cli("forecast --input " + q(path) + " --target v");
  CHECK(run.exit_code == 1);
  CHECK_FALSE(run.err.empty());
}

TEST_CASE("grid search prints a deterministic four-row table") {
  const std::string args =
      "grid-search --demo sine --molecules 3,5 --learning-rate 0.01,0.1 --folds 3 --max-iter 40";
  const auto first = ahn_cli(args);
  REQUIRE(first.exit_code == 0);
  const auto rows = lines(first.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "molecules,learning_rate,mean_mse,best");
  CHECK(rows[1].rfind("3,0.01,", 0) == 0);
  CHECK(rows[4].rfind("5,0.1,", 0) == 0);
  std::size_t best = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    best += rows[i].ends_with(",true") ? 1 : 0;
  }
  CHECK(best == 1);
  CHECK(ahn_cli(args).out == first.out);
}
