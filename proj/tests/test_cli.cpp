#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lukfre/cli.hpp"
#include "lukfre/instance.hpp"
#include "fixtures.hpp"

using namespace lukfre;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("lukfre_test_" + name))
      .string();
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = temp_file(name);
  std::ofstream(path) << text;
  return path;
}

const std::string kWorked = testing::data_path("worked_example.json");

}  // namespace

TEST_CASE("solve --output json") {
  const auto r = run({"solve", "--output", "json", kWorked});
  CHECK(r.code == kExitOk);
  CHECK(r.err.empty());
  const auto doc = json::parse(r.out);
  const auto x = doc["x_star"].get<std::vector<double>>();
  const std::vector<double> expected{0.7, 0, 0, 0.65, 1, 0};
  REQUIRE(x.size() == 6);
  for (std::size_t j = 0; j < 6; ++j) CHECK(x[j] == doctest::Approx(expected[j]));
  CHECK(doc["objective"].get<double>() == doctest::Approx(1.75));
}

TEST_CASE("json output is byte-identical across runs") {
  const auto a = run({"solve", "--output", "json", kWorked});
  const auto b = run({"solve", "--output", "json", kWorked});
  CHECK(a.out == b.out);
}

TEST_CASE("solve human output walks the six steps") {
  const auto r = run({"solve", kWorked});
  CHECK(r.code == kExitOk);
  for (const char* step : {"step 1", "step 2", "step 3", "step 4", "step 5",
                           "step 6"}) {
    CHECK(r.out.find(step) != std::string::npos);
  }
  CHECK(r.out.find("e* = [5, 4, 1, 5]") != std::string::npos);
}

TEST_CASE("check reports cardinalities") {
  const auto r = run({"check", kWorked});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("|E| = 60") != std::string::npos);
  CHECK(r.out.find("|tight E| = 8") != std::string::npos);

  const auto j = run({"check", "--output", "json", kWorked});
  const auto doc = json::parse(j.out);
  CHECK(doc["index_sets"]["e_cardinality"] == 60);
  CHECK(doc["index_sets"]["tight_cardinality"] == 8);
  CHECK(doc["consistent"] == true);
}

TEST_CASE("inconsistent instance exits 1 and names the row") {
  const auto path = write_temp("bad.json", R"({"c":[1],"A":[[0.5]],"b":[0.9]})");
  const auto r = run({"solve", path});
  CHECK(r.code == kExitInfeasible);
  CHECK(r.err.find("equation 1") != std::string::npos);

  const auto j = run({"solve", "--output", "json", path});
  CHECK(j.code == kExitInfeasible);
  CHECK(json::parse(j.out)["status"] == "infeasible");

  CHECK(run({"check", path}).code == kExitInfeasible);
  CHECK(run({"enumerate", path}).code == kExitInfeasible);
  CHECK(run({"verify", path}).code == kExitInfeasible);
}

TEST_CASE("input errors exit 2 with one line") {
  const auto missing = run({"solve", "/nonexistent/instance.json"});
  CHECK(missing.code == kExitInputError);
  CHECK(std::count(missing.err.begin(), missing.err.end(), '\n') == 1);

  const auto malformed = write_temp("malformed.json", "{\"c\": [1,");
  CHECK(run({"solve", malformed}).code == kExitInputError);

  const auto range = write_temp("range.json", R"({"c":[1],"A":[[1.2]],"b":[0.5]})");
  CHECK(run({"check", range}).code == kExitInputError);

  const auto unknown = run({"solve", "--frobnicate", kWorked});
  CHECK(unknown.code == kExitInputError);
  CHECK(std::count(unknown.err.begin(), unknown.err.end(), '\n') == 1);

  CHECK(run({}).code == kExitInputError);
  CHECK(run({"solve", "--order", "sideways", kWorked}).code == kExitInputError);
  CHECK(run({"solve", "--tol", "0", kWorked}).code == kExitInputError);
  CHECK(run({"gen", "--m", "0"}).code == kExitInputError);
}

TEST_CASE("enumerate lists the minimal candidates") {
  const auto r = run({"enumerate", "--output", "json", kWorked});
  CHECK(r.code == kExitOk);
  const auto doc = json::parse(r.out);
  CHECK(doc["candidate_count"] == 8);
  CHECK(doc["minimal"].size() == 4);
}

TEST_CASE("gen writes a loadable instance") {
  const auto path = temp_file("gen.json");
  const auto r = run({"gen", "--m", "3", "--n", "5", "--seed", "9",
                      "--consistent", path});
  CHECK(r.code == kExitOk);
  const auto inst = load_instance(path);
  CHECK(inst == generate_random(3, 5, 9, true));

  const auto to_stdout = run({"gen", "--m", "3", "--n", "5", "--seed", "9",
                              "--consistent"});
  CHECK(parse_instance(to_stdout.out) == inst);
}

TEST_CASE("verify audits the instance") {
  const auto r = run({"verify", "--output", "json", kWorked});
  CHECK(r.code == kExitOk);
  CHECK(json::parse(r.out)["passed"] == true);
  // A loose tolerance breaks the candidate contract.
  CHECK(run({"verify", "--tol", "0.2", kWorked}).code == kExitAuditFailure);
}

TEST_CASE("trace file holds one JSON record per line") {
  const auto path = temp_file("trace.jsonl");
  const auto r = run({"solve", "--output", "json", "--trace", path, kWorked});
  CHECK(r.code == kExitOk);
  std::ifstream in(path);
  std::string line;
  int records = 0, incumbents = 0;
  while (std::getline(in, line)) {
    const auto doc = json::parse(line);
    ++records;
    incumbents += doc["action"] == "incumbent";
  }
  CHECK(records > 0);
  CHECK(incumbents == 1);
  // The report itself stays a single document.
  CHECK(json::accept(r.out));
}

TEST_CASE("ascending-tight order gives the same optimum") {
  const auto a = json::parse(run({"solve", "--output", "json", kWorked}).out);
  const auto b = json::parse(
      run({"solve", "--output", "json", "--order", "ascending-tight", kWorked})
          .out);
  CHECK(a["z1"] == b["z1"]);
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("solve") != std::string::npos);
}
