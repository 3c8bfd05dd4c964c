#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "theta/cli.hpp"
#include "theta/json_io.hpp"

using namespace theta;
using theta::cli::run;
using theta::cli::Status;
using theta::io::Json;

namespace {

Json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const auto r = run(args);
  REQUIRE(r.exit_code == 0);
  return Json::parse(r.output);
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& text) {
    path = std::filesystem::temp_directory_path() / ("theta_cli_" + std::to_string(std::rand()) + ".json");
    std::ofstream(path) << text;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

const char* kGraph = R"({
  "vertices": [{"id": "v1", "genus": 1, "degree": 2}, {"id": "v2", "genus": 0, "degree": -1}],
  "edges": [{"id": "e1", "source": "v1", "target": "v2"}, {"id": "e2", "source": "v2", "target": "v2"}],
  "pos_markings": ["v1"],
  "neg_markings": ["v2", "v2"]
})";

}  // namespace

TEST_CASE("golden outputs") {
  auto r = run({"transfer", "--a", "1", "--d", "0", "--n", "-1"});
  CHECK(r.exit_code == 0);
  CHECK(r.status == Status::kOk);
  CHECK(r.output == "⟨-1,1⟩\n");

  r = run({"chains", "--rank", "2", "--length", "3", "--count-only"});
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0\n");
  CHECK(run({"chains", "--rank", "3", "--length", "3", "--count-only"}).output == "6\n");
  CHECK(run({"chains", "--rank", "2", "--length", "2", "--count-only", "--canonical"}).output == "1\n");

  // absent image
  CHECK(run({"transfer", "--a", "1", "--d", "0", "--n", "5"}).output == "0\n");

  CHECK(run({"series", "--a", "1", "--n", "0", "--trunc", "3", "--q1"}).output ==
        "z^-1 + z^-2*u^-2 + z^-3*u^-4 + O(z^-4)\n");
}

TEST_CASE("exit codes") {
  const auto unknown = run({"frobnicate"});
  CHECK(unknown.exit_code == 1);
  CHECK(unknown.status == Status::kError);
  REQUIRE(unknown.diagnostics.size() >= 2);
  CHECK(unknown.diagnostics[1].find("Usage") != std::string::npos);

  CHECK(run({}).exit_code == 1);
  CHECK(run({"transfer", "--a", "1", "--d", "0"}).exit_code == 1);
  CHECK(run({"transfer", "--a", "1", "--d", "0", "--n", "1", "--bogus"}).exit_code == 1);
  CHECK(run({"series", "--a", "1", "--n", "0", "--trunc", "3", "--closed", "--base"}).exit_code == 1);
  CHECK(run({"chains", "--rank", "x", "--length", "1"}).exit_code == 1);

  const auto domain = run({"transfer", "--a", "0", "--d", "0", "--n", "0"});
  CHECK(domain.exit_code == 2);
  CHECK_FALSE(domain.diagnostics.empty());
  CHECK(run({"chains", "--rank", "0", "--length", "1"}).exit_code == 2);
  CHECK(run({"graph", "genus", "--in", "/nonexistent/graph.json"}).exit_code == 2);
  CHECK(run({"strata", "weights", "--label", "{not json"}).exit_code == 2);
  CHECK(run({"strata", "weights", "--label", R"({"degrees":[1],"ranks":[2],"j":5})"}).exit_code == 2);
  CHECK(run({"hn", "--constituents", "1:2,0:1"}).exit_code == 2);

  const auto help = run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.output.find("consistency-report") != std::string::npos);
  const auto sub_help = run({"chains", "--help"});
  CHECK(sub_help.exit_code == 0);
  CHECK(sub_help.output.find("--count-only") != std::string::npos);
}

TEST_CASE("json flag works before or after the subcommand") {
  const auto after = run({"transfer", "--a", "1", "--d", "0", "--n", "-1", "--json"});
  const auto before = run({"--json", "transfer", "--a", "1", "--d", "0", "--n", "-1"});
  CHECK(after.output == before.output);
  const auto j = Json::parse(after.output);
  CHECK(j["image"]["q_weight"] == -1);
  CHECK(j["image"]["u_weight"] == 1);
}

TEST_CASE("graph contract matches the library") {
  TempFile file(kGraph);
  const auto r = run({"graph", "contract", "--in", file.path.string(), "--edge", "e1"});
  REQUIRE(r.exit_code == 0);
  const auto g = io::graph_from_json(Json::parse(kGraph));
  const auto expected = contract_edge(g, "e1");
  CHECK(io::graph_from_json(Json::parse(r.output)) == expected);
  CHECK(arithmetic_genus(expected) == arithmetic_genus(g));

  const auto cut = run({"graph", "cut", "--in", file.path.string(), "--edge", "e2"});
  REQUIRE(cut.exit_code == 0);
  CHECK_FALSE(cut.diagnostics.empty());
  CHECK(io::graph_from_json(Json::parse(cut.output)) == cut_edge(g, "e2"));

  CHECK(run({"graph", "contract", "--in", file.path.string(), "--edge", "e9"}).exit_code == 2);
  CHECK(run({"graph", "contract", "--in", file.path.string()}).exit_code == 1);

  const auto genus = run_json({"graph", "genus", "--in", file.path.string()});
  CHECK(genus["arithmetic_genus"] == arithmetic_genus(g));
  CHECK(genus["total_degree"] == 1);

  TempFile broken(R"({"vertices": [], "edges": [{"id": "e1", "source": "a", "target": "b"}],
                      "pos_markings": [], "neg_markings": []})");
  CHECK(run({"graph", "validate", "--in", broken.path.string()}).exit_code == 2);
}

TEST_CASE("json output round-trips") {
  const auto series = io::series_from_json(run_json({"series", "--a", "2", "--n", "3", "--trunc", "6"}));
  CHECK(series == gen_series_sum(2, 3, 6, QMode::kRetain));
  const auto three = io::series_from_json(run_json({"three-point", "--a", "1", "--m", "2", "--n", "-3", "--trunc", "5"}));
  CHECK(three == transfer_three_point(1, 2, -3, 5));

  const StratumLabel label{{-1, 1}, {1, 1}, 1};
  const auto params = params_with_rank(2, 0);
  const auto weights_json = run_json({"strata", "weights", "--label", io::to_json(label).dump()});
  const auto w = io::weight_vector_from_json(weights_json);
  CHECK(w == label_to_weights(label, params));
  const auto back = io::label_from_json(run_json(
      {"strata", "label", "--weights", io::to_json(w).dump(), "--N", "1", "--g", "0", "--n", "4", "--p", "0", "--d", "0"}));
  CHECK(back == label);

  const auto enumerated = run_json({"strata", "enumerate", "--N", "1", "--g", "0", "--n", "4", "--p", "0", "--d", "0",
                                    "--a", "1", "--b", "0", "--kappa", "0"});
  const auto direct = admissible_strata(StrataParams(1, 0, 4, 0, 0), 1, 0, 0);
  REQUIRE(enumerated["strata"].size() == direct.strata.size());
  for (std::size_t i = 0; i < direct.strata.size(); ++i) {
    CHECK(io::weight_vector_from_json(enumerated["strata"][i]["weights"]) == direct.strata[i].weights);
    CHECK(io::label_from_json(enumerated["strata"][i]["label"]) == direct.strata[i].label);
  }
  CHECK(io::rational_from_json(enumerated["radius"]) == direct.radius);

  const auto chains = run_json({"chains", "--rank", "3", "--length", "2", "--kind", "bridge"});
  const auto listed = enum_admissible(3, 2);
  REQUIRE(chains["types"].size() == listed.size());
  for (std::size_t i = 0; i < listed.size(); ++i) {
    const auto t = io::splitting_type_from_json(chains["types"][i]);
    CHECK(t.rows == listed[i].rows);
    CHECK(t.kind == ChainKind::kBridge);
  }
  CHECK(chains["inclusion_exclusion"] == 12);

  const auto hn = run_json({"hn", "--constituents", "1:3,1:-3"});
  CHECK(io::rational_from_json(hn["nu"]["signed_square"]) == 72);
  CHECK(io::rational_from_json(hn["filtration"]["jumps"][0]["weight"]) == -6);
  CHECK(hn["gap_certificate"]["holds"] == true);
  CHECK(run_json({"hn", "--constituents", "2:1,1:1"})["nu"].is_null() == false);
  CHECK(run_json({"hn", "--constituents", "2:2,1:1"})["nu"].is_null());

  const auto report = run_json({"consistency-report", "--a", "1", "--n-min", "-3", "--n-max", "3", "--d-min", "-1",
                                "--d-max", "1"});
  CHECK(report["rows"].size() == 21);
  CHECK(report["resolved_mismatches"] == 0);
  CHECK(report["closed_over_sum"].is_string());
}

TEST_CASE("random graphs follow the seed") {
  ::setenv("THETA_STRATA_SEED", "7", 1);
  const auto a = run({"graph", "random"});
  const auto b = run({"graph", "random"});
  ::setenv("THETA_STRATA_SEED", "8", 1);
  const auto c = run({"graph", "random", "--max-vertices", "8"});
  ::setenv("THETA_STRATA_SEED", "oops", 1);
  CHECK(run({"graph", "random"}).exit_code == 2);
  ::unsetenv("THETA_STRATA_SEED");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output != c.output);
  const auto g = io::graph_from_json(Json::parse(a.output));
  CHECK(io::to_json(g).dump(2) + "\n" == a.output);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"consistency-report", "--a", "2"},
      {"strata", "enumerate", "--N", "2", "--g", "1", "--n", "1", "--p", "1", "--d", "0", "--a", "1", "--b", "0",
       "--kappa", "2", "--json"},
      {"chains", "--rank", "3", "--length", "3"},
  };
  for (const auto& cmd : commands) {
    const auto first = run(cmd);
    CHECK(first.exit_code == 0);
    CHECK(run(cmd).output == first.output);
  }
}

TEST_CASE("integer and rational encoding") {
  const Integer big = Integer(1) << 70;
  CHECK(io::integer_json(big).is_string());
  CHECK(io::integer_from_json(io::integer_json(big)) == big);
  CHECK(io::integer_json(Integer(-5)) == -5);
  CHECK(io::integer_from_json(Json(-5)) == -5);
  CHECK_THROWS_AS(io::integer_from_json(Json("12x")), DomainError);
  CHECK(io::rational_json(make_rational(-3, 6)) == "-1/2");
  CHECK(io::rational_from_json(Json("4/2")) == 2);
  CHECK_THROWS_AS(io::rational_from_json(Json(1.5)), DomainError);
}
