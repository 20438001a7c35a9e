#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ksds/cli.hpp"
#include "ksds/errors.hpp"
#include "ksds/io.hpp"

using namespace ksds;

namespace {

  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::filesystem::path temp_file(std::string const& name, std::string const& content) {
    auto path = std::filesystem::temp_directory_path() / ("ksds_test_" + name);
    std::ofstream(path) << content;
    return path;
  }

  // The two-vertex example system in file form.
  constexpr char const* a2_json = R"({
    "graph": {"n": 2, "edges": [[1, 2]]},
    "states": [["0", "1", "2"], ["0", "1"]],
    "functions": [
      {"vertex": 1, "table": [{"args": ["0"], "out": "1"}, {"args": ["1"], "out": "2"}]},
      {"vertex": 2, "table": [{"args": [], "out": "1"}]}
    ]
  })";

}  // namespace

TEST_CASE("word commands") {
  CHECK(run({"canon", "a", "b", "a"}).out == "ab\n");
  CHECK(run({"canon", "aba"}).out == "ab\n");
  CHECK(run({"--format", "indices", "canon", "bdbcdabcdc"}).out == "1 2 3 4\n");
  CHECK(run({"join", "cbadc", "abdc"}).out == "cbabdc\n");
  CHECK(run({"mult", "ba", "b"}).out == "ab\n");
  auto j = json::parse(run({"--json", "canon", "3 2 3"}).out);
  CHECK(j["schema"] == 1);
  CHECK(j["canonical"] == "bc");
  CHECK(j["input_is_canonical"] == false);
}

TEST_CASE("global flags may follow the subcommand") {
  auto r = run({"join", "cbadc", "abdc", "--json"});
  CHECK(r.code == cli::success);
  CHECK(json::parse(r.out)["result"] == "cbabdc");
}

TEST_CASE("enumeration commands") {
  CHECK(run({"enum-kn", "3"}).out == "18\n");
  auto j = json::parse(run({"enum-kn", "2", "--json"}).out);
  CHECK(j["n"] == 2);
  CHECK(j["size"] == 5);
  CHECK(j["elements"].size() == 5);
  CHECK(run({"enum-kn", "2", "--list"}).out == "-\na\nb\nab\nba\n");

  CHECK(run({"enum-hk", "--graph", "complete:3"}).out == "18\n");
  CHECK(run({"enum-hk", "--graph", R"({"n": 2, "edges": []})"}).out == "4\n");
  auto h = json::parse(run({"--json", "enum-hk", "--graph", "edgeless:2"}).out);
  CHECK(h["size"] == 4);
  CHECK(h["representatives"].size() == 4);
  CHECK(run({"enum-hk"}).code == cli::usage_error);
}

TEST_CASE("system commands") {
  auto path = temp_file("a2.json", a2_json).string();
  CHECK(run({"simulate", "--system", path, "--schedule", "ab"}).out == "(2, 1)\n");
  CHECK(run({"simulate", "--system", path, "--schedule", "ba"}).out == "(1, 1)\n");
  CHECK(run({"simulate", "--system", path, "--schedule", "-", "--initial", "2,1"}).out
        == "(2, 1)\n");
  auto s = json::parse(run({"--json", "simulate", "--system", path, "--schedule", "ab"}).out);
  CHECK(s["final"] == json::array({"2", "1"}));

  CHECK(run({"dynamics", "--system", path}).out == "5\n");
  auto d = json::parse(run({"--json", "dynamics", "--system", path}).out);
  CHECK(d["size"] == 5);
  CHECK(d["state_space_size"] == 6);

  auto rel = run({"check-relations", "--system", path});
  CHECK(rel.code == cli::success);
  CHECK(rel.out.find("FAIL") == std::string::npos);

  CHECK(run({"dynamics", "--system", "universal:3"}).out == "18\n");
  CHECK(run({"--seed", "4", "dynamics", "--graph", "complete:2", "--max-states", "1"}).out
        == "1\n");

  CHECK(run({"simulate", "--system", path, "--schedule", "ab", "--initial", "0"}).code
        == cli::usage_error);
  CHECK(run({"simulate", "--system", path, "--schedule", "c"}).code == cli::usage_error);
  CHECK(run({"dynamics"}).code == cli::usage_error);
  CHECK(run({"dynamics", "--system", "/nonexistent/system.json"}).code == cli::usage_error);
  auto broken = temp_file("broken.json", R"({"graph": {"n": 1, "edges": []}, "states": [["0"]],
                                            "functions": []})");
  CHECK(run({"dynamics", "--system", broken.string()}).code == cli::usage_error);
}

TEST_CASE("verification commands") {
  auto t = run({"verify-theorem", "--n", "3", "--exhaustive-len", "5"});
  CHECK(t.code == cli::success);
  CHECK(t.out == "n=3 checked=364 counterexamples=0\n");
  auto r = json::parse(
      run({"--json", "--seed", "7", "verify-theorem", "--n", "4", "--random", "200", "--max-len", "12"})
          .out);
  CHECK(r["checked"] == 200);
  CHECK(r["counterexamples"].empty());

  auto iso = json::parse(run({"--json", "verify-iso", "--n", "3", "--samples", "100"}).out);
  CHECK(iso["isomorphic"] == true);
  CHECK(iso["kn_size"] == 18);

  CHECK(run({"verify-theorem", "--n", "3", "--exhaustive-len", "3", "--random", "4"}).code
        == cli::usage_error);
}

TEST_CASE("sweep command") {
  auto out = std::filesystem::temp_directory_path() / "ksds_test_sweep.json";
  auto r   = run({"--json", "conjecture-sweep", "--max-vertices", "2", "--out", out.string()});
  CHECK(r.code == cli::success);
  auto j = json::parse(r.out);
  CHECK(j["graphs"] == 3);
  CHECK(j["matches"] == 3);
  CHECK(j["match_rate"] == 1.0);
  CHECK(!j["rows"][0].contains("runtime_ms"));
  CHECK(load_json_file(out.string()) == j);
  auto timed = json::parse(run({"--json", "conjecture-sweep", "--max-vertices", "1", "--timings"}).out);
  CHECK(timed["rows"][0].contains("runtime_ms"));
  CHECK(run({"conjecture-sweep", "--max-vertices", "9"}).code == cli::usage_error);
}

TEST_CASE("seeded output is reproducible") {
  std::vector<std::string> args{"--json", "--seed", "99", "dynamics", "--graph", "complete:3",
                                "--max-states", "3"};
  CHECK(run(args).out == run(args).out);
  std::vector<std::string> thm{"--json", "--seed", "3", "verify-theorem", "--n", "3", "--random",
                               "50"};
  CHECK(run(thm).out == run(thm).out);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::usage_error);
  CHECK(run({"frobnicate"}).code == cli::usage_error);
  CHECK(run({"canon", "aba", "--bogus"}).code == cli::usage_error);
  CHECK(run({"canon", "a0"}).code == cli::usage_error);
  auto help = run({"--help"});
  CHECK(help.code == cli::success);
  CHECK(help.out.find("enum-kn") != std::string::npos);
  auto guard = run({"--max-elements", "3", "dynamics", "--system", "universal:3"});
  CHECK(guard.code == cli::guard_exceeded);
  CHECK(guard.out.empty());
  CHECK_FALSE(guard.err.empty());
  CHECK(run({"enum-kn", "9"}).code == cli::guard_exceeded);
}

TEST_CASE("graph and system formats round-trip") {
  Dag g(4, {{1, 3}, {2, 3}, {3, 4}});
  CHECK(graph_from_json(graph_to_json(g)) == g);
  CHECK(parse_graph_spec(graph_to_json(g).dump()) == g);
  CHECK(parse_graph_spec("complete:3") == Dag::complete(3));
  CHECK(graph_from_json(json("edgeless:2")) == Dag::edgeless(2));
  CHECK_THROWS_AS(parse_graph_spec("complete:x"), ParseError);
  CHECK_THROWS_AS(parse_graph_spec("{nope"), ParseError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 2})")), ParseError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 2, "edges": [[1, 2], [2, 1]]})")),
                  InvalidArgument);

  auto sys  = system_from_json(json::parse(a2_json));
  auto back = system_from_json(system_to_json(sys));
  CHECK(system_to_json(back) == system_to_json(sys));
  for (Vertex v = 1; v <= 2; ++v) {
    CHECK(back.table(v) == sys.table(v));
  }

  auto dup = json::parse(a2_json);
  dup["functions"][0]["table"][1]["args"] = json::array({"0"});
  CHECK_THROWS_AS(system_from_json(dup), ParseError);
  auto partial = json::parse(a2_json);
  partial["functions"][0]["table"].erase(1);
  CHECK_THROWS_AS(system_from_json(partial), ParseError);
  auto unknown = json::parse(a2_json);
  unknown["functions"][1]["table"][0]["out"] = "5";
  CHECK_THROWS_AS(system_from_json(unknown), ParseError);
}
