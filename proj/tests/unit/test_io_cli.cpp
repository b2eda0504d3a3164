#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "monpow/cli.hpp"
#include "monpow/io.hpp"
#include "monpow/random.hpp"
#include "json.hpp"

using namespace monpow;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = MONPOW_DATA_DIR;

}  // namespace

TEST_CASE("monomial strings") {
  CHECK(parse_monomial("x1^2*x3", 3) == ExponentVector{2, 0, 1});
  CHECK(parse_monomial("x1*x1", 2) == ExponentVector{2, 0});
  CHECK(parse_monomial(" x2 ^ 3 ", 2) == ExponentVector{0, 3});
  CHECK(parse_monomial("1", 2) == ExponentVector{0, 0});
  CHECK(max_variable_index("x1*x12^2") == 12);
  CHECK_THROWS(parse_monomial("x4", 3));
  CHECK_THROWS(parse_monomial("x0", 3));
  CHECK_THROWS(parse_monomial("y1", 3));
  CHECK_THROWS(parse_monomial("x1^", 3));
  CHECK_THROWS(parse_monomial("x1**x2", 3));
}

TEST_CASE("ideal documents") {
  const MonomialIdeal I = parse_ideal_json(R"({"vars": 3, "gens": [[1,1,0], "x2*x3", [1,1,1]]})");
  CHECK(I.generators() == std::vector<ExponentVector>{{0, 1, 1}, {1, 1, 0}});
  CHECK(parse_ideal_json(R"({"gens": ["x1*x4"]})").vars() == 4);
  CHECK_THROWS(parse_ideal_json(R"({"gens": [[1, 0]]})"));
  CHECK_THROWS(parse_ideal_json(R"({"vars": 2, "gens": [[1, 0, 1]]})"));
  CHECK_THROWS(parse_ideal_json(R"({"vars": 2, "gens": []})"));
  CHECK_THROWS(parse_ideal_json(R"({"vars": 2, "gens": [[-1, 1]]})"));
  CHECK_THROWS(parse_ideal_json("not json"));
  CHECK(parse_generator_list("x1*x2, x2*x3; x3*x4", std::nullopt).size() == 3);
  CHECK(parse_generator_list("x1 x2", 5).vars() == 5);
}

TEST_CASE("hypergraph documents") {
  const Hypergraph H = parse_hypergraph_json(read_file(kData + "/figure1.json"));
  CHECK(H.vertices() == 4);
  CHECK(H.edge_count() == 4);
  CHECK_THROWS(parse_hypergraph_json(R"({"vertices": 3, "edges": [[1,2],[1,2,3]]})"));
  CHECK_THROWS(parse_hypergraph_json(R"({"vertices": 3, "edges": [[1,4]]})"));
  CHECK_THROWS(read_file(kData + "/missing.json"));
}

TEST_CASE("documents round trip") {
  Rng rng(61);
  for (int t = 0; t < 50; ++t) {
    const int n = uniform_int(rng, 1, 7);
    const Hypergraph H = random_hypergraph(rng, n, 6, 4);
    CHECK(parse_hypergraph_json(emit_hypergraph_json(H)) == H);
    std::vector<ExponentVector> g;
    for (int i = 0, m = uniform_int(rng, 1, 6); i < m; ++i) {
      ExponentVector e = random_exponent(rng, static_cast<std::size_t>(n), 3);
      if (e.is_zero()) e = ExponentVector::unit(static_cast<std::size_t>(n), 0);
      g.push_back(e);
    }
    const MonomialIdeal I = MonomialIdeal::minimalize(static_cast<std::size_t>(n), g);
    CHECK(parse_ideal_json(emit_ideal_json(I)) == I);
  }
}

TEST_CASE("vectors and sets") {
  CHECK(parse_vector("3,2,1") == ExponentVector{3, 2, 1});
  CHECK_THROWS(parse_vector("3,2", 3));
  CHECK_THROWS(parse_vector("3,-2"));
  CHECK(parse_int_set("1,4") == std::vector<int>{1, 4});
  CHECK(parse_int_set("").empty());
}

TEST_CASE("cli member") {
  const Run s = run({"--hypergraph", kData + "/five_subsets_blocker.json", "member", "--power", "symbolic", "-k", "5",
                     "-a", "3,2,1,1,1,1,1,1"});
  CHECK(s.code == 0);
  CHECK(s.out.find("tau_a = 5") != std::string::npos);
  const Run o = run({"--hypergraph", kData + "/five_subsets_blocker.json", "member", "--power", "ordinary", "-k", "3",
                     "-a", "3,2,1,1,1,1,1,1"});
  CHECK(o.code == 1);
}

TEST_CASE("cli containment") {
  const Run r = run({"--ideal", kData + "/graph_iii.json", "containment", "sym:2", "ord:2"});
  CHECK(r.code == 1);
  CHECK(r.out.find("counterexample") != std::string::npos);
  CHECK(run({"--ideal", kData + "/graph_iii.json", "containment", "sym:3", "ord:2"}).code == 0);
  const Run j = run({"--ideal", kData + "/graph_iii.json", "--format", "json", "containment", "sym:2", "ord:2"});
  const auto doc = nlohmann::json::parse(j.out);
  for (const char* key : {"query", "result", "witnesses", "box", "seed"}) CHECK(doc.contains(key));
  CHECK(doc["result"]["containment"]["holds"] == false);
}

TEST_CASE("cli invariants at zero") {
  const Run r = run({"--gens", "x1*x2,x2*x3", "--format", "json", "invariants", "-a", "0,0,0"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["result"]["nu_a"] == 0);
  CHECK(doc["result"]["tau_a"] == 0);
  CHECK(doc["result"]["nu_star_a"] == "0");
  CHECK(doc["result"]["tau_star_a"] == "0");
}

TEST_CASE("cli subcommands") {
  const std::string tri = "x1*x2,x1*x3,x2*x3";
  CHECK(run({"--gens", tri, "symbolic", "-k", "2", "--lemmas", "--scan"}).code == 0);
  CHECK(run({"--gens", tri, "closure-gens", "-k", "2"}).code == 0);
  const Run b = run({"--hypergraph", kData + "/figure1.json", "--format", "json", "blocker"});
  CHECK(b.code == 0);
  CHECK(nlohmann::json::parse(b.out)["result"].is_object());
  CHECK(run({"--hypergraph", kData + "/figure1.json", "parallelize", "-a", "1,1,2,2"}).code == 0);
  CHECK(run({"--gens", tri, "minor", "--ones", "3"}).code == 0);
  CHECK(run({"--gens", tri, "check", "mengerian", "--box", "2"}).code == 1);
  CHECK(run({"--gens", "x1*x2,x2*x3,x3*x4,x1*x4", "check", "normal"}).code == 0);
  CHECK(run({"--gens", tri, "check", "konig"}).code == 1);
  CHECK(run({"--gens", tri, "check", "packing"}).code == 1);
  CHECK(run({"--gens", "x1*x2,x2*x3,x3*x4,x1*x4", "experiment", "ryser", "-r", "2", "--parts", "0,1,0,1"}).code == 0);
  CHECK(run({"--gens", tri, "experiment", "cc"}).code == 1);
  CHECK(run({"experiment", "gaps", "--samples", "10", "--seed", "3"}).code == 0);
  CHECK(run({"experiment", "huneke", "-m", "2"}).code == 0);
  CHECK(run({"--ideal", kData + "/graph_iii.json", "experiment", "thm31", "--kmax", "2"}).code == 0);
  CHECK(run({"--gens", tri, "resurgence", "--hmax", "4", "--kmax", "3"}).code == 0);
  const Run e = run({"experiment", "equi", "--hypergraph", kData + "/figure1.json"});
  CHECK((e.code == 0 || e.code == 1));
}

TEST_CASE("cli reports seeds") {
  const Run r = run({"--format", "json", "experiment", "gaps", "--samples", "5", "--seed", "9"});
  CHECK(nlohmann::json::parse(r.out)["seed"] == 9);
}

TEST_CASE("cli errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--gens", "x1*y2", "invariants", "-a", "1,1"}).code == 2);
  CHECK(run({"--gens", "x1*x2", "invariants", "-a", "1,1,1"}).code == 2);
  CHECK(run({"--ideal", kData + "/missing.json", "invariants", "-a", "1"}).code == 2);
  CHECK(run({"--gens", "x1^2", "symbolic", "-k", "2"}).code == 2);
  CHECK(run({"--gens", "x1*x2", "containment", "sym:2", "bogus:1"}).code == 2);
  CHECK(run({"invariants", "-a", "1"}).code == 2);
  const Run g = run({"--gens", "x1,x2,x3,x4,x5,x6,x7,x8,x9,x10,x11,x12,x13,x14,x15,x16,x17,x18,x19,x20",
                     "check", "normal", "--box", "3"});
  CHECK(g.code == 2);
  CHECK_FALSE(g.err.empty());
}
