#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "porder/cli.hpp"

using nlohmann::json;
using porder::cli::run;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

struct Result {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check") {
  const Result r = call({"check", "--relation", fixture("chain.json")});
  REQUIRE(r.code == 0);
  const json d = r.doc();
  CHECK(d["kind"] == "weak");
  CHECK(d["weak"]["properties"]["complete"] == true);
  CHECK(d["weak"]["properties"]["transitive"] == true);
  CHECK(d["weak"]["properties"]["linear_order"] == true);
  CHECK(d["weak"]["topology"]["is_closed"] == true);
  CHECK(d["strict"]["pairs"] == json::parse(R"([["a","b"],["a","c"],["b","c"]])"));

  const Result s = call({"check", "--relation", fixture("sierpinski.json"), "--topology",
                         fixture("sierpinski_topology.json")});
  REQUIRE(s.code == 0);
  CHECK(s.doc()["weak"]["topology"]["is_closed"] == true);
}

TEST_CASE("realize") {
  const Result r = call({"realize", "--relation", fixture("single_pair.json")});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["orders"] == json::parse(R"([["a","b","c"],["b","a","c"],["a","c","b"]])"));
  CHECK(r.doc()["verified"] == true);

  const Result bad = call({"realize", "--relation", fixture("cycle.json")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("NotPartialOrder") != std::string::npos);
}

TEST_CASE("dimension") {
  const Result r = call({"dimension", "--relation", fixture("standard_example_3.json")});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["dimension"] == 3);
  CHECK(r.doc()["open_dimension"] == 3);
  CHECK(r.doc()["agree"] == true);
  CHECK(r.doc()["witness"]["orders"].size() == 3);

  const Result budget =
      call({"dimension", "--relation", fixture("standard_example_3.json"), "--max-k", "2"});
  CHECK(budget.code == 3);
  const Result small =
      call({"dimension", "--relation", fixture("standard_example_3.json"), "--max-n", "5"});
  CHECK(small.code == 3);

  const Result sier = call({"dimension", "--relation", fixture("antichain.json"), "--topology",
                            fixture("sierpinski_topology.json")});
  REQUIRE(sier.code == 0);
  CHECK(sier.doc()["dimension"] == 2);
  CHECK(sier.doc()["open_dimension"].is_null());
  CHECK(sier.doc()["agree"] == false);
}

TEST_CASE("embed") {
  const Result r = call({"embed", "--relation", fixture("single_pair.json")});
  REQUIRE(r.code == 0);
  const json d = r.doc();
  CHECK(d["verified"] == true);
  CHECK(d["embedding"]["semantics"] == "existential");
  CHECK(d["embedding"]["columns"].size() == 2);
  CHECK(d["embedding"]["columns"]["v0"] == json::parse(R"({"a":1.0,"b":2.0,"c":0.0})"));
  CHECK(d["embedding"]["columns"]["v1"] == json::parse(R"({"a":2.0,"b":0.0,"c":1.0})"));

  const Result cyc = call({"embed", "--relation", fixture("cycle.json")});
  CHECK(cyc.code == 2);
  CHECK(cyc.err.find("negatively transitive") != std::string::npos);
}

TEST_CASE("pareto") {
  const Result r = call({"pareto", "--relation", fixture("single_pair.json")});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["verified"] == true);
  CHECK(r.doc()["decomposition"]["holds"] == true);
  CHECK(r.doc()["representation"]["columns"].size() == 3);

  const Result p = call({"pareto", "--probe", fixture("probe_identity.json")});
  REQUIRE(p.code == 0);
  CHECK(p.doc()["violation"]["x"] == 0.5);
  CHECK(p.doc()["violation"]["y"] == 0.0);
  CHECK(p.doc()["violation"]["failed_side"] == "strict_union");

  const Result s = call({"pareto", "--probe", fixture("probe_semiorder.json")});
  REQUIRE(s.code == 0);
  CHECK(s.doc()["violation"].is_object());

  const Result bad = call({"pareto", "--probe", fixture("probe_bad_table.json")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("family[0].table") != std::string::npos);

  CHECK(call({"pareto"}).code == 2);
}

TEST_CASE("hasse") {
  const Result r = call({"hasse", "--relation", fixture("single_pair.json")});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["edges"] == json::parse(R"([["a","c"]])"));
  CHECK(r.doc()["points"].size() == 3);
}

TEST_CASE("semiorder") {
  const std::string csv = "semiorder_rows.csv";
  const Result r = call({"semiorder", "--epsilon", "1", "--pair-min", "-1", "--pair-max", "1",
                         "--pair-step", "0.25", "--alpha-count", "201", "--csv", csv});
  REQUIRE(r.code == 0);
  const json d = r.doc();
  CHECK(d["verified"] == true);
  CHECK(d["pairs_checked"] == 81);
  CHECK(d["failed"] == 0);
  CHECK(d["countable_failure"]["defeats_alpha_grid"] == true);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "x,y,in_P,witness_alpha,margin");
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 81);
  std::remove(csv.c_str());

  CHECK(call({"semiorder", "--epsilon", "0"}).code == 2);
}

TEST_CASE("validation errors name the offending field") {
  const Result pair = call({"check", "--relation", fixture("bad_pair.json")});
  CHECK(pair.code == 2);
  CHECK(pair.err.find("pairs[0]") != std::string::npos);
  const Result kind = call({"check", "--relation", fixture("bad_kind.json")});
  CHECK(kind.code == 2);
  CHECK(kind.err.find("'kind'") != std::string::npos);
  CHECK(call({"check", "--relation", fixture("malformed.json")}).code == 2);
  CHECK(call({"check", "--relation", fixture("missing.json")}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
}

TEST_CASE("identical inputs give byte-identical output") {
  for (const char* cmd : {"check", "realize", "dimension", "embed", "pareto", "hasse"}) {
    const Result a = call({"--output", "compact", cmd, "--relation", fixture("single_pair.json")});
    const Result b = call({"--output", "compact", cmd, "--relation", fixture("single_pair.json")});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find('\n') == a.out.size() - 1);
  }
}
