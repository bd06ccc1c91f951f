#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "skein/cli.hpp"
#include "skein/error.hpp"
#include "skein/json_io.hpp"

using namespace skein;

namespace {

std::string fixture(const std::string& name) { return std::string(SKEIN_FIXTURE_DIR) + "/" + name; }

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

nlohmann::json run_json(std::vector<std::string> args) {
  const Run r = run(std::move(args));
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("fixture files parse") {
  const SlicedDiagram u = parse_diagram_file(fixture("unknot.json"));
  CHECK(u.crossing_count() == 0);
  CHECK(trace_components(u).size() == 1);
  const SlicedDiagram t = parse_diagram_file(fixture("trefoil.json"));
  CHECK(t.crossing_count() == 3);
  CHECK(trace_components(t).size() == 1);
  CHECK(writhe(t) == -3);
  const SlicedDiagram x = parse_diagram_file(fixture("crossing_up.json"));
  CHECK(crossing_sign(x, 0) == 1);
}

TEST_CASE("parse errors name the place") {
  try {
    parse_diagram_file(fixture("bad_cap.json"));
    FAIL("expected an error");
  } catch (const ValidationError& e) {
    CHECK(e.event_index() == 0);
    CHECK(std::string(e.what()).find("at event 0") != std::string::npos);
  }
  CHECK_THROWS_WITH_AS(parse_diagram_text("{\"events\": [{\"kind\": \"cup\"}]}"),
                       doctest::Contains("events[0]"), ParseError);
  CHECK_THROWS_WITH_AS(parse_diagram_text("{\"events\": [{\"kind\": \"cross\", \"pos\": 0, \"over\": \"X\"}]}"),
                       doctest::Contains("events[0].over"), ParseError);
  CHECK_THROWS_WITH_AS(parse_diagram_text("{\n  \"events\": [\n    oops\n  ]\n}"), doctest::Contains("line 3"),
                       ParseError);
  CHECK_THROWS_AS(parse_diagram_file(fixture("does-not-exist.json")), ParseError);
}

TEST_CASE("diagram JSON round trip") {
  for (const char* name : {"unknot.json", "trefoil.json", "figure_eight.json", "annulus-1m1.json", "crossing_up.json"}) {
    const SlicedDiagram d = parse_diagram_file(fixture(name));
    CHECK(diagram_from_json(diagram_to_json(d)) == d);
  }
}

TEST_CASE("polynomial JSON keeps big coefficients exact") {
  LaurentPoly p(1);
  for (int k = 0; k < 80; ++k) p *= LaurentPoly(1) + LaurentPoly::var(1);
  const nlohmann::json j = poly_to_json(p);
  CHECK(j[40][1].is_string());
  CHECK(j[0][1].is_number_integer());
  CHECK(poly_from_json(j) == p);
}

TEST_CASE("bracket command") {
  const auto j = run_json({"bracket", fixture("trefoil.json"), "--classical"});
  CHECK(j["normalization"] == "classical");
  const auto& term = j["bracket"]["terms"][0];
  CHECK(term["curve"].empty());
  CHECK(poly_from_json(term["coeff"]) ==
        LaurentPoly::var(7) - LaurentPoly::var(3) - LaurentPoly::var(-5));
  const Run oracle = run({"--format", "pretty", "bracket", fixture("trefoil.json"), "--classical", "--oracle"});
  CHECK(oracle.code == 0);
  CHECK(oracle.out == "bracket: (A^7 - A^3 - A^-5)*{}\n");
  const Run reduced = run({"--format", "pretty", "bracket", fixture("unknot.json"), "--reduction", "1"});
  CHECK(reduced.out == "bracket: (-2 (mod A^2 - 1))*{}\n");
}

TEST_CASE("jones command") {
  const Run r = run({"--format", "pretty", "jones", fixture("trefoil.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "V = t^-1 + t^-3 - t^-4\n");
  const auto j = run_json({"jones", fixture("figure_eight.json")});
  CHECK(j["t_text"] == "t^2 - t + 1 - t^-1 + t^-2");
  CHECK(run({"jones", fixture("annulus-11.json")}).code == 1);
}

TEST_CASE("kappa command on the annulus") {
  for (const char* name : {"annulus-11.json", "annulus-1m1.json"}) {
    const auto j = run_json({"kappa", "--manifold", "handlebody:1", fixture(name)});
    CHECK(j["omega"] == 0);
    CHECK(j["reduction_index"] == 0);
    CHECK(j["mod2_tag"] == nlohmann::json::array({0}));
    REQUIRE(j["value"]["terms"].size() == 1);
    CHECK(j["value"]["terms"][0]["curve"] == nlohmann::json::parse("[[1],[1]]"));
    CHECK(j["value"]["terms"][0]["coeff"] == nlohmann::json::parse("[[0,1]]"));
  }
  CHECK(run({"kappa", fixture("annulus-11.json")}).code == 0);
  CHECK(run({"kappa", "--manifold", "handlebody:2", fixture("annulus-11.json")}).code == 1);
}

TEST_CASE("kappa with custom data") {
  const std::string data = R"({"r": 1, "s": 1, "iota": [[0]], "v0": [1]})";
  const auto j = run_json({"kappa", "--data", data, fixture("annulus-11.json")});
  CHECK(j["omega"] == 1);
  CHECK(j["reduction_index"] == 3);
  CHECK(run({"kappa", "--data", "{\"r\": ", fixture("annulus-11.json")}).code == 2);
}

TEST_CASE("przytycki command") {
  const auto j = run_json({"przytycki", fixture("trefoil.json"), "--manifold", "handlebody:0"});
  CHECK(j["exponent"] == -3);
  CHECK(j["modulus"] == 0);
  const auto k = run_json({"przytycki", fixture("annulus-1m1.json")});
  CHECK(k["class"]["free"] == nlohmann::json::array({0}));
  CHECK(k["exponent"] == 0);
}

TEST_CASE("omega command") {
  const Run r = run({"--format", "pretty", "omega", "--manifold", "sigma-times-i:1:vertical_pair", "--class", "1,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  CHECK(run_json({"omega", "--manifold", "handlebody:2", "--class", "3,-4"})["omega"] == 0);
  CHECK(run({"omega", "--manifold", "handlebody:2", "--class", "3"}).code == 1);
  CHECK(run({"omega", "--manifold", "nowhere", "--class", "3"}).code == 2);
}

TEST_CASE("glue command") {
  const auto s = run_json({"glue", fixture("crossing_up.json"), fixture("crossing_up.json")});
  CHECK(s["ok"] == true);
  CHECK(s["writhe_additive"] == true);
  CHECK(diagram_from_json(s["glued"]).crossing_count() == 2);
  const auto b = run_json({"glue", fixture("core_circle.json"), fixture("annulus-1m1.json"), "--mode", "side_by_side"});
  CHECK(b["ok"] == true);
  CHECK(diagram_from_json(b["glued"]).puncture_count() == 2);
  CHECK(run({"glue", fixture("unknot.json"), fixture("crossing_up.json")}).code == 1);
}

TEST_CASE("check command") {
  const auto j = run_json({"check", "kauffman-formula", "--seed", "7", "--count", "200"});
  CHECK(j["passed"] == 200);
  CHECK(j["failed"] == 0);
  const Run all = run({"--format", "pretty", "check", "all", "--seed", "3", "--count", "20"});
  CHECK(all.code == 0);
  for (const auto& name : suite_names()) CHECK(all.out.find(name + ": 20/20 passed") != std::string::npos);
  CHECK(run({"check", "nonsense"}).code == 2);
}

TEST_CASE("suites are deterministic") {
  const SuiteOutcome a = run_suite("skein", 9, 30, 6);
  const SuiteOutcome b = run_suite("skein", 9, 30, 6);
  CHECK(a.to_json() == b.to_json());
  CHECK_THROWS_AS(run_suite("nonsense", 1, 1, 1), SkeinError);
}

TEST_CASE("generate command") {
  const auto a = run_json({"generate", "--seed", "42", "--crossings", "6", "--genus", "2"});
  const auto b = run_json({"generate", "--seed", "42", "--crossings", "6", "--genus", "2"});
  CHECK(a == b);
  const SlicedDiagram d = diagram_from_json(a);
  CHECK(d.puncture_count() == 2);
  CHECK(d.oriented());
  const auto t = run_json({"generate", "--seed", "1", "--bottom", "2", "--top", "2", "--unoriented"});
  CHECK_FALSE(t.contains("orientations"));
  CHECK(run({"generate", "--bottom", "1", "--top", "0"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"bracket"}).code == 2);
  CHECK(run({"--format", "xml", "bracket", fixture("unknot.json")}).code == 2);
  const Run bad = run({"bracket", fixture("bad_cap.json")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("slot overflow at event 0") != std::string::npos);
  CHECK(run({"bracket", fixture("malformed.json")}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
