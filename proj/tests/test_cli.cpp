#include <doctest.h>

#include <sstream>

#include "baxter/cli.hpp"
#include "baxter/json_io.hpp"

using namespace baxter;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, std::string const& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("canon") {
  Run r = run({"canon", "36131512665", "--n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("lpi  {(1-2,3), (3-5,2), (3-6,1)}") != std::string::npos);
  CHECK(r.out.find("rpi  {(2-1,1), (5-2,1), (5-3,2)}") != std::string::npos);

  Run j = run({"canon", "36131512665", "--n", "6", "--format", "json"});
  REQUIRE(j.code == 0);
  Json parsed = Json::parse(j.out);
  CHECK(parsed["n"] == 6);
  CHECK(parsed["rpi"] == Json::parse("[[2,1,1],[5,2,1],[5,3,2]]"));
  CHECK(parsed["lpi"] == Json::parse("[[1,2,3],[3,5,2],[3,6,1]]"));
  CHECK(element_from_json(parsed) == canonical(parse_aword("36131512665", 6)));
}

TEST_CASE("json round trips") {
  BaxtElement e = canonical(parse_aword("2121", 2));
  CHECK(element_from_json(to_json(e)) == e);
  Json bad = to_json(e);
  bad["ev"] = Json::array({1, 3});
  CHECK_THROWS(element_from_json(bad));
  auto m = phi2(parse_aword("1212", 2));
  CHECK(matrix_from_json(to_json(m)) == m);
}

TEST_CASE("equiv, sharp and trees") {
  CHECK(run({"equiv", "2121", "2211", "--n", "2"}).code == 0);
  CHECK(run({"equiv", "12", "21", "--n", "2"}).code == 1);
  CHECK(run({"sharp", "112", "--n", "2"}).out == "122\n");
  Run dot = run({"trees", "36131512665", "--n", "6", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("digraph sylv") != std::string::npos);
  Json t = Json::parse(run({"trees", "36131512665", "--n", "6", "--format", "json"}).out);
  CHECK(t["sylv"]["label"] == 5);
  CHECK(t["sylv_sharp"]["label"] == 3);
}

TEST_CASE("repr") {
  Json m = Json::parse(run({"repr", "1", "--n", "2", "--format", "json"}).out);
  CHECK(m["dim"] == 6);
  CHECK(m["entries"][0][0] == 1);
  CHECK(m["entries"][1][0] == "-inf");
  Json t = Json::parse(run({"repr", "123", "--n", "4", "--format", "json"}).out);
  CHECK(t["coords"].size() == 6);
  Json big = Json::parse(run({"repr", "123", "--n", "4", "--matrix", "--format", "json"}).out);
  CHECK(big["dim"] == 180);
}

TEST_CASE("check-id") {
  Run no = run({"check-id", "x y ≈ y x", "--n", "4", "--format", "json"});
  CHECK(no.code == 1);
  Json j = Json::parse(no.out);
  CHECK(j["verdict"] == "NO");
  CHECK(j["violated"] == "OccLR");
  CHECK(j["n"] == 4);
  CHECK(run({"check-id", "x y ~= y x", "--n", "3"}).code == 1);
  CHECK(run({"check-id", "x y ~= y x", "--n", "2", "--mode", "plain"}).code == 1);
  CHECK(run({"check-id", "x* ~= x*", "--n", "2", "--mode", "plain"}).code == 2);
}

TEST_CASE("family piped into check-id") {
  Run fam = run({"family", "pkqk", "--k", "2"});
  REQUIRE(fam.code == 0);
  CHECK(run({"check-id", "--n", "3"}, fam.out).code == 0);
  CHECK(run({"check-id", "--n", "4"}, fam.out).code == 1);
  Run b2 = run({"family", "basis2"});
  CHECK(run({"check-id", "--n", "2"}, "# comment\n\n" + b2.out).code == 0);
}

TEST_CASE("oracle") {
  Run r = run({"oracle", "x x* ~= x* x", "--n", "2", "--format", "json"});
  CHECK(r.code == 1);
  Json j = Json::parse(r.out);
  CHECK(j["verdict"] == "REFUTED");
  CHECK(j["witness"]["assignment"]["x"] == "1");
  CHECK(j["witness"]["lhs_key"]["representative"] == "12");
  CHECK(run({"oracle", "x y ~= x y", "--n", "3"}).code == 0);
  Run s1 = run({"oracle", "x y ~= y x", "--n", "3", "--samples", "50", "--seed", "4"});
  Run s2 = run({"oracle", "x y ~= y x", "--n", "3", "--samples", "50", "--seed", "4"});
  CHECK(s1.out == s2.out);
  CHECK(run({"oracle", "a b c d e ~= e d c b a", "--n", "4", "--max-len", "4", "--budget", "10"}).code ==
        2);
}

TEST_CASE("isoterm") {
  CHECK(run({"isoterm", "x x* y y*", "--n", "3"}).out == "isoterm\n");
}

TEST_CASE("errors") {
  Run bad = run({"check-id", "x y ~= y )", "--n", "2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("position 9") != std::string::npos);
  CHECK(run({"canon", "4", "--n", "3"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
