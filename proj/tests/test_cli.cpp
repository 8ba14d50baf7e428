#include "braidrep/cli.hpp"
#include "braidrep/errors.hpp"
#include "braidrep/io.hpp"
#include "braidrep/zoo.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace braidrep;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("graph of the standard representation as DOT") {
  const Outcome r = run({"graph", "tym:n=6,u=2", "--format", "dot"});
  REQUIRE(r.code == 0);
  for (const char* edge : {"s1 -- s2", "s2 -- s3", "s3 -- s4", "s4 -- s5"}) CHECK(r.out.find(edge) != std::string::npos);
  CHECK(r.out.find("s1 -- s3") == std::string::npos);
  CHECK(r.out.find("s0") == std::string::npos);

  const Outcome full = run({"graph", "tym:n=6,u=2", "--format", "dot", "--full"});
  CHECK(full.out.find("s0 -- s1") != std::string::npos);
}

TEST_CASE("analyze recovers the parameter of a conjugated representation") {
  const Outcome r = run({"analyze", "conj(tym:n=7,u=4,seed=9)", "--format", "json"});
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["standard_form"]["u"] == "4");
  CHECK(doc["corank"] == 2);
  CHECK(doc["irreducibility"]["tag"] == "AbsolutelyIrreducible");
}

TEST_CASE("irreducible reports the all-ones witness at u = 1") {
  const Outcome r = run({"irreducible", "tym:n=6,u=1"});
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["tag"] == "Reducible");
  REQUIRE(doc["witness"]["dim"] == 1);
  for (const auto& x : doc["witness"]["basis"][0]) CHECK(x == "1");

  const Outcome text = run({"irreducible", "tym:n=6,u=1", "--format", "text"});
  CHECK(text.out.rfind("Reducible", 0) == 0);
}

TEST_CASE("identical arguments give identical bytes") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"analyze", "conj(dsum(tym:n=6,u=3,burau:n=6,t=2))", "--seed", "4"},
           {"analyze", "conj(tym:n=5,u=-7/4)", "--format", "text"},
           {"sweep", "--n", "6,7", "--u", "2,1"},
           {"verify", "burau:n=5,t=1/2", "--format", "text"}}) {
    const Outcome a = run(args);
    const Outcome b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("a saved representation analyzes like its builtin spec") {
  const auto path = std::filesystem::temp_directory_path() / "braidrep_cli_make.json";
  const std::string spec = "conj(tensor(tym:n=6,u=5/3,y=2),seed=3)";
  REQUIRE(run({"make", spec, "--out", path.string()}).code == 0);
  CHECK(load_representation(path) == parse_builtin(spec));
  const Outcome from_file = run({"analyze", path.string()});
  const Outcome from_spec = run({"analyze", spec});
  CHECK(from_file.code == 0);
  CHECK(from_file.out == from_spec.out);
  std::filesystem::remove(path);
}

TEST_CASE("builtin grammar") {
  CHECK(parse_builtin("tym:n=5,u=2") == tym_standard(5, 2));
  CHECK(parse_builtin(" dsum( char:n=4,y=3 , burau:n=4,t=-1 ) ") ==
        direct_sum(character_rep(4, 3), reduced_burau(4, -1)));
  CHECK(parse_builtin("conj(tym:n=5,u=2)", 7) == parse_builtin("conj(tym:n=5,u=2,seed=7)"));
  CHECK_THROWS_AS(parse_builtin("tym:n=5"), Error);
  CHECK_THROWS_AS(parse_builtin("moebius:n=5,u=2"), Error);
}

TEST_CASE("bad input exits with code 2") {
  CHECK(run({"analyze", "tym:n=7,u=1/0"}).code == 2);
  CHECK(run({"analyze", "tym:n=7,u=abc"}).code == 2);
  CHECK(run({"analyze", "/nonexistent/rep.json"}).code == 2);
  CHECK(run({"graph", "tym:n=6,u=2", "--format", "svg"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);

  const auto path = std::filesystem::temp_directory_path() / "braidrep_cli_bad.json";
  std::ofstream(path) << "{\"n\": 3, \"r\": 2, \"generators\": [[[\"1\"]]]}";
  const Outcome r = run({"verify", path.string()});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  std::filesystem::remove(path);
}
