#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "plmonster/cli.hpp"
#include "plmonster/documents.hpp"

using namespace plm;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "plmonster-unit";
  std::filesystem::create_directories(dir);
  auto path = (dir / name).string();
  std::ofstream(path) << text;
  return path;
}

const char* kG0Doc = R"({"version": 1, "lambda": 6, "slopes": [2, 3],
  "breakpoints": ["0", "1/4"], "images": ["1/2", "0"]})";

}  // namespace

TEST_CASE("map documents") {
  ParsedMap id = parse_map(R"({"version": 1, "breakpoints": ["0"], "images": ["0"]})");
  CHECK_FALSE(id.is_line());
  CHECK(id.circle().is_identity());

  ParsedMap g0 = parse_map(kG0Doc);
  CHECK(g0.circle() == irrational_candidate_g0());
  REQUIRE(g0.descriptor);
  CHECK(*g0.descriptor == stein_thompson_23());
  CHECK(parse_map(format_map(g0)).circle() == g0.circle());

  CHECK_THROWS_AS(parse_map(R"({"version": 1, "breakpoints": ["0", "0"], "images": ["0", "1/2"]})"),
                  DocumentError);
  CHECK_THROWS_AS(parse_map(R"({"version": 1, "breakpoints": [0], "images": ["0"]})"), DocumentError);
  CHECK_THROWS_AS(parse_map(R"({"version": 2, "breakpoints": ["0"], "images": ["0"]})"), DocumentError);
  CHECK_THROWS_AS(parse_map(R"({"version": 1, "lambda": 5, "slopes": [2, 3],
      "breakpoints": ["0"], "images": ["0"]})"),
                  DocumentError);
  CHECK_THROWS_AS(parse_map("{\"version\": 1,"), DocumentError);
  try {
    parse_map(R"({"version": 1, "breakpoints": ["0", "1/x"], "images": ["0", "1/2"]})");
    FAIL("expected DocumentError");
  } catch (const DocumentError& e) {
    CHECK(std::string(e.what()).find("breakpoints[1]") != std::string::npos);
  }
}

TEST_CASE("canonical text round-trips byte for byte") {
  std::string text = format_map(g0_lift(), stein_thompson_23());
  CHECK(format_map(parse_map(text)) == text);
  AmalgamWord w = random_word(AmalgamContext::monster(), 5, 3);
  std::string wt = format_word(w);
  CHECK(format_word(parse_word(wt)) == wt);
}

TEST_CASE("eval, compose, invert, power") {
  std::string g0 = temp_file("g0.json", kG0Doc);
  CHECK(cli_run({"eval", "--map", g0, "--point", "1/8"}).out == "3/4\n");
  Run lift = cli_run({"example", "g0-lift"});
  std::string g0bar = temp_file("g0bar.json", lift.out);
  CHECK(cli_run({"eval", "--map", g0bar, "--point", "1"}).out == "3/2\n");

  Run inv = cli_run({"invert", g0});
  REQUIRE(inv.code == 0);
  std::string g0inv = temp_file("g0inv.json", inv.out);
  Run comp = cli_run({"compose", g0, g0inv});
  CHECK(parse_map(comp.out).circle().is_identity());
  Run sq = cli_run({"power", g0bar, "2"});
  CHECK(parse_map(sq.out).line().evaluate(0) == Rational(7, 6));

  Run bad = cli_run({"compose", g0, g0bar});
  CHECK(bad.code == 2);
  Run outside = cli_run({"eval", "--map", g0, "--point", "3/2"});
  CHECK(outside.code == 2);
}

TEST_CASE("member and tuple-map") {
  std::string g0 = temp_file("g0m.json", kG0Doc);
  CHECK(cli_run({"member", "--map", g0, "--lambda", "6", "--slopes", "2,3"}).out == "member of <2,3>\n");
  Run t = cli_run({"member", "--map", g0, "--lambda", "2", "--slopes", "2"});
  CHECK(t.code == 0);
  CHECK(t.out.find("not a member of <2>") == 0);
  CHECK(t.out.find("slope-not-in-P") != std::string::npos);
  CHECK(cli_run({"member", "--map", g0, "--lambda", "5", "--slopes", "2,3"}).code == 2);

  Run tm = cli_run({"tuple-map", "--from", "0,1/2", "--to", "0,1/4", "--lambda", "6", "--slopes", "2,3"});
  REQUIRE(tm.code == 0);
  ParsedMap m = parse_map(tm.out);
  CHECK(m.circle().evaluate(Rational(1, 2)) == Rational(1, 4));
  Run err = cli_run({"tuple-map", "--from", "1/3", "--to", "0", "--lambda", "2", "--slopes", "2"});
  CHECK(err.code == 2);
  auto j = nlohmann::json::parse(err.err);
  CHECK(j["error"] == "tuple-map");
}

TEST_CASE("rot output") {
  std::string g0 = temp_file("g0r.json", kG0Doc);
  Run r = cli_run({"rot", "--map", g0});
  CHECK(r.code == 0);
  CHECK(r.out.find("no rational with denominator <= 50; bracket [") == 0);
  std::string rot = temp_file("rot.json", format_map(rotation_map(Rational(2, 5))));
  Run rr = cli_run({"rot", "--map", rot, "--max-denominator", "10", "--depth", "10"});
  CHECK(rr.out.find("rational 2/5, witness ") == 0);
  CHECK(cli_run({"rot", "--map", g0, "--max-denominator", "0"}).code == 2);
}

TEST_CASE("word commands") {
  Run ex = cli_run({"example", "relator"});
  std::string rel = temp_file("relator.json", ex.out);
  CHECK(cli_run({"word", "trivial", rel}).out == "trivial\n");
  Run red = cli_run({"word", "reduce", rel});
  CHECK(parse_word(red.out).empty());
  Run proj = cli_run({"word", "project", rel});
  CHECK(parse_map(proj.out).circle().is_identity());
  std::string w = temp_file("w.json", format_word(random_word(AmalgamContext::monster(), 4, 9)));
  CHECK(cli_run({"word", "trivial", w}).out == "nontrivial\n");
  Run inv = cli_run({"word", "invert", w});
  std::string wi = temp_file("wi.json", inv.out);
  Run prod = cli_run({"word", "multiply", w, wi});
  CHECK(parse_word(prod.out).empty());
  CHECK(cli_run({"word", "multiply", w}).code == 2);
  // syllable not in its factor
  std::string bad = temp_file("bad.json", R"({"version": 1, "syllables": [
      {"factor": "G1", "element": {"version": 1, "breakpoints": ["0", "1/4"],
                                   "images": ["1/2", "0"], "offset": 0}}]})");
  Run e = cli_run({"word", "trivial", bad});
  CHECK(e.code == 2);
  CHECK(e.err.find("syllables[0]") != std::string::npos);
}

TEST_CASE("usage errors and exit codes") {
  CHECK(cli_run({}).code == 2);
  CHECK(cli_run({"nope"}).code == 2);
  CHECK(cli_run({"verify", "--suite", "nope"}).code == 2);
  CHECK(cli_run({"eval", "--map", "/nonexistent.json", "--point", "0"}).code == 2);
  Run h = cli_run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("applies A, then B") != std::string::npos);
}

TEST_CASE("verify is deterministic and exits 0") {
  Run a = cli_run({"verify", "--suite", "tuple", "--samples", "30", "--seed", "7"});
  Run b = cli_run({"verify", "--suite", "tuple", "--samples", "30", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  Run m = cli_run({"verify", "--suite", "monster-evidence", "--samples", "20"});
  CHECK(m.code == 0);
  CHECK(m.out.find("NOT MACHINE-VERIFIED") != std::string::npos);
}
