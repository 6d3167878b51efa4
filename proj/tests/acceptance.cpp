// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// pass.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <variant>

#include "oracles.hpp"
#include "plmonster/amalgam.hpp"
#include "plmonster/cli.hpp"
#include "plmonster/rotation.hpp"
#include "plmonster/stein_thompson.hpp"
#include "plmonster/verify.hpp"

using namespace plm;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool passed;
  std::string detail;
};

int run_cli(const std::vector<std::string>& args, std::string& out) {
  std::ostringstream os, err;
  int code = cli::run(args, os, err);
  out = os.str() + err.str();
  return code;
}

Outcome rotation_certification() {
  auto path = (std::filesystem::temp_directory_path() / "plmonster-acceptance-g0.json").string();
  std::string text;
  if (run_cli({"example", "g0", "-o", path}, text) != 0) return {false, "cannot write g0.json"};
  auto t0 = Clock::now();
  int code = run_cli({"rot", "--map", path, "--max-denominator", "50", "--depth", "200"}, text);
  double elapsed = seconds_since(t0);
  if (code != 0) return {false, "rot exited " + std::to_string(code) + ": " + text};
  std::smatch m;
  static const std::regex line(R"(^no rational with denominator <= 50; bracket \[([-0-9/]+), ([-0-9/]+)\])");
  if (!std::regex_search(text, m, line)) return {false, "unexpected output: " + text};
  Rational lo = Rational::parse(m[1].str()), hi = Rational::parse(m[2].str());
  Rational target = Rational::from_double(0.6309297535714574);
  bool width_ok = hi - lo <= Rational(1, 200);
  bool contains = lo <= target && target <= hi;
  bool certified = oracle::brackets_log3_2(lo, hi);
  std::ostringstream d;
  d << "bracket [" << lo.to_decimal(9) << ", " << hi.to_decimal(9) << "], width "
    << (hi - lo).to_decimal(6) << ", contains 0.6309297535714574: " << (contains ? "yes" : "no")
    << ", exact log_3 2 check: " << (certified ? "yes" : "no") << ", " << elapsed << " s";
  return {width_ok && contains && certified && elapsed <= 10.0, d.str()};
}

Outcome rational_detection() {
  Rng rng(2024);
  GroupDescriptor t23 = stein_thompson_23();
  std::size_t ok = 0, total = 0;
  std::string first_failure;
  for (int i = 0; i < 300; ++i) {
    std::int64_t q = rng.range(1, 40), p = rng.range(0, q - 1);
    PLCircleMap f = rotation_map(Rational(p, q));
    if (i >= 200) {
      PLCircleMap h = random_member(t23, rng);
      f = compose(compose(invert(h), f), h);
    }
    ++total;
    RotationResult r = rotation_number(f, 40, 40);
    const auto* rr = std::get_if<RationalRotation>(&r);
    bool good = rr && rr->value() == Rational(p, q) &&
                power(lift(f, 0), rr->q).evaluate(rr->witness) == rr->witness + Rational(rr->p);
    if (good) {
      ++ok;
    } else if (first_failure.empty()) {
      first_failure = "; first failure p/q = " + Rational(p, q).to_string();
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) +
                           " (200 rotations, 100 conjugates) exact with witness" + first_failure};
}

Outcome finite_oracle() {
  FiniteOracleReport rep = finite_oracle_check(6);
  std::string d = std::to_string(rep.words_checked) + " words, " +
                  std::to_string(rep.trivial_words) + " trivial, " +
                  std::to_string(rep.mismatches.size()) + " mismatches";
  if (!rep.mismatches.empty()) d += "; first " + rep.mismatches.front();
  return {rep.words_checked == 5461 && rep.mismatches.empty(), d};
}

Outcome word_problem() {
  auto ctx = AmalgamContext::monster();
  Rng rng(4242);
  auto t0 = Clock::now();
  std::size_t trivial = 0, nontrivial = 0, max_len = 0;
  for (int i = 0; i < 500; ++i) {
    AmalgamWord w = planted_trivial_word(ctx, rng, 12);
    max_len = std::max(max_len, w.size());
    if (is_trivial(w)) ++trivial;
    if (!is_trivial(perturbed_word(w, rng))) ++nontrivial;
  }
  double elapsed = seconds_since(t0);
  std::ostringstream d;
  d << trivial << "/500 planted trivial, " << nontrivial << "/500 perturbed nontrivial, longest "
    << max_len << " syllables, " << elapsed << " s";
  return {trivial == 500 && nontrivial == 500 && max_len <= 12 && elapsed <= 60.0, d.str()};
}

Outcome tuple_transitivity() {
  Rng rng(77);
  const GroupDescriptor ds[] = {thompson_T(), stein_thompson_23()};
  std::size_t ok = 0;
  for (int i = 0; i < 1000; ++i) {
    const GroupDescriptor& d = ds[i % 2];
    std::size_t p = 1 + rng.below(6);
    int q = static_cast<int>(rng.range(1, 4));
    auto [x, y] = random_tuple_pair(d, rng, p, q);
    PLCircleMap f = tuple_map(x, y, d);
    bool good = is_member(f, d).member;
    for (std::size_t j = 0; j < x.size() && good; ++j) good = f.evaluate(x[j]) == y[j];
    ok += good ? 1 : 0;
  }
  return {ok == 1000, std::to_string(ok) + "/1000 pairs (p <= 6, depth <= 4, lambda in {2, 6})"};
}

Outcome structural_suite() {
  VerifyOptions opts;  // 1000 samples, seed 42
  std::size_t properties = 0;
  bool passed = true;
  std::string failures;
  std::size_t central = 0, conjugacy = 0, displacement = 0;
  for (const char* suite : {"arith", "centrality", "rot-invariance"}) {
    SuiteReport r = run_suite(suite, opts);
    for (const PropertyResult& p : r.properties) {
      ++properties;
      if (!p.passed) {
        passed = false;
        failures += " " + r.suite + "/" + p.name + p.counterexample;
      }
      if (p.name == "z-central") central = p.cases;
      if (p.name == "conjugacy-invariance") conjugacy = p.cases;
      if (p.name == "displacement-containment") displacement = p.cases;
    }
  }
  passed = passed && central >= 100 && conjugacy >= 200 && displacement >= 1000;
  std::ostringstream d;
  d << properties << " properties; z commuted with " << central << " lifts, " << conjugacy
    << " conjugacy pairs, " << displacement << " displacement points" << failures;
  return {passed, d.str()};
}

Outcome monster_evidence() {
  MonsterEvidenceReport rep = monster_evidence_report(AmalgamContext::monster());
  std::string text;
  int code = run_cli({"verify", "--suite", "monster-evidence"}, text);
  bool disclaimer = rep.disclaimer.find("NOT MACHINE-VERIFIED") != std::string::npos &&
                    text.find(rep.disclaimer) != std::string::npos;
  std::size_t sections = 0;
  for (const auto& s : rep.sections) sections += s.passed ? 1 : 0;
  return {rep.passed() && rep.sections.size() == 5 && code == 0 && disclaimer,
          std::to_string(sections) + "/5 sections pass, disclaimer " +
              (disclaimer ? "present" : "missing")};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"rotation certification of g0", rotation_certification},
      {"rational detection exactness", rational_detection},
      {"finite oracle equivalence", finite_oracle},
      {"word problem on M", word_problem},
      {"tuple transitivity", tuple_transitivity},
      {"structural suite", structural_suite},
      {"monster-evidence report", monster_evidence},
  };
  int failed = 0, n = 0;
  for (const auto& [name, check] : criteria) {
    ++n;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.passed ? 0 : 1;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << n << " (" << name << "): "
              << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
