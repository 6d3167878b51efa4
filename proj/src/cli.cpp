#include "plmonster/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "plmonster/amalgam.hpp"
#include "plmonster/documents.hpp"
#include "plmonster/rotation.hpp"
#include "plmonster/stein_thompson.hpp"
#include "plmonster/verify.hpp"

namespace plm::cli {

namespace {

// Failure of a command after argument parsing; reported as {"error": kind}.
struct CommandError : std::runtime_error {
  CommandError(std::string kind, const std::string& message)
      : std::runtime_error(message), kind(std::move(kind)) {}
  std::string kind;
};

void report(std::ostream& err, const std::string& kind, const std::string& message) {
  nlohmann::json j;
  j["error"] = kind;
  j["message"] = message;
  err << j.dump() << "\n";
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw CommandError("io", "cannot write file '" + path + "'");
  f << text;
}

ParsedMap load_map(const std::string& path) { return parse_map(read_file(path)); }
AmalgamWord load_word(const std::string& path) { return parse_word(read_file(path)); }

std::vector<Rational> parse_list(const std::string& text, const std::string& what) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    try {
      out.push_back(Rational::parse(item));
    } catch (const std::exception& e) {
      throw CommandError("parse", what + ": " + e.what());
    }
  }
  return out;
}

GroupDescriptor descriptor_arg(std::int64_t lambda, const std::vector<std::int64_t>& slopes) {
  GroupDescriptor d(slopes);
  if (d.lambda() != BigInt(static_cast<long>(lambda))) {
    throw CommandError("usage", "--lambda " + std::to_string(lambda) +
                                    " is not the product of --slopes");
  }
  return d;
}

std::optional<GroupDescriptor> common_descriptor(const ParsedMap& a, const ParsedMap& b) {
  if (a.descriptor && b.descriptor && *a.descriptor == *b.descriptor) return a.descriptor;
  return std::nullopt;
}

std::string format_result(const std::variant<PLCircleMap, PLLineMap>& m,
                          const std::optional<GroupDescriptor>& d) {
  return std::visit([&](const auto& f) { return format_map(f, d); }, m);
}

std::string rotation_text(const RotationResult& r) {
  std::ostringstream os;
  if (const auto* rr = std::get_if<RationalRotation>(&r)) {
    os << "rational " << rr->value() << ", witness " << rr->witness << "\n";
  } else {
    const auto& c = std::get<CertifiedNonrational>(r);
    os << "no rational with denominator <= " << c.max_denominator << "; bracket [" << c.bracket.lo
       << ", " << c.bracket.hi << "]\n";
    os << "approx [" << c.bracket.lo.to_decimal(12) << ", " << c.bracket.hi.to_decimal(12)
       << "] at depth " << c.depth << "\n";
  }
  return os.str();
}

std::string evidence_text(const MonsterEvidenceReport& rep) {
  std::ostringstream os;
  for (const EvidenceSection& s : rep.sections) {
    os << (s.passed ? "PASS " : "FAIL ") << "monster-evidence/" << s.name << "\n";
    for (const std::string& d : s.details) os << "  " << d << "\n";
  }
  os << rep.disclaimer << "\n";
  return os.str();
}

int verify(const std::string& suite, const VerifyOptions& options, std::ostream& out) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    names.push_back(suite);
  }
  std::size_t total = 0, failed = 0;
  for (const std::string& name : names) {
    if (name == "monster-evidence") {
      MonsterEvidenceReport rep = monster_evidence_report(AmalgamContext::monster(), options);
      out << evidence_text(rep);
      total += rep.sections.size();
      for (const auto& s : rep.sections) failed += s.passed ? 0 : 1;
      continue;
    }
    SuiteReport r = run_suite(name, options);
    for (const PropertyResult& p : r.properties) {
      ++total;
      out << (p.passed ? "PASS " : "FAIL ") << r.suite << "/" << p.name << " (" << p.cases
          << " cases)\n";
      if (!p.passed) {
        ++failed;
        out << "  counterexample" << p.counterexample << "\n";
      }
    }
  }
  if (failed == 0) {
    out << "verify: all " << total << " properties passed\n";
    return kExitOk;
  }
  out << "verify: " << failed << " of " << total << " properties failed\n";
  return kExitVerifyFailed;
}

std::string example_text(const std::string& name) {
  if (name == "g0") return format_map(irrational_candidate_g0(), stein_thompson_23());
  if (name == "g0-lift") return format_map(g0_lift(), stein_thompson_23());
  if (name == "z") return format_map(center_generator_z(), thompson_T());
  if (name == "identity") return format_map(PLCircleMap());
  if (name == "relator") return format_word(relator_word(AmalgamContext::monster(), 1));
  throw CommandError("usage", "unknown example '" + name + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact PL circle maps, rotation numbers and the amalgam M.\n"
               "Composition is left to right: `compose A B` applies A, then B."};
  app.name("plmonster");
  app.require_subcommand(1);

  std::string map_path, point, out_path, a_path, b_path, from, to, suite = "all", example;
  std::int64_t exponent = 0, lambda = 0, max_den = kDefaultMaxDenominator, depth = kDefaultDepth;
  std::vector<std::int64_t> slopes;
  std::vector<std::string> word_files;
  VerifyOptions vopts;
  int code = kExitOk;

  auto* eval = app.add_subcommand("eval", "Exact image of a point");
  eval->add_option("--map", map_path, "Map document")->required();
  eval->add_option("--point", point, "Point as p/q")->required();

  auto* comp = app.add_subcommand("compose", "A then B");
  comp->add_option("A", a_path)->required();
  comp->add_option("B", b_path)->required();
  comp->add_option("-o,--output", out_path);

  auto* inv = app.add_subcommand("invert", "Inverse map");
  inv->add_option("A", a_path)->required();
  inv->add_option("-o,--output", out_path);

  auto* pow = app.add_subcommand("power", "A^N");
  pow->add_option("A", a_path)->required();
  pow->add_option("N", exponent)->required()->allow_extra_args(false);
  pow->add_option("-o,--output", out_path);

  auto* mem = app.add_subcommand("member", "Stein-Thompson membership report");
  mem->add_option("--map", map_path)->required();
  mem->add_option("--lambda", lambda)->required();
  mem->add_option("--slopes", slopes)->required()->delimiter(',');

  auto* tup = app.add_subcommand("tuple-map", "Group element carrying one tuple to another");
  tup->add_option("--from", from, "Comma-separated fractions")->required();
  tup->add_option("--to", to, "Comma-separated fractions")->required();
  tup->add_option("--lambda", lambda)->required();
  tup->add_option("--slopes", slopes)->required()->delimiter(',');
  tup->add_option("-o,--output", out_path);

  auto* rot = app.add_subcommand("rot", "Rotation number, exact or certified");
  rot->add_option("--map", map_path)->required();
  rot->add_option("--max-denominator", max_den)->check(CLI::PositiveNumber);
  rot->add_option("--depth", depth)->check(CLI::PositiveNumber);

  auto* word = app.add_subcommand("word", "Words in M");
  word->require_subcommand(1);
  std::string word_cmd;
  for (const char* name : {"reduce", "trivial", "multiply", "invert", "project"}) {
    auto* sub = word->add_subcommand(name);
    sub->add_option("FILES", word_files)->required();
    sub->add_option("-o,--output", out_path);
    sub->callback([&word_cmd, name] { word_cmd = name; });
  }

  auto* ver = app.add_subcommand("verify", "Run property suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  ver->add_option("--suite", suite)->check(CLI::IsMember(suites));
  ver->add_option("--samples", vopts.samples)->check(CLI::PositiveNumber);
  ver->add_option("--seed", vopts.seed);

  auto* ex = app.add_subcommand("example", "Write a built-in document");
  ex->add_option("NAME", example, "g0, g0-lift, z, identity, relator")->required();
  ex->add_option("-o,--output", out_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report(err, "usage", e.what());
    return kExitUsage;
  }

  try {
    if (eval->parsed()) {
      ParsedMap m = load_map(map_path);
      Rational x = parse_list(point, "--point").at(0);
      Rational y = m.is_line() ? evaluate_line(m.line(), x) : evaluate_circle(m.circle(), x);
      out << y << "\n";
    } else if (comp->parsed()) {
      ParsedMap a = load_map(a_path), b = load_map(b_path);
      if (a.is_line() != b.is_line()) {
        throw CommandError("usage", "cannot compose a circle map with a line map");
      }
      std::variant<PLCircleMap, PLLineMap> r;
      if (a.is_line()) {
        r = compose(a.line(), b.line());
      } else {
        r = compose(a.circle(), b.circle());
      }
      emit(format_result(r, common_descriptor(a, b)), out_path, out);
    } else if (inv->parsed()) {
      ParsedMap a = load_map(a_path);
      std::variant<PLCircleMap, PLLineMap> r;
      if (a.is_line()) {
        r = invert(a.line());
      } else {
        r = invert(a.circle());
      }
      emit(format_result(r, a.descriptor), out_path, out);
    } else if (pow->parsed()) {
      ParsedMap a = load_map(a_path);
      std::variant<PLCircleMap, PLLineMap> r;
      if (a.is_line()) {
        r = power(a.line(), exponent);
      } else {
        r = power(a.circle(), exponent);
      }
      emit(format_result(r, a.descriptor), out_path, out);
    } else if (mem->parsed()) {
      ParsedMap m = load_map(map_path);
      GroupDescriptor d = descriptor_arg(lambda, slopes);
      const PLCircleMap& f = m.is_line() ? m.line().base() : m.circle();
      MembershipReport r = is_member(f, d);
      out << (r.member ? "member of " : "not a member of ") << d.to_string() << "\n";
      for (const Violation& v : r.violations) {
        out << "  " << to_string(v.kind) << " at index " << v.index << ": " << v.value << "\n";
      }
    } else if (tup->parsed()) {
      GroupDescriptor d = descriptor_arg(lambda, slopes);
      auto x = parse_list(from, "--from");
      auto y = parse_list(to, "--to");
      emit(format_map(tuple_map(x, y, d), d), out_path, out);
    } else if (rot->parsed()) {
      ParsedMap m = load_map(map_path);
      const PLCircleMap& f = m.is_line() ? m.line().base() : m.circle();
      out << rotation_text(rotation_number(f, max_den, depth));
    } else if (word->parsed()) {
      std::size_t want = word_cmd == "multiply" ? 2 : 1;
      if (word_files.size() != want) {
        throw CommandError("usage", "word " + word_cmd + " takes " + std::to_string(want) +
                                        (want == 1 ? " file" : " files"));
      }
      AmalgamWord w = load_word(word_files[0]);
      if (word_cmd == "reduce") {
        emit(format_word(reduce(w)), out_path, out);
      } else if (word_cmd == "trivial") {
        out << (is_trivial(w) ? "trivial" : "nontrivial") << "\n";
      } else if (word_cmd == "multiply") {
        emit(format_word(multiply(w, load_word(word_files[1]))), out_path, out);
      } else if (word_cmd == "invert") {
        emit(format_word(invert_word(w)), out_path, out);
      } else {
        emit(format_map(project_to_G1(w), w.context()->g1()), out_path, out);
      }
    } else if (ver->parsed()) {
      code = verify(suite, vopts, out);
    } else if (ex->parsed()) {
      emit(example_text(example), out_path, out);
    }
  } catch (const CommandError& e) {
    report(err, e.kind, e.what());
    return kExitUsage;
  } catch (const DocumentError& e) {
    report(err, "parse", e.what());
    return kExitUsage;
  } catch (const TupleMapError& e) {
    report(err, "tuple-map", e.what());
    return kExitUsage;
  } catch (const ContextError& e) {
    report(err, "context", e.what());
    return kExitUsage;
  } catch (const WordError& e) {
    report(err, "word", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    report(err, "invalid", e.what());
    return kExitUsage;
  }
  return code;
}

}  // namespace plm::cli
