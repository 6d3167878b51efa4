#include "plmonster/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "plmonster/documents.hpp"
#include "plmonster/rotation.hpp"
#include "plmonster/stein_thompson.hpp"

namespace plm {

const char* const kMonsterDisclaimer =
    "NOT MACHINE-VERIFIED: that every fixed point-free action of M on the line is proximal "
    "(type 3), i.e. that M is a left orderable monster, is a theorem about all actions. Only "
    "the computable ingredients listed above are checked here.";

namespace {

using Case = std::function<bool(std::size_t, Rng&, std::ostream&)>;

// FNV-1a, so per-property seeds do not depend on the standard library.
std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

PropertyResult check(const std::string& name, std::size_t cases, std::uint64_t seed,
                     const Case& body) {
  PropertyResult out{name, true, 0, {}};
  Rng rng(seed ^ name_hash(name));
  for (std::size_t i = 0; i < cases; ++i) {
    std::ostringstream why;
    bool ok = false;
    try {
      ok = body(i, rng, why);
    } catch (const std::exception& e) {
      why << " exception: " << e.what();
    }
    ++out.cases;
    if (!ok) {
      out.passed = false;
      out.counterexample = "case " + std::to_string(i) + ":" + why.str();
      break;
    }
  }
  return out;
}

PLLineMap random_lift(const GroupDescriptor& d, Rng& rng) {
  return lift(random_member(d, rng, 4, 2), rng.range(-2, 2));
}

Rational random_unit(Rng& rng) {
  return Rational(static_cast<std::int64_t>(rng.below(1000003)), 1000003);
}

const GroupDescriptor& pick(Rng& rng) {
  static const GroupDescriptor t = thompson_T();
  static const GroupDescriptor t23 = stein_thompson_23();
  return rng.coin() ? t : t23;
}

PLCircleMap conjugate(const PLCircleMap& f, const PLCircleMap& h) {
  return compose(compose(invert(h), f), h);
}

bool same_rotation(const RotationResult& a, const RotationResult& b, std::ostream& why) {
  const auto* ra = std::get_if<RationalRotation>(&a);
  const auto* rb = std::get_if<RationalRotation>(&b);
  if (ra && rb) {
    if (ra->value() == rb->value() && ra->q == rb->q) return true;
    why << " rational values differ: " << ra->value() << " vs " << rb->value();
    return false;
  }
  if (ra || rb) {
    why << " one result rational, the other certified";
    return false;
  }
  const auto& ca = std::get<CertifiedNonrational>(a).bracket;
  const auto& cb = std::get<CertifiedNonrational>(b).bracket;
  // Offset-0 lifts of conjugate maps may differ by a translation.
  for (std::int64_t m = -3; m <= 3; ++m) {
    DisplacementInterval shifted{cb.lo + Rational(m), cb.hi + Rational(m)};
    if (ca.intersects(shifted)) return true;
  }
  why << " brackets disjoint mod 1: " << ca << " vs " << cb;
  return false;
}

bool is_reduced(const AmalgamWord& w) {
  const auto& s = w.syllables();
  MonsterFactors factors(*w.context());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i + 1 < s.size() && s[i].factor == s[i + 1].factor) return false;
    if (s[i].element.is_identity()) return false;
    if (s.size() > 1 && factors.edge_exponent(s[i].factor, s[i].element)) return false;
  }
  return true;
}

bool same_syllables(const AmalgamWord& a, const AmalgamWord& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.syllables()[i].factor != b.syllables()[i].factor) return false;
    if (!(a.syllables()[i].element == b.syllables()[i].element)) return false;
  }
  return true;
}

SuiteReport arith_suite(const VerifyOptions& o) {
  const std::size_t n = o.samples;
  const GroupDescriptor t23 = stein_thompson_23();
  SuiteReport r{"arith", {}};
  r.properties.push_back(check("associativity", n, o.seed, [&](std::size_t, Rng& rng, std::ostream& why) {
    PLLineMap f = random_lift(t23, rng), g = random_lift(t23, rng), h = random_lift(t23, rng);
    bool ok = compose(compose(f, g), h) == compose(f, compose(g, h));
    if (!ok) why << " f=" << f << " g=" << g << " h=" << h;
    return ok;
  }));
  r.properties.push_back(check("inverse", n, o.seed, [&](std::size_t, Rng& rng, std::ostream& why) {
    PLLineMap f = random_lift(pick(rng), rng);
    bool ok = compose(f, invert(f)).is_identity() && compose(invert(f), f).is_identity();
    if (!ok) why << " f=" << f;
    return ok;
  }));
  r.properties.push_back(check("power-additivity", n, o.seed, [&](std::size_t, Rng& rng, std::ostream& why) {
    PLLineMap f = random_lift(t23, rng);
    std::int64_t a = rng.range(-4, 4), b = rng.range(-4, 4);
    bool ok = power(f, a + b) == compose(power(f, a), power(f, b));
    if (!ok) why << " f=" << f << " m=" << a << " n=" << b;
    return ok;
  }));
  r.properties.push_back(check("breakpoint-subadditivity", n, o.seed, [&](std::size_t, Rng& rng, std::ostream& why) {
    PLCircleMap f = random_member(t23, rng), g = random_member(t23, rng);
    bool ok = compose(f, g).size() <= f.size() + g.size();
    if (!ok) why << " f=" << f << " g=" << g;
    return ok;
  }));
  r.properties.push_back(check("closure", n, o.seed, [&](std::size_t, Rng& rng, std::ostream& why) {
    const GroupDescriptor& d = pick(rng);
    PLCircleMap f = random_member(d, rng), g = random_member(d, rng);
    bool ok = is_member(compose(f, g), d).member && is_member(invert(f), d).member;
    if (!ok) why << " D=" << d.to_string() << " f=" << f << " g=" << g;
    return ok;
  }));
  r.properties.push_back(check("lift-coherence", n, o.seed, [&](std::size_t, Rng& rng, std::ostream& why) {
    PLCircleMap f = random_member(t23, rng);
    std::int64_t k = rng.range(-3, 3);
    PLLineMap lf = lift(f, k);
    Rational x = random_unit(rng) + Rational(rng.range(-5, 5));
    bool ok = project(lf) == f && lf.offset() == k && lift(project(lf), lf.offset()) == lf &&
              lf.evaluate(x + Rational(1)) == lf.evaluate(x) + Rational(1);
    if (!ok) why << " f=" << f << " k=" << k << " x=" << x;
    return ok;
  }));
  r.properties.push_back(check("displacement-containment", n, o.seed, [&](std::size_t, Rng& rng, std::ostream& why) {
    PLLineMap f = random_lift(t23, rng);
    Rational x = random_unit(rng) + Rational(rng.range(-5, 5));
    DisplacementInterval d = displacement_interval(f);
    bool ok = d.contains(f.evaluate(x) - x);
    if (!ok) why << " f=" << f << " x=" << x << " interval=" << d;
    return ok;
  }));
  r.properties.push_back(check("monotonicity", n, o.seed, [&](std::size_t, Rng& rng, std::ostream& why) {
    PLLineMap f = random_lift(t23, rng);
    std::vector<Rational> xs;
    for (int i = 0; i < 8; ++i) xs.push_back(random_unit(rng));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (std::size_t i = 1; i < xs.size(); ++i) {
      if (!(f.evaluate(xs[i - 1]) < f.evaluate(xs[i]))) {
        why << " f=" << f << " at " << xs[i - 1] << ", " << xs[i];
        return false;
      }
    }
    return true;
  }));
  r.properties.push_back(check("document-round-trip", n, o.seed, [&](std::size_t, Rng& rng, std::ostream& why) {
    PLLineMap f = random_lift(t23, rng);
    std::string text = format_map(f, t23);
    ParsedMap back = parse_map(text);
    bool ok = back.is_line() && back.line() == f && format_map(back) == text;
    if (!ok) why << " f=" << f;
    return ok;
  }));
  return r;
}

SuiteReport centrality_suite(const VerifyOptions& o) {
  SuiteReport r{"centrality", {}};
  const PLLineMap z = center_generator_z();
  r.properties.push_back(check("z-central", o.samples, o.seed, [&](std::size_t, Rng& rng, std::ostream& why) {
    PLLineMap f = random_lift(pick(rng), rng);
    bool ok = compose(z, f) == compose(f, z);
    if (!ok) why << " f=" << f;
    return ok;
  }));
  r.properties.push_back(check("z-quotient", 21, o.seed, [&](std::size_t i, Rng&, std::ostream& why) {
    std::int64_t k = static_cast<std::int64_t>(i) - 10;
    PLLineMap zk = power(z, k);
    auto rot = rotation_number(project(zk), 1, 1);
    const auto* rr = std::get_if<RationalRotation>(&rot);
    bool ok = project(zk).is_identity() && rr && rr->value().is_zero() &&
              translation_bracket(zk, 1) == DisplacementInterval{Rational(k), Rational(k)} &&
              is_translation(zk) == k;
    if (!ok) why << " k=" << k;
    return ok;
  }));
  return r;
}

SuiteReport rot_suite(const VerifyOptions& o) {
  SuiteReport r{"rot-invariance", {}};
  const GroupDescriptor t23 = stein_thompson_23();
  const std::size_t n = std::min<std::size_t>(o.samples, 200);
  r.properties.push_back(check("rational-detection", n, o.seed, [&](std::size_t, Rng& rng, std::ostream& why) {
    std::int64_t q = rng.range(1, 40);
    std::int64_t p = rng.range(0, q - 1);
    PLCircleMap f = rotation_map(Rational(p, q));
    if (rng.coin()) f = conjugate(f, random_member(t23, rng));
    auto rot = rotation_number(f, 40, 40);
    const auto* rr = std::get_if<RationalRotation>(&rot);
    if (!rr || rr->value() != Rational(p, q)) {
      why << " expected " << Rational(p, q) << " for f=" << f;
      return false;
    }
    PLLineMap iterate = power(lift(f, 0), rr->q);
    bool ok = iterate.evaluate(rr->witness) == rr->witness + Rational(rr->p);
    if (!ok) why << " witness " << rr->witness << " fails for f=" << f;
    return ok;
  }));
  r.properties.push_back(check("conjugacy-invariance", n, o.seed, [&](std::size_t i, Rng& rng, std::ostream& why) {
    PLCircleMap f;
    switch (i % 3) {
      case 0: {
        std::int64_t q = rng.range(1, 12);
        f = rotation_map(Rational(rng.range(0, q - 1), q));
        break;
      }
      case 1: f = random_member(t23, rng); break;
      default: f = irrational_candidate_g0(); break;
    }
    PLCircleMap h = random_member(t23, rng);
    bool ok = same_rotation(rotation_number(f, 12, 24), rotation_number(conjugate(f, h), 12, 24), why);
    if (!ok) why << " f=" << f << " h=" << h;
    return ok;
  }));
  r.properties.push_back(check("bracket-nesting", n, o.seed, [&](std::size_t i, Rng& rng, std::ostream& why) {
    PLLineMap f = i % 4 == 0 ? g0_lift() : random_lift(t23, rng);
    std::int64_t m = rng.range(1, 8);
    DisplacementInterval coarse = translation_bracket(f, m);
    DisplacementInterval fine = translation_bracket(f, 2 * m);
    bool ok = coarse.lo <= fine.lo && fine.hi <= coarse.hi && coarse.width() <= Rational(1, m) &&
              fine.width() <= Rational(1, 2 * m);
    if (!ok) why << " f=" << f << " n=" << m << " coarse=" << coarse << " fine=" << fine;
    return ok;
  }));
  r.properties.push_back(check("power-brackets", n, o.seed, [&](std::size_t, Rng& rng, std::ostream& why) {
    PLLineMap f = random_lift(t23, rng);
    std::int64_t m = rng.range(1, 6);
    DisplacementInterval a = translation_bracket(power(f, m), 1);
    DisplacementInterval b = translation_bracket(f, m);
    bool ok = a.lo == b.lo * Rational(m) && a.hi == b.hi * Rational(m);
    if (!ok) why << " f=" << f << " n=" << m;
    return ok;
  }));
  return r;
}

SuiteReport tuple_suite(const VerifyOptions& o) {
  SuiteReport r{"tuple", {}};
  const GroupDescriptor t = thompson_T();
  const GroupDescriptor t23 = stein_thompson_23();
  r.properties.push_back(check("tuple-map", o.samples, o.seed, [&](std::size_t i, Rng& rng, std::ostream& why) {
    const GroupDescriptor& d = i % 2 == 0 ? t : t23;
    std::size_t p = 1 + rng.below(6);
    int q = static_cast<int>(rng.range(1, 4));
    auto [x, y] = random_tuple_pair(d, rng, p, q);
    TupleMapResult res = tuple_map_detailed(x, y, d);
    if (!is_member(res.map, d).member) {
      why << " output not in " << d.to_string() << ": " << res.map;
      return false;
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (res.map.evaluate(x[j]) != y[j]) {
        why << " x[" << j << "]=" << x[j] << " maps to " << res.map.evaluate(x[j]) << " not " << y[j];
        return false;
      }
    }
    BigInt grid = 1;
    for (int k = 0; k < res.refined_depth; ++k) grid *= d.lambda();
    for (const Rational& b : res.map.breakpoints()) {
      if (!(b * Rational(grid)).is_integer()) {
        why << " breakpoint " << b << " off the depth-" << res.refined_depth << " grid";
        return false;
      }
    }
    return true;
  }));
  r.properties.push_back(check("tuple-errors", 3, o.seed, [&](std::size_t i, Rng&, std::ostream& why) {
    std::vector<Rational> x, y;
    switch (i) {
      case 0: x = {Rational(0), Rational(1, 2)}; y = {Rational(0)}; break;
      case 1: x = {Rational(1, 3)}; y = {Rational(0)}; break;
      default:
        x = {Rational(0), Rational(1, 2), Rational(1, 4)};
        y = {Rational(0), Rational(1, 4), Rational(1, 2)};
        break;
    }
    try {
      tuple_map(x, y, t);
    } catch (const TupleMapError&) {
      return true;
    }
    why << " invalid input accepted";
    return false;
  }));
  return r;
}

SuiteReport amalgam_suite(const VerifyOptions& o) {
  SuiteReport r{"amalgam-oracle", {}};
  auto ctx = AmalgamContext::monster();
  const std::size_t n = std::min<std::size_t>(o.samples, 500);
  r.properties.push_back(check("finite-oracle", 1, o.seed, [&](std::size_t, Rng&, std::ostream& why) {
    FiniteOracleReport rep = finite_oracle_check(6);
    if (!rep.mismatches.empty()) why << " " << rep.mismatches.size() << " mismatches, first " << rep.mismatches.front();
    return rep.mismatches.empty() && rep.words_checked == 5461;
  }));
  r.properties.push_back(check("relator-triviality", 11, o.seed, [&](std::size_t i, Rng&, std::ostream& why) {
    std::int64_t k = static_cast<std::int64_t>(i) - 5;
    bool ok = is_trivial(relator_word(ctx, k)) && is_trivial(invert_word(relator_word(ctx, k)));
    if (!ok) why << " k=" << k;
    return ok;
  }));
  r.properties.push_back(check("planted-words", n, o.seed, [&](std::size_t, Rng& rng, std::ostream& why) {
    AmalgamWord w = planted_trivial_word(ctx, rng, 12);
    if (!is_trivial(w)) {
      why << " planted word classified nontrivial:\n" << format_word(w);
      return false;
    }
    AmalgamWord p = perturbed_word(w, rng);
    if (is_trivial(p)) {
      why << " perturbed word classified trivial:\n" << format_word(p);
      return false;
    }
    return true;
  }));
  r.properties.push_back(check("inverse-law", n, o.seed, [&](std::size_t, Rng& rng, std::ostream& why) {
    AmalgamWord u = random_word(ctx, rng.below(7), rng);
    bool ok = is_trivial(multiply(u, invert_word(u)));
    if (!ok) why << "\n" << format_word(u);
    return ok;
  }));
  r.properties.push_back(check("homomorphism", n, o.seed, [&](std::size_t, Rng& rng, std::ostream& why) {
    AmalgamWord u = random_word(ctx, rng.below(6), rng);
    AmalgamWord v = random_word(ctx, rng.below(6), rng);
    bool ok = project_to_G1(multiply(u, v)) == compose(project_to_G1(u), project_to_G1(v));
    if (!ok) why << "\n" << format_word(u) << format_word(v);
    return ok;
  }));
  r.properties.push_back(check("reduction-soundness", n, o.seed, [&](std::size_t, Rng& rng, std::ostream& why) {
    AmalgamWord w = rng.coin() ? random_word(ctx, rng.below(8), rng) : planted_trivial_word(ctx, rng, 12);
    AmalgamWord once = reduce(w);
    bool ok = project_to_G1(once) == project_to_G1(w) && is_reduced(once) &&
              same_syllables(reduce(once), once);
    if (!ok) why << "\n" << format_word(w);
    return ok;
  }));
  r.properties.push_back(check("associativity", std::min<std::size_t>(n, 100), o.seed,
                               [&](std::size_t, Rng& rng, std::ostream& why) {
    AmalgamWord a = random_word(ctx, rng.below(4), rng);
    AmalgamWord b = random_word(ctx, rng.below(4), rng);
    AmalgamWord c = random_word(ctx, rng.below(4), rng);
    bool ok = equals(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
    if (!ok) why << "\n" << format_word(a) << format_word(b) << format_word(c);
    return ok;
  }));
  return r;
}

SuiteReport evidence_suite(const VerifyOptions& o) {
  SuiteReport r{"monster-evidence", {}};
  MonsterEvidenceReport rep = monster_evidence_report(AmalgamContext::monster(), o);
  for (const EvidenceSection& s : rep.sections) {
    PropertyResult p{s.name, s.passed, 1, {}};
    if (!s.passed) {
      for (const std::string& d : s.details) p.counterexample += " " + d;
    }
    r.properties.push_back(std::move(p));
  }
  return r;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.passed; });
}

bool MonsterEvidenceReport::passed() const {
  return std::all_of(sections.begin(), sections.end(),
                     [](const EvidenceSection& s) { return s.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"arith", "centrality", "rot-invariance",
                                              "tuple", "amalgam-oracle", "monster-evidence"};
  return names;
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& options) {
  if (name == "arith") return arith_suite(options);
  if (name == "centrality") return centrality_suite(options);
  if (name == "rot-invariance") return rot_suite(options);
  if (name == "tuple") return tuple_suite(options);
  if (name == "amalgam-oracle") return amalgam_suite(options);
  if (name == "monster-evidence") return evidence_suite(options);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

MonsterEvidenceReport monster_evidence_report(const std::shared_ptr<const AmalgamContext>& ctx,
                                              const VerifyOptions& options) {
  MonsterEvidenceReport rep;
  rep.disclaimer = kMonsterDisclaimer;
  const PLLineMap z = center_generator_z();
  Rng rng(options.seed);

  {
    EvidenceSection s{"center-rotation-zero", true, {}};
    auto rot = rotation_number(project(z), 1, 1);
    const auto* rr = std::get_if<RationalRotation>(&rot);
    s.passed = rr && rr->value().is_zero() && project(z).is_identity() &&
               translation_bracket(z, 1) == DisplacementInterval{Rational(1), Rational(1)};
    s.details.push_back("z projects to the identity of G1; rot = 0 exactly; translation number of z = 1");
    rep.sections.push_back(std::move(s));
  }
  {
    EvidenceSection s{"edge-rotation-nonrational", true, {}};
    auto rot = rotation_number(project(ctx->edge()), kDefaultMaxDenominator, kDefaultDepth);
    if (const auto* c = std::get_if<CertifiedNonrational>(&rot)) {
      s.passed = c->bracket.width() <= Rational(1, kDefaultDepth) && !c->bracket.contains(Rational(0));
      s.details.push_back("no rational rotation number with denominator <= " +
                          std::to_string(c->max_denominator));
      s.details.push_back("translation number in [" + c->bracket.lo.to_decimal(12) + ", " +
                          c->bracket.hi.to_decimal(12) + "] (exact bracket at depth " +
                          std::to_string(c->depth) + ")");
      if (project(ctx->edge()) == irrational_candidate_g0()) {
        Rational log_ratio = Rational::from_double(std::log(2.0) / std::log(3.0));
        s.passed = s.passed && c->bracket.contains(log_ratio);
        s.details.push_back("bracket contains log 2 / log 3 = 0.630929753571...");
      }
    } else {
      s.passed = false;
      s.details.push_back("edge element has rational rotation number " +
                          std::get<RationalRotation>(rot).value().to_string());
    }
    rep.sections.push_back(std::move(s));
  }
  {
    EvidenceSection s{"center-commutes", true, {}};
    std::size_t samples = std::max<std::size_t>(20, options.samples / 10);
    for (std::size_t i = 0; i < samples && s.passed; ++i) {
      Factor side = i % 2 == 0 ? Factor::left : Factor::right;
      PLLineMap f = random_lift(ctx->descriptor(side), rng);
      if (!(compose(z, f) == compose(f, z))) {
        s.passed = false;
        s.details.push_back("z fails to commute with " + std::string(side == Factor::left ? "G1" : "G2") +
                            " element");
      }
    }
    s.passed = s.passed && compose(z, ctx->edge()) == compose(ctx->edge(), z);
    s.details.push_back("z commutes with " + std::to_string(samples) + " sampled lifts and with g");
    rep.sections.push_back(std::move(s));
  }
  {
    EvidenceSection s{"relator-trivial", true, {}};
    for (std::int64_t k = -5; k <= 5; ++k) {
      AmalgamWord w = relator_word(ctx, k);
      if (!is_trivial(w) || !project_to_G1(w).is_identity()) {
        s.passed = false;
        s.details.push_back("z^" + std::to_string(k) + " g^" + std::to_string(-k) + " not trivial");
      }
    }
    s.details.push_back("z^k g^-k reduces to the empty word for |k| <= 5");
    rep.sections.push_back(std::move(s));
  }
  {
    EvidenceSection s{"quotient-homomorphism", true, {}};
    const std::size_t pairs = 50;
    for (std::size_t i = 0; i < pairs && s.passed; ++i) {
      AmalgamWord u = random_word(ctx, rng.below(6), rng);
      AmalgamWord v = random_word(ctx, rng.below(6), rng);
      if (!(project_to_G1(multiply(u, v)) == compose(project_to_G1(u), project_to_G1(v)))) {
        s.passed = false;
        s.details.push_back("project_to_G1 not multiplicative on pair " + std::to_string(i));
      }
    }
    s.details.push_back("M -> G1 is multiplicative on " + std::to_string(pairs) +
                        " random pairs and kills z g^-1");
    rep.sections.push_back(std::move(s));
  }
  return rep;
}

}  // namespace plm
