#include "plmonster/amalgam.hpp"

#include <algorithm>
#include <sstream>

#include "plmonster/rotation.hpp"

namespace plm {

namespace {

constexpr std::int64_t kEdgeBracketDepth = 64;

std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

PLLineMap pool_element(const AmalgamContext& ctx, Factor side, Rng& rng) {
  const GroupDescriptor& d = ctx.descriptor(side);
  while (true) {
    std::uint64_t kind = rng.below(side == Factor::right ? 3 : 2);
    PLLineMap out;
    if (kind == 2) {
      std::int64_t k = rng.range(1, 2) * (rng.coin() ? 1 : -1);
      out = power(ctx.edge(), k);
    } else {
      PLCircleMap base;
      if (kind == 0) {
        base = random_member(d, rng, 3, 2);
      } else {
        BigInt den = d.lambda() * d.lambda();
        BigInt j = 1 + BigInt(static_cast<unsigned long>(rng.below(den.get_ui() - 1)));
        base = rotation_map(Rational(j, den));
      }
      out = lift(base, rng.range(-1, 1));
    }
    if (!out.is_identity()) return out;
  }
}

}  // namespace

std::shared_ptr<const AmalgamContext> AmalgamContext::create(GroupDescriptor g1,
                                                             GroupDescriptor g2,
                                                             PLLineMap edge) {
  if (!is_member(edge.base(), g2).member) {
    throw ContextError("edge element is not in the lift of " + g2.to_string());
  }
  bool separated = false;
  for (std::int64_t n = 1; n <= kEdgeBracketDepth && !separated; n *= 2) {
    separated = !translation_bracket(edge, n).contains(Rational(0));
  }
  if (!separated) {
    throw ContextError("translation bracket of the edge element contains 0 up to depth " +
                       std::to_string(kEdgeBracketDepth));
  }
  RotationResult rot = rotation_number(edge.base(), kDefaultMaxDenominator, kDefaultMaxDenominator);
  if (const auto* r = std::get_if<RationalRotation>(&rot)) {
    throw ContextError("edge element has rational rotation number " + r->value().to_string());
  }
  return std::shared_ptr<const AmalgamContext>(
      new AmalgamContext(std::move(g1), std::move(g2), std::move(edge)));
}

std::shared_ptr<const AmalgamContext> AmalgamContext::monster() {
  static const std::shared_ptr<const AmalgamContext> ctx =
      create(thompson_T(), stein_thompson_23(), g0_lift());
  return ctx;
}

std::optional<std::int64_t> MonsterFactors::edge_exponent(Factor side, const PLLineMap& a) const {
  if (side == Factor::left) return is_translation(a);
  return is_power_of(a, ctx_->edge());
}

PLLineMap MonsterFactors::edge_power(Factor side, std::int64_t k) const {
  if (side == Factor::left) return translation(k);
  return power(ctx_->edge(), k);
}

AmalgamWord word_from_syllables(std::vector<MonsterSyllable> syllables,
                                std::shared_ptr<const AmalgamContext> ctx) {
  if (!ctx) throw ContextError("word without context");
  for (std::size_t i = 0; i < syllables.size(); ++i) {
    const GroupDescriptor& d = ctx->descriptor(syllables[i].factor);
    MembershipReport report = is_member(syllables[i].element.base(), d);
    if (!report.member) {
      const Violation& v = report.violations.front();
      throw WordError("syllable " + std::to_string(i) + " is not in the lift of " +
                          d.to_string() + ": " + to_string(v.kind) + " " + v.value.to_string(),
                      i);
    }
  }
  return AmalgamWord(std::move(ctx), std::move(syllables));
}

AmalgamWord reduce(const AmalgamWord& w) {
  MonsterFactors factors(*w.context());
  return AmalgamWord(w.context(), reduce_syllables(factors, w.syllables()));
}

bool is_trivial(const AmalgamWord& w) {
  AmalgamWord r = reduce(w);
  return r.empty() || (r.size() == 1 && r.syllables().front().element.is_identity());
}

AmalgamWord multiply(const AmalgamWord& u, const AmalgamWord& v) {
  if (!(*u.context() == *v.context())) throw ContextError("words belong to different amalgams");
  std::vector<MonsterSyllable> s = u.syllables();
  s.insert(s.end(), v.syllables().begin(), v.syllables().end());
  return reduce(word_from_syllables(std::move(s), u.context()));
}

AmalgamWord invert_word(const AmalgamWord& u) {
  std::vector<MonsterSyllable> s;
  s.reserve(u.size());
  for (auto it = u.syllables().rbegin(); it != u.syllables().rend(); ++it) {
    s.push_back({it->factor, invert(it->element)});
  }
  return reduce(word_from_syllables(std::move(s), u.context()));
}

bool equals(const AmalgamWord& u, const AmalgamWord& v) { return is_trivial(multiply(u, invert_word(v))); }

PLCircleMap project_to_G1(const AmalgamWord& w) {
  PLCircleMap out;
  for (const MonsterSyllable& s : w.syllables()) {
    if (s.factor == Factor::left) out = compose(out, project(s.element));
  }
  return out;
}

AmalgamWord relator_word(std::shared_ptr<const AmalgamContext> ctx, std::int64_t k) {
  PLLineMap g_inv = power(ctx->edge(), -k);
  return word_from_syllables({{Factor::left, translation(k)}, {Factor::right, std::move(g_inv)}},
                             std::move(ctx));
}

AmalgamWord random_word(std::shared_ptr<const AmalgamContext> ctx, std::size_t length, Rng& rng) {
  std::vector<MonsterSyllable> s;
  Factor side = rng.coin() ? Factor::left : Factor::right;
  for (std::size_t i = 0; i < length; ++i) {
    s.push_back({side, pool_element(*ctx, side, rng)});
    side = opposite(side);
  }
  return word_from_syllables(std::move(s), std::move(ctx));
}

AmalgamWord random_word(std::shared_ptr<const AmalgamContext> ctx, std::size_t length,
                        std::uint64_t seed) {
  Rng rng(seed);
  return random_word(std::move(ctx), length, rng);
}

AmalgamWord planted_trivial_word(std::shared_ptr<const AmalgamContext> ctx, Rng& rng,
                                 std::size_t max_syllables) {
  std::vector<MonsterSyllable> word;
  std::size_t insertions = 1 + rng.below(2);
  for (std::size_t t = 0; t < insertions; ++t) {
    if (word.size() + 2 > max_syllables) break;
    std::size_t max_conj = std::min<std::size_t>((max_syllables - word.size() - 2) / 2, 4);
    std::size_t len = rng.below(max_conj + 1);
    AmalgamWord u = random_word(ctx, len, rng);
    std::int64_t k = rng.range(1, 2) * (rng.coin() ? 1 : -1);
    std::vector<MonsterSyllable> relator{{Factor::left, translation(k)},
                                         {Factor::right, power(ctx->edge(), -k)}};
    if (rng.coin()) std::swap(relator[0], relator[1]);
    std::vector<MonsterSyllable> conj = u.syllables();
    conj.insert(conj.end(), relator.begin(), relator.end());
    for (auto it = u.syllables().rbegin(); it != u.syllables().rend(); ++it) {
      conj.push_back({it->factor, invert(it->element)});
    }
    auto pos = static_cast<std::ptrdiff_t>(rng.below(word.size() + 1));
    word.insert(word.begin() + pos, conj.begin(), conj.end());
  }
  return word_from_syllables(std::move(word), std::move(ctx));
}

AmalgamWord perturbed_word(const AmalgamWord& w, Rng& rng) {
  std::vector<MonsterSyllable> s = w.syllables();
  std::size_t i = s.empty() ? 0 : rng.below(s.size());
  Factor side = s.empty() ? Factor::left : s[i].factor;
  PLCircleMap t;
  do {
    t = random_member(w.context()->descriptor(side), rng, 4, 2);
  } while (t.is_identity());
  if (s.empty()) {
    s.push_back({side, lift(t, 0)});
  } else {
    s[i].element = compose(s[i].element, lift(t, 0));
  }
  return word_from_syllables(std::move(s), w.context());
}

// ---------------------------------------------------------------------------

std::int64_t FiniteFactors::multiply(Factor side, std::int64_t a, std::int64_t b) const {
  return mod(a + b, side == Factor::left ? 4 : 6);
}

bool FiniteFactors::is_identity(Factor side, std::int64_t a) const {
  return mod(a, side == Factor::left ? 4 : 6) == 0;
}

std::optional<std::int64_t> FiniteFactors::edge_exponent(Factor side, std::int64_t a) const {
  std::int64_t step = side == Factor::left ? 2 : 3;
  std::int64_t r = mod(a, side == Factor::left ? 4 : 6);
  if (r % step != 0) return std::nullopt;
  return r / step;
}

std::int64_t FiniteFactors::edge_power(Factor side, std::int64_t k) const {
  return side == Factor::left ? mod(2 * k, 4) : mod(3 * k, 6);
}

Matrix2 matrix_of(FiniteLetter letter) {
  switch (letter) {
    case FiniteLetter::S: return {0, -1, 1, 0};
    case FiniteLetter::S_inv: return {0, 1, -1, 0};
    case FiniteLetter::R: return {0, -1, 1, 1};
    case FiniteLetter::R_inv: return {1, 1, -1, 0};
  }
  return {1, 0, 0, 1};
}

Matrix2 multiply(const Matrix2& x, const Matrix2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

Matrix2 matrix_product(const std::vector<FiniteLetter>& word) {
  Matrix2 out{1, 0, 0, 1};
  for (FiniteLetter l : word) out = multiply(out, matrix_of(l));
  return out;
}

bool finite_is_trivial(const std::vector<FiniteLetter>& word) {
  std::vector<Syllable<std::int64_t>> s;
  for (FiniteLetter l : word) {
    switch (l) {
      case FiniteLetter::S: s.push_back({Factor::left, 1}); break;
      case FiniteLetter::S_inv: s.push_back({Factor::left, 3}); break;
      case FiniteLetter::R: s.push_back({Factor::right, 1}); break;
      case FiniteLetter::R_inv: s.push_back({Factor::right, 5}); break;
    }
  }
  FiniteFactors factors;
  auto reduced = reduce_syllables(factors, std::move(s));
  return reduced.empty() ||
         (reduced.size() == 1 && factors.is_identity(reduced[0].factor, reduced[0].element));
}

FiniteOracleReport finite_oracle_check(int max_length) {
  if (max_length < 1) throw std::invalid_argument("max length must be >= 1");
  static constexpr const char* kNames[] = {"S", "s", "R", "r"};
  FiniteOracleReport report;
  const Matrix2 identity{1, 0, 0, 1};
  for (int len = 0; len <= max_length; ++len) {
    std::vector<int> digits(static_cast<std::size_t>(len), 0);
    while (true) {
      std::vector<FiniteLetter> word;
      for (int dgt : digits) word.push_back(static_cast<FiniteLetter>(dgt));
      bool by_reduction = finite_is_trivial(word);
      bool by_matrix = matrix_product(word) == identity;
      ++report.words_checked;
      if (by_matrix) ++report.trivial_words;
      if (by_reduction != by_matrix) {
        std::ostringstream os;
        for (int dgt : digits) os << kNames[dgt];
        os << ": reduction says " << (by_reduction ? "trivial" : "nontrivial")
           << ", matrices say " << (by_matrix ? "trivial" : "nontrivial");
        report.mismatches.push_back(os.str());
      }
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == 4) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  }
  return report;
}

}  // namespace plm
