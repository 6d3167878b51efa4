#pragma once

// Words in an amalgamated product A *_C B with C infinite cyclic (or, for
// validation, finite cyclic), and their reduction.
//
// The reduction engine is generic over a "factors" type that supplies the
// multiplication in each factor together with an oracle deciding membership
// in the edge subgroup. The PL amalgam M = G1bar *_{z = g} G2bar and the
// finite amalgam Z/4 *_{Z/2} Z/6 (isomorphic to SL(2,Z)) run through the same
// code.

#include <concepts>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "plmonster/pl_map.hpp"
#include "plmonster/random.hpp"
#include "plmonster/stein_thompson.hpp"

namespace plm {

enum class Factor { left, right };

inline Factor opposite(Factor f) { return f == Factor::left ? Factor::right : Factor::left; }

template <typename E>
struct Syllable {
  Factor factor;
  E element;
};

template <typename F>
concept AmalgamFactors =
    requires(const F& f, Factor side, const typename F::element_type& a, std::int64_t k) {
      { f.multiply(side, a, a) } -> std::convertible_to<typename F::element_type>;
      { f.is_identity(side, a) } -> std::convertible_to<bool>;
      { f.edge_exponent(side, a) } -> std::convertible_to<std::optional<std::int64_t>>;
      { f.edge_power(side, k) } -> std::convertible_to<typename F::element_type>;
    };

// Leftmost-first rewriting: merge adjacent syllables from the same factor,
// drop identities, and move an edge-subgroup syllable across to the other
// factor (where it merges with a neighbour). Every rewrite shortens the word
// or keeps its length while removing an identity, so this terminates. The
// result alternates factors and, unless it has a single syllable, has no
// syllable in the edge subgroup.
template <AmalgamFactors F>
std::vector<Syllable<typename F::element_type>> reduce_syllables(
    const F& factors, std::vector<Syllable<typename F::element_type>> word) {
  // known_outside[i]: syllable i has been checked and is not in the edge subgroup
  std::vector<char> known_outside(word.size(), 0);
  auto erase_at = [&](std::size_t i) {
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(i));
    known_outside.erase(known_outside.begin() + static_cast<std::ptrdiff_t>(i));
  };
  while (true) {
    bool changed = false;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (factors.is_identity(word[i].factor, word[i].element)) {
        erase_at(i);
        changed = true;
        break;
      }
      if (i + 1 < word.size() && word[i].factor == word[i + 1].factor) {
        word[i].element = factors.multiply(word[i].factor, word[i].element, word[i + 1].element);
        known_outside[i] = 0;
        erase_at(i + 1);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    if (word.size() < 2) break;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (known_outside[i]) continue;
      if (auto k = factors.edge_exponent(word[i].factor, word[i].element)) {
        Factor other = opposite(word[i].factor);
        word[i] = {other, factors.edge_power(other, *k)};
        changed = true;
        break;
      }
      known_outside[i] = 1;
    }
    if (!changed) break;
  }
  return word;
}

// ---------------------------------------------------------------------------
// The PL amalgam.

class ContextError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two Stein-Thompson descriptors and the edge element g of G2bar identified
// with the central unit translation z of G1bar.
class AmalgamContext {
 public:
  // Rejects an edge element that is not in G2bar, whose translation bracket
  // cannot be separated from 0 by depth 64, or whose rotation number is
  // rational with denominator <= 50. Throws ContextError.
  static std::shared_ptr<const AmalgamContext> create(GroupDescriptor g1, GroupDescriptor g2,
                                                      PLLineMap edge);

  // T *_{z = g0bar} T_{2,3}.
  static std::shared_ptr<const AmalgamContext> monster();

  const GroupDescriptor& g1() const { return g1_; }
  const GroupDescriptor& g2() const { return g2_; }
  const GroupDescriptor& descriptor(Factor f) const { return f == Factor::left ? g1_ : g2_; }
  const PLLineMap& edge() const { return edge_; }

  friend bool operator==(const AmalgamContext& a, const AmalgamContext& b) {
    return a.g1_ == b.g1_ && a.g2_ == b.g2_ && a.edge_ == b.edge_;
  }

 private:
  AmalgamContext(GroupDescriptor g1, GroupDescriptor g2, PLLineMap edge)
      : g1_(std::move(g1)), g2_(std::move(g2)), edge_(std::move(edge)) {}

  GroupDescriptor g1_;
  GroupDescriptor g2_;
  PLLineMap edge_;
};

// Factor arithmetic for M: left edge membership is centrality (translations),
// right edge membership is being a power of the edge element.
class MonsterFactors {
 public:
  using element_type = PLLineMap;

  explicit MonsterFactors(const AmalgamContext& ctx) : ctx_(&ctx) {}

  PLLineMap multiply(Factor, const PLLineMap& a, const PLLineMap& b) const { return compose(a, b); }
  bool is_identity(Factor, const PLLineMap& a) const { return a.is_identity(); }
  std::optional<std::int64_t> edge_exponent(Factor side, const PLLineMap& a) const;
  PLLineMap edge_power(Factor side, std::int64_t k) const;

 private:
  const AmalgamContext* ctx_;
};

using MonsterSyllable = Syllable<PLLineMap>;

class WordError : public std::invalid_argument {
 public:
  WordError(const std::string& what, std::size_t index)
      : std::invalid_argument(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// An element of M as a product of syllables, read left to right.
class AmalgamWord {
 public:
  const std::shared_ptr<const AmalgamContext>& context() const { return ctx_; }
  const std::vector<MonsterSyllable>& syllables() const { return syllables_; }
  std::size_t size() const { return syllables_.size(); }
  bool empty() const { return syllables_.empty(); }

 private:
  friend AmalgamWord word_from_syllables(std::vector<MonsterSyllable>,
                                         std::shared_ptr<const AmalgamContext>);
  friend AmalgamWord reduce(const AmalgamWord&);

  AmalgamWord(std::shared_ptr<const AmalgamContext> ctx, std::vector<MonsterSyllable> s)
      : ctx_(std::move(ctx)), syllables_(std::move(s)) {}

  std::shared_ptr<const AmalgamContext> ctx_;
  std::vector<MonsterSyllable> syllables_;
};

// Validates factor membership of every syllable; throws WordError carrying
// the index of the first offending syllable.
AmalgamWord word_from_syllables(std::vector<MonsterSyllable> syllables,
                                std::shared_ptr<const AmalgamContext> ctx);

AmalgamWord reduce(const AmalgamWord& w);
bool is_trivial(const AmalgamWord& w);

// Concatenation (resp. reversed inverses) followed by reduction. Throws
// ContextError when the words live in different amalgams.
AmalgamWord multiply(const AmalgamWord& u, const AmalgamWord& v);
AmalgamWord invert_word(const AmalgamWord& u);
bool equals(const AmalgamWord& u, const AmalgamWord& v);

// The homomorphism M -> G1 killing G2bar: left syllables project to their
// circle maps, right syllables to the identity.
PLCircleMap project_to_G1(const AmalgamWord& w);

// z^k g^-k.
AmalgamWord relator_word(std::shared_ptr<const AmalgamContext> ctx, std::int64_t k = 1);

// Alternating word of the given length. Each syllable is drawn from a pool:
// a tuple_map element of the factor's group (up to 3 points, grid depth up
// to 2), a torsion rotation j/lambda^2, or (right factor only) g^k with
// 1 <= |k| <= 2; the first two are lifted with offset in {-1, 0, 1}.
AmalgamWord random_word(std::shared_ptr<const AmalgamContext> ctx, std::size_t length, Rng& rng);
AmalgamWord random_word(std::shared_ptr<const AmalgamContext> ctx, std::size_t length,
                        std::uint64_t seed);

// Empty word with one or two conjugates u (z^k g^-k) u^-1 inserted at random
// positions, at most max_syllables long. Unreduced.
AmalgamWord planted_trivial_word(std::shared_ptr<const AmalgamContext> ctx, Rng& rng,
                                 std::size_t max_syllables = 12);

// Multiplies one random syllable by a nontrivial tuple_map element of its
// factor. Applied to a trivial word this yields a conjugate of that element,
// hence a nontrivial word.
AmalgamWord perturbed_word(const AmalgamWord& w, Rng& rng);

// ---------------------------------------------------------------------------
// Finite validation instance Z/4 *_{Z/2} Z/6 with S of order 4 on the left,
// R of order 6 on the right and S^2 = R^3.

class FiniteFactors {
 public:
  using element_type = std::int64_t;  // exponent of S (mod 4) or R (mod 6)

  std::int64_t multiply(Factor side, std::int64_t a, std::int64_t b) const;
  bool is_identity(Factor side, std::int64_t a) const;
  std::optional<std::int64_t> edge_exponent(Factor side, std::int64_t a) const;
  std::int64_t edge_power(Factor side, std::int64_t k) const;
};

// Letters: S, S^-1, R, R^-1.
enum class FiniteLetter { S, S_inv, R, R_inv };

struct Matrix2 {
  std::int64_t a, b, c, d;
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

Matrix2 matrix_of(FiniteLetter letter);
Matrix2 multiply(const Matrix2& x, const Matrix2& y);
Matrix2 matrix_product(const std::vector<FiniteLetter>& word);

// Triviality by reduction in the amalgam.
bool finite_is_trivial(const std::vector<FiniteLetter>& word);

struct FiniteOracleReport {
  std::size_t words_checked = 0;
  std::size_t trivial_words = 0;
  std::vector<std::string> mismatches;
};

// Compares reduction against the integer matrix representation
// S = [[0,-1],[1,0]], R = [[0,-1],[1,1]] on every word of length <= max_length.
FiniteOracleReport finite_oracle_check(int max_length);

}  // namespace plm
