#include "doctest.h"
#include "plmonster/amalgam.hpp"
#include "plmonster/rotation.hpp"

using namespace plm;

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

const PLLineMap z = center_generator_z();
const PLLineMap g = g0_lift();

AmalgamWord word(std::vector<MonsterSyllable> s) {
  return word_from_syllables(std::move(s), AmalgamContext::monster());
}

}  // namespace

TEST_CASE("word construction") {
  CHECK(word({}).empty());
  CHECK(word({{Factor::left, z}}).size() == 1);
  AmalgamWord rel = word({{Factor::left, z}, {Factor::right, invert(g)}});
  CHECK(rel.size() == 2);
  // g0 is not in T: slope 2/3
  try {
    word({{Factor::left, z}, {Factor::left, g}});
    FAIL("expected WordError");
  } catch (const WordError& e) {
    CHECK(e.index() == 1);
  }
}

TEST_CASE("reduction examples") {
  CHECK(reduce(word({{Factor::left, z}, {Factor::right, invert(g)}})).empty());
  CHECK(reduce(word({{Factor::right, g}, {Factor::right, invert(g)}})).empty());
  CHECK(reduce(word({{Factor::left, power(z, 2)},
                     {Factor::right, invert(g)},
                     {Factor::right, invert(g)}}))
            .empty());
  CHECK(is_trivial(word({})));
  CHECK_FALSE(is_trivial(word({{Factor::right, g}})));
  // z alone is the nontrivial edge element
  CHECK_FALSE(is_trivial(word({{Factor::left, z}})));
}

TEST_CASE("relator and its inverse are trivial") {
  auto ctx = AmalgamContext::monster();
  for (std::int64_t k = -5; k <= 5; ++k) {
    CHECK(is_trivial(relator_word(ctx, k)));
    CHECK(is_trivial(invert_word(relator_word(ctx, k))));
  }
  AmalgamWord inv = invert_word(relator_word(ctx, 1));
  CHECK(inv.empty());
}

TEST_CASE("multiply and invert") {
  auto ctx = AmalgamContext::monster();
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    AmalgamWord u = random_word(ctx, rng.below(6), rng);
    CHECK(equals(multiply(u, word({})), reduce(u)));
    CHECK(multiply(u, invert_word(u)).empty());
    CHECK(project_to_G1(invert_word(u)) == invert(project_to_G1(u)));
  }
}

TEST_CASE("conjugated relators are trivial, perturbations are not") {
  auto ctx = AmalgamContext::monster();
  Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    AmalgamWord w = planted_trivial_word(ctx, rng, 12);
    CHECK(w.size() <= 12);
    CHECK(is_trivial(w));
    AmalgamWord p = perturbed_word(w, rng);
    CHECK_FALSE(is_trivial(p));
  }
}

TEST_CASE("projection to G1") {
  auto ctx = AmalgamContext::monster();
  CHECK(project_to_G1(relator_word(ctx)).is_identity());
  Rng rng(23);
  PLCircleMap f = random_member(thompson_T(), rng), h = random_member(thompson_T(), rng);
  CHECK(project_to_G1(word({{Factor::left, lift(f, 2)}})) == f);
  CHECK(project_to_G1(word({{Factor::left, lift(f, 0)}, {Factor::right, g}, {Factor::left, lift(h, 0)}})) ==
        compose(f, h));
}

TEST_CASE("random words are deterministic and alternate") {
  auto ctx = AmalgamContext::monster();
  CHECK(random_word(ctx, 0, 42).empty());
  AmalgamWord a = random_word(ctx, 6, 42), b = random_word(ctx, 6, 42);
  REQUIRE(a.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(a.syllables()[i].element == b.syllables()[i].element);
    if (i) CHECK(a.syllables()[i].factor != a.syllables()[i - 1].factor);
  }
  CHECK_FALSE(is_trivial(a));
}

TEST_CASE("context validation") {
  CHECK_THROWS_AS(AmalgamContext::create(thompson_T(), stein_thompson_23(),
                                         lift(rotation_map(R(1, 2)), 0)),
                  ContextError);
  CHECK_THROWS_AS(AmalgamContext::create(thompson_T(), stein_thompson_23(), PLLineMap()),
                  ContextError);
  // not in the lift of T_{2,3}
  CHECK_THROWS_AS(AmalgamContext::create(thompson_T(), thompson_T(), g), ContextError);
  auto ctx = AmalgamContext::create(thompson_T(), stein_thompson_23(), power(g, 2));
  CHECK(ctx->edge() == power(g, 2));
  // In this amalgam z = g^2, so z g^-1 is not trivial but z g^-2 is.
  auto rel1 = word_from_syllables({{Factor::left, z}, {Factor::right, invert(g)}}, ctx);
  auto rel2 = word_from_syllables({{Factor::left, z}, {Factor::right, power(g, -2)}}, ctx);
  CHECK_FALSE(is_trivial(rel1));
  CHECK(is_trivial(rel2));
  CHECK_THROWS_AS(multiply(rel1, relator_word(AmalgamContext::monster())), ContextError);
}

TEST_CASE("finite amalgam matches SL(2,Z)") {
  using L = FiniteLetter;
  CHECK(finite_is_trivial({L::S, L::S, L::S, L::S}));
  CHECK(matrix_product({L::S, L::S, L::S, L::S}) == Matrix2{1, 0, 0, 1});
  CHECK(finite_is_trivial({L::S, L::S, L::R_inv, L::R_inv, L::R_inv}));
  CHECK(matrix_product({L::S, L::S, L::R_inv, L::R_inv, L::R_inv}) == Matrix2{1, 0, 0, 1});
  CHECK_FALSE(finite_is_trivial({L::S, L::R}));
  CHECK_FALSE(matrix_product({L::S, L::R}) == Matrix2{1, 0, 0, 1});
  CHECK(matrix_product({L::R, L::R, L::R}) == Matrix2{-1, 0, 0, -1});
  FiniteOracleReport rep = finite_oracle_check(6);
  CHECK(rep.words_checked == 5461);
  CHECK(rep.mismatches.empty());
  CHECK(rep.trivial_words > 0);
}
