#pragma once

// Certified rotation and translation numbers of PL circle maps.
//
// For a lift F, the displacement F^q(x) - x ranges over an exact interval
// [lo, hi] of width < 1 that contains q times the translation number. It
// contains an integer p iff F^q(x*) = x* + p for some x*, i.e. iff the
// rotation number is rational with denominator dividing q. Exhausting
// q = 1..Q therefore either finds a periodic-point witness or certifies that
// no rational value with denominator <= Q exists.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>

#include "plmonster/pl_map.hpp"
#include "plmonster/rational.hpp"

namespace plm {

inline constexpr std::int64_t kDefaultMaxDenominator = 50;
inline constexpr std::int64_t kDefaultDepth = 200;

struct RationalRotation {
  std::int64_t p = 0;  // translation number of the offset-0 lift is p/q
  std::int64_t q = 1;
  Rational witness;    // F^q(witness) = witness + p for F = lift(f, 0)

  Rational translation() const { return Rational(p, q); }
  // The rotation number in [0,1).
  Rational value() const { return translation().frac(); }
};

struct CertifiedNonrational {
  std::int64_t max_denominator = 0;
  std::int64_t depth = 0;
  // Contains the translation number of the offset-0 lift; width <= 1/depth.
  DisplacementInterval bracket;
};

using RotationResult = std::variant<RationalRotation, CertifiedNonrational>;

struct PeriodicWitness {
  std::int64_t p = 0;
  Rational point;
};

// [lo/n, hi/n] for [lo, hi] the displacement interval of F^n. Throws
// std::invalid_argument if n < 1.
DisplacementInterval translation_bracket(const PLLineMap& f, std::int64_t n);

// Some x* with F^q(x*) = x* + p, F = lift(f, 0), if one exists.
std::optional<PeriodicWitness> rational_rot_test(const PLCircleMap& f, std::int64_t q);

// Throws std::invalid_argument unless 1 <= max_denominator <= depth.
RotationResult rotation_number(const PLCircleMap& f,
                               std::int64_t max_denominator = kDefaultMaxDenominator,
                               std::int64_t depth = kDefaultDepth);

class ZeroBracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PowerSearchOptions {
  std::int64_t max_depth = 64;
  std::size_t max_candidates = 4;
};

// k with h = g^k exactly, if any. Candidates come from comparing translation
// brackets of g and h, refined by doubling the iterate depth; each candidate
// is then checked by exact equality. Throws ZeroBracketError if the bracket
// of g cannot be separated from 0 within options.max_depth.
std::optional<std::int64_t> is_power_of(const PLLineMap& h, const PLLineMap& g,
                                        const PowerSearchOptions& options = {});

// k with h = z^k, i.e. h is the unit translation by k.
std::optional<std::int64_t> is_translation(const PLLineMap& h);

}  // namespace plm
