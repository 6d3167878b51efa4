#include "plmonster/rotation.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace plm {

namespace {

// A point x* with F(x*) = x* + p, where p is the unique integer in the
// displacement interval of F (if any).
std::optional<PeriodicWitness> crossing(const PLLineMap& f) {
  DisplacementInterval d = displacement_interval(f);
  if (!d.contains_integer()) return std::nullopt;
  Rational p(d.lo.ceil());
  const auto& breaks = f.base().breakpoints();
  const std::size_t m = breaks.size();
  std::vector<Rational> disp;
  disp.reserve(m);
  for (const Rational& b : breaks) disp.push_back(f.evaluate(b) - b);
  for (std::size_t i = 0; i < m; ++i) {
    if (disp[i] == p) return PeriodicWitness{to_int64(p.floor()), breaks[i]};
    const Rational& d1 = i + 1 < m ? disp[i + 1] : disp[0];
    Rational x1 = i + 1 < m ? breaks[i + 1] : breaks[0] + Rational(1);
    if ((disp[i] < p) != (d1 < p) && d1 != p) {
      Rational x = breaks[i] + (p - disp[i]) * (x1 - breaks[i]) / (d1 - disp[i]);
      return PeriodicWitness{to_int64(p.floor()), x.frac()};
    }
  }
  // Unreachable: the integer lies between the min and max over breakpoints.
  throw std::logic_error("displacement crossing not found");
}

}  // namespace

DisplacementInterval translation_bracket(const PLLineMap& f, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("translation bracket needs n >= 1");
  DisplacementInterval d = displacement_interval(power(f, n));
  return {d.lo / Rational(n), d.hi / Rational(n)};
}

std::optional<PeriodicWitness> rational_rot_test(const PLCircleMap& f, std::int64_t q) {
  if (q < 1) throw std::invalid_argument("rational rotation test needs q >= 1");
  return crossing(power(lift(f, 0), q));
}

RotationResult rotation_number(const PLCircleMap& f, std::int64_t max_denominator,
                               std::int64_t depth) {
  if (max_denominator < 1) throw std::invalid_argument("max denominator must be >= 1");
  if (depth < max_denominator) throw std::invalid_argument("depth must be >= max denominator");
  const PLLineMap base = lift(f, 0);
  PLLineMap iterate = base;
  for (std::int64_t q = 1; q <= max_denominator; ++q) {
    if (q > 1) iterate = compose(iterate, base);
    if (auto w = crossing(iterate)) {
      // q is minimal, so gcd(p, q) = 1.
      return RationalRotation{w->p, q, std::move(w->point)};
    }
  }
  DisplacementInterval d = depth == max_denominator ? displacement_interval(iterate)
                                                    : displacement_interval(power(base, depth));
  return CertifiedNonrational{max_denominator, depth,
                              {d.lo / Rational(depth), d.hi / Rational(depth)}};
}

std::optional<std::int64_t> is_power_of(const PLLineMap& h, const PLLineMap& g,
                                        const PowerSearchOptions& options) {
  std::int64_t n = 1;
  while (true) {
    DisplacementInterval gb = translation_bracket(g, n);
    if (gb.contains(Rational(0))) {
      if (n >= options.max_depth) {
        throw ZeroBracketError("translation bracket of the edge element contains 0 up to depth " +
                               std::to_string(options.max_depth));
      }
      n = std::min(2 * n, options.max_depth);
      continue;
    }
    if (h.is_identity()) return 0;
    DisplacementInterval hb = translation_bracket(h, n);
    // k * t_g = t_h with t_g in gb, t_h in hb.
    std::vector<Rational> ends{hb.lo / gb.lo, hb.lo / gb.hi, hb.hi / gb.lo, hb.hi / gb.hi};
    BigInt k_lo = std::min_element(ends.begin(), ends.end())->ceil();
    BigInt k_hi = std::max_element(ends.begin(), ends.end())->floor();
    BigInt count = k_hi >= k_lo ? BigInt(k_hi - k_lo + 1) : BigInt(0);
    if (count > static_cast<unsigned long>(options.max_candidates) && n < options.max_depth) {
      n = std::min(2 * n, options.max_depth);
      continue;
    }
    if (count > 100000) {
      throw ZeroBracketError("too many power candidates at maximal depth");
    }
    std::vector<std::int64_t> candidates;
    for (BigInt k = k_lo; k <= k_hi; ++k) candidates.push_back(to_int64(k));
    std::sort(candidates.begin(), candidates.end(),
              [](std::int64_t a, std::int64_t b) { return std::llabs(a) < std::llabs(b); });
    for (std::int64_t k : candidates) {
      DisplacementInterval image{gb.lo * Rational(k), gb.hi * Rational(k)};
      if (image.lo > image.hi) std::swap(image.lo, image.hi);
      if (!image.intersects(hb)) continue;
      if (power(g, k) == h) return k;
    }
    return std::nullopt;
  }
}

std::optional<std::int64_t> is_translation(const PLLineMap& h) {
  if (h.base().is_identity()) return h.offset();
  return std::nullopt;
}

}  // namespace plm
