#include "plmonster/pl_map.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace plm {

namespace {

const Rational& one() {
  static const Rational value(1);
  return value;
}

// Continuous interpolation through (xs[i], us[i]) closed up by
// (xs[0] + 1, us[0] + 1), evaluated at x in [0,1).
Rational interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& us,
                     const Rational& x) {
  const std::size_t m = xs.size();
  if (x < xs.front()) {
    Rational shifted = x + one();
    const Rational& x0 = xs.back();
    const Rational& u0 = us.back();
    Rational slope = (us.front() + one() - u0) / (xs.front() + one() - x0);
    return u0 + slope * (shifted - x0) - one();
  }
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  std::size_t i = static_cast<std::size_t>(it - xs.begin()) - 1;
  const Rational& x0 = xs[i];
  const Rational& u0 = us[i];
  if (x == x0) return u0;
  Rational x1 = i + 1 < m ? xs[i + 1] : xs.front() + one();
  Rational u1 = i + 1 < m ? us[i + 1] : us.front() + one();
  return u0 + (u1 - u0) / (x1 - x0) * (x - x0);
}

std::vector<Rational> cyclic_slopes(const std::vector<Rational>& xs,
                                    const std::vector<Rational>& us) {
  const std::size_t m = xs.size();
  std::vector<Rational> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational x1 = i + 1 < m ? xs[i + 1] : xs.front() + one();
    Rational u1 = i + 1 < m ? us[i + 1] : us.front() + one();
    out.push_back((u1 - us[i]) / (x1 - xs[i]));
  }
  return out;
}

std::vector<Rational> unwrap(const std::vector<Rational>& ys) {
  std::vector<Rational> us;
  us.reserve(ys.size());
  us.push_back(ys.front());
  for (std::size_t i = 1; i < ys.size(); ++i) {
    us.push_back(us.back() + (ys[i] - ys[i - 1]).frac());
  }
  return us;
}

template <typename Map>
Map power_by_squaring(Map base, std::int64_t n, Map identity) {
  if (n < 0) {
    base = invert(base);
    // -INT64_MIN overflows; split off one factor first
    if (n == std::numeric_limits<std::int64_t>::min()) {
      return compose(power_by_squaring(base, -(n + 1), identity), base);
    }
    n = -n;
  }
  Map result = std::move(identity);
  while (n > 0) {
    if (n & 1) result = compose(result, base);
    n >>= 1;
    if (n > 0) base = compose(base, base);
  }
  return result;
}

}  // namespace

PLCircleMap::PLCircleMap() : breaks_{Rational(0)}, images_{Rational(0)}, unwrapped_{Rational(0)} {}

PLCircleMap::PLCircleMap(std::vector<Rational> breaks, std::vector<Rational> images,
                         std::vector<Rational> unwrapped)
    : breaks_(std::move(breaks)), images_(std::move(images)), unwrapped_(std::move(unwrapped)) {}

PLCircleMap PLCircleMap::from_points(std::vector<Rational> xs, std::vector<Rational> ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("breakpoints and images differ in length");
  }
  if (xs.empty()) throw std::invalid_argument("a circle map needs at least one point");
  const Rational zero(0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < zero || xs[i] >= one()) {
      throw std::invalid_argument("breakpoint " + xs[i].to_string() + " outside [0,1)");
    }
    if (ys[i] < zero || ys[i] >= one()) {
      throw std::invalid_argument("image " + ys[i].to_string() + " outside [0,1)");
    }
    if (i > 0 && !(xs[i - 1] < xs[i])) {
      throw std::invalid_argument("breakpoints not strictly increasing at index " +
                                  std::to_string(i));
    }
    if (i > 0 && ys[i] == ys[i - 1]) {
      throw std::invalid_argument("images not cyclically strictly increasing at index " +
                                  std::to_string(i));
    }
  }
  std::vector<Rational> us = unwrap(ys);
  if (!(us.back() < us.front() + one())) {
    throw std::invalid_argument("images wind more than once around the circle");
  }

  const std::size_t m = xs.size();
  std::vector<Rational> slopes = cyclic_slopes(xs, us);
  std::vector<Rational> kept_x;
  std::vector<Rational> kept_y;
  for (std::size_t i = 0; i < m; ++i) {
    const Rational& before = slopes[(i + m - 1) % m];
    if (before != slopes[i]) {
      kept_x.push_back(xs[i]);
      kept_y.push_back(ys[i]);
    }
  }
  if (kept_x.empty()) {
    Rational at_zero = interpolate(xs, us, zero).frac();
    return PLCircleMap({zero}, {at_zero}, {at_zero});
  }
  std::vector<Rational> kept_u = unwrap(kept_y);
  return PLCircleMap(std::move(kept_x), std::move(kept_y), std::move(kept_u));
}

std::vector<Rational> PLCircleMap::slopes() const { return cyclic_slopes(breaks_, unwrapped_); }

bool PLCircleMap::is_identity() const {
  return breaks_.size() == 1 && breaks_[0].is_zero() && images_[0].is_zero();
}

Rational PLCircleMap::raw_value(const Rational& x) const {
  if (x.sign() < 0 || x >= one()) {
    throw std::domain_error("circle point " + x.to_string() + " outside [0,1)");
  }
  return interpolate(breaks_, unwrapped_, x);
}

Rational PLCircleMap::evaluate(const Rational& x) const { return raw_value(x).frac(); }

Rational PLCircleMap::lifted(const Rational& x) const {
  Rational at_zero = raw_value(Rational(0));
  return raw_value(x) - Rational(at_zero.floor());
}

Rational PLLineMap::evaluate(const Rational& x) const {
  BigInt whole = x.floor();
  Rational t = x - Rational(whole);
  return Rational(whole) + Rational(offset_) + base_.lifted(t);
}

Rational evaluate_circle(const PLCircleMap& f, const Rational& x) { return f.evaluate(x); }

Rational evaluate_line(const PLLineMap& f, const Rational& x) { return f.evaluate(x); }

PLCircleMap compose(const PLCircleMap& f, const PLCircleMap& g) {
  // Breakpoints of g o f lie among those of f and the f-preimages of those of g.
  PLCircleMap f_inv = invert(f);
  std::vector<Rational> xs = f.breakpoints();
  xs.reserve(f.size() + g.size());
  for (const Rational& b : g.breakpoints()) xs.push_back(f_inv.evaluate(b));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  for (const Rational& x : xs) ys.push_back(g.evaluate(f.evaluate(x)));
  return PLCircleMap::from_points(std::move(xs), std::move(ys));
}

PLCircleMap invert(const PLCircleMap& f) {
  const std::size_t m = f.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return f.images()[a] < f.images()[b]; });
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  xs.reserve(m);
  ys.reserve(m);
  for (std::size_t i : order) {
    xs.push_back(f.images()[i]);
    ys.push_back(f.breakpoints()[i]);
  }
  return PLCircleMap::from_points(std::move(xs), std::move(ys));
}

PLCircleMap power(const PLCircleMap& f, std::int64_t n) {
  return power_by_squaring(f, n, PLCircleMap::identity());
}

PLCircleMap rotation_map(const Rational& r) {
  return PLCircleMap::from_points({Rational(0)}, {r.frac()});
}

PLLineMap lift(const PLCircleMap& f, std::int64_t k) { return PLLineMap(f, k); }

PLCircleMap project(const PLLineMap& f) { return f.base(); }

PLLineMap translation(std::int64_t k) { return PLLineMap(PLCircleMap::identity(), k); }

PLLineMap compose(const PLLineMap& f, const PLLineMap& g) {
  PLCircleMap base = compose(f.base(), g.base());
  Rational at_zero = g.evaluate(f.evaluate(Rational(0)));
  return PLLineMap(std::move(base), to_int64(at_zero.floor()));
}

PLLineMap invert(const PLLineMap& f) {
  PLCircleMap base = invert(f.base());
  // F(h(0) + j) = 0 for the lift h(0) in [0,1) of the inverse base.
  Rational image = f.evaluate(base.lifted(Rational(0)));
  return PLLineMap(std::move(base), to_int64(-image.floor()));
}

PLLineMap power(const PLLineMap& f, std::int64_t n) {
  return power_by_squaring(f, n, PLLineMap());
}

DisplacementInterval displacement_interval(const PLLineMap& f) {
  const auto& breaks = f.base().breakpoints();
  Rational first = f.evaluate(breaks.front()) - breaks.front();
  DisplacementInterval out{first, first};
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    Rational d = f.evaluate(breaks[i]) - breaks[i];
    if (d < out.lo) out.lo = d;
    if (d > out.hi) out.hi = d;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const PLCircleMap& f) {
  os << '[';
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) os << ", ";
    os << f.breakpoints()[i] << "->" << f.images()[i];
  }
  return os << ']';
}

std::ostream& operator<<(std::ostream& os, const PLLineMap& f) {
  return os << f.base() << " offset " << f.offset();
}

std::ostream& operator<<(std::ostream& os, const DisplacementInterval& d) {
  return os << '[' << d.lo << ", " << d.hi << ']';
}

}  // namespace plm
