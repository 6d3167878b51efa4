#pragma once

// Piecewise-linear homeomorphisms of the circle R/Z and their lifts to R.
//
// Composition convention: compose(f, g) means "apply f, then g", i.e. the
// map x -> g(f(x)). This is a right action, matching the notation x.f.g;
// words in the amalgam module are read the same way.

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "plmonster/rational.hpp"

namespace plm {

// A PL circle map stored as breakpoints in [0,1) and their images in [0,1).
// The map is the orientation-preserving interpolation that winds once around
// the circle. Canonical form keeps exactly the points where the slope
// changes; a map with no slope change (a rigid rotation) keeps a single
// anchor point at 0.
class PLCircleMap {
 public:
  PLCircleMap();  // identity

  // Builds the map sending xs[i] to ys[i]. The xs must be strictly increasing
  // in [0,1), the ys must lie in [0,1) and be cyclically strictly increasing
  // with total winding 1. The sample points need not be breakpoints; the
  // result is canonicalized. Throws std::invalid_argument.
  static PLCircleMap from_points(std::vector<Rational> xs, std::vector<Rational> ys);

  static PLCircleMap identity() { return {}; }

  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<Rational>& images() const { return images_; }
  std::size_t size() const { return breaks_.size(); }

  // slopes()[i] is the slope on the arc from breakpoints()[i] to the next
  // breakpoint (cyclically).
  std::vector<Rational> slopes() const;

  bool is_identity() const;
  bool is_rotation() const { return breaks_.size() == 1; }

  // Image of x in [0,1), reduced mod 1. Throws std::domain_error if x is
  // outside [0,1).
  Rational evaluate(const Rational& x) const;

  // Value at x in [0,1) of the lift whose value at 0 lies in [0,1).
  Rational lifted(const Rational& x) const;

  friend bool operator==(const PLCircleMap& a, const PLCircleMap& b) {
    return a.breaks_ == b.breaks_ && a.images_ == b.images_;
  }

 private:
  PLCircleMap(std::vector<Rational> breaks, std::vector<Rational> images,
              std::vector<Rational> unwrapped);

  // Unwrapped (continuous, not reduced) interpolation for x in [0,1).
  Rational raw_value(const Rational& x) const;

  std::vector<Rational> breaks_;
  std::vector<Rational> images_;
  // unwrapped_[0] = images_[0]; unwrapped_[i] increases strictly and stays
  // below unwrapped_[0] + 1.
  std::vector<Rational> unwrapped_;
};

// A lift of a PL circle map to R, commuting with x -> x + 1. Determined by
// its base and the integer offset with F(0) = rep(f(0)) + offset, where
// rep(.) is the representative in [0,1).
class PLLineMap {
 public:
  PLLineMap() = default;  // identity
  PLLineMap(PLCircleMap base, std::int64_t offset)
      : base_(std::move(base)), offset_(offset) {}

  const PLCircleMap& base() const { return base_; }
  std::int64_t offset() const { return offset_; }

  bool is_identity() const { return offset_ == 0 && base_.is_identity(); }

  Rational evaluate(const Rational& x) const;

  friend bool operator==(const PLLineMap& a, const PLLineMap& b) {
    return a.offset_ == b.offset_ && a.base_ == b.base_;
  }

 private:
  PLCircleMap base_;
  std::int64_t offset_ = 0;
};

// Exact bounds of F(x) - x over all real x.
struct DisplacementInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_integer() const { return lo.ceil() <= hi.floor(); }
  Rational width() const { return hi - lo; }
  bool intersects(const DisplacementInterval& o) const { return lo <= o.hi && o.lo <= hi; }
  friend bool operator==(const DisplacementInterval&, const DisplacementInterval&) = default;
};

Rational evaluate_circle(const PLCircleMap& f, const Rational& x);
Rational evaluate_line(const PLLineMap& f, const Rational& x);

// Apply f, then g.
PLCircleMap compose(const PLCircleMap& f, const PLCircleMap& g);
PLLineMap compose(const PLLineMap& f, const PLLineMap& g);

PLCircleMap invert(const PLCircleMap& f);
PLLineMap invert(const PLLineMap& f);

// n-fold composition by repeated squaring; negative n powers the inverse.
PLCircleMap power(const PLCircleMap& f, std::int64_t n);
PLLineMap power(const PLLineMap& f, std::int64_t n);

// x -> x + r mod 1.
PLCircleMap rotation_map(const Rational& r);

// The lift F of f with F(0) in [0,1) + k.
PLLineMap lift(const PLCircleMap& f, std::int64_t k);
PLCircleMap project(const PLLineMap& f);

// Unit translation x -> x + k.
PLLineMap translation(std::int64_t k);

DisplacementInterval displacement_interval(const PLLineMap& f);

std::ostream& operator<<(std::ostream& os, const PLCircleMap& f);
std::ostream& operator<<(std::ostream& os, const PLLineMap& f);
std::ostream& operator<<(std::ostream& os, const DisplacementInterval& d);

}  // namespace plm
