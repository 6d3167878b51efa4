#include "plmonster/stein_thompson.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace plm {

namespace {

std::vector<std::uint64_t> prime_factors(std::int64_t n) {
  std::vector<std::uint64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(static_cast<std::uint64_t>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(static_cast<std::uint64_t>(n));
  return out;
}

// Strips every prime in `primes` from n, recording multiplicities.
BigInt strip(const BigInt& n, const std::vector<std::uint64_t>& primes,
             std::vector<std::int64_t>* counts, int sign) {
  BigInt rest = abs(n);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    BigInt p(static_cast<unsigned long>(primes[i]));
    mp_bitcnt_t k = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    if (counts != nullptr) (*counts)[i] += sign * static_cast<std::int64_t>(k);
  }
  return rest;
}

// Integer row echelon form (no back-reduction) by gcd elimination.
void echelon(std::vector<std::vector<std::int64_t>>& rows, std::vector<std::size_t>& pivots,
             std::size_t ncols) {
  std::size_t top = 0;
  for (std::size_t c = 0; c < ncols && top < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][c] != 0 && (best == rows.size() || std::llabs(rows[r][c]) < std::llabs(rows[best][c]))) {
          best = r;
        }
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        std::int64_t q = rows[r][c] / rows[top][c];
        for (std::size_t k = 0; k < ncols; ++k) rows[r][k] -= q * rows[top][k];
        if (rows[r][c] != 0) done = false;
      }
      if (done) {
        pivots.push_back(c);
        ++top;
        break;
      }
    }
  }
  rows.resize(top);
}

bool positively_ordered(const std::vector<Rational>& t) {
  Rational span(0);
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i] == t[i - 1]) return false;
    span += (t[i] - t[i - 1]).frac();
  }
  return span < Rational(1);
}

// Points of an arc, endpoints included, and the halving depth of each gap.
struct Arc {
  std::vector<Rational> points;
  std::vector<int> depth;

  std::size_t interior() const { return points.size() - 2; }

  // Inserts `need` midpoints, always halving the leftmost largest gap.
  void refine(std::size_t need, int& max_depth) {
    while (need > 0) {
      int shallowest = *std::min_element(depth.begin(), depth.end());
      std::vector<Rational> p2{points.front()};
      std::vector<int> d2;
      for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (need > 0 && depth[i] == shallowest) {
          p2.push_back((points[i] + points[i + 1]) / Rational(2));
          d2.push_back(depth[i] + 1);
          d2.push_back(depth[i] + 1);
          max_depth = std::max(max_depth, depth[i] + 1);
          --need;
        } else {
          d2.push_back(depth[i]);
        }
        p2.push_back(points[i + 1]);
      }
      points = std::move(p2);
      depth = std::move(d2);
    }
  }
};

Arc grid_arc(const Rational& from, const Rational& to, const BigInt& n) {
  BigInt a = (from * Rational(n)).floor();
  BigInt b = (to * Rational(n)).floor();
  Arc arc;
  for (BigInt j = a; j <= b; ++j) arc.points.emplace_back(j, n);
  arc.depth.assign(arc.points.size() - 1, 0);
  return arc;
}

std::vector<Rational> unwrap_closed(const std::vector<Rational>& t) {
  std::vector<Rational> out{t.front()};
  for (std::size_t i = 1; i < t.size(); ++i) out.push_back(out.back() + (t[i] - t[i - 1]).frac());
  out.push_back(t.front() + Rational(1));
  return out;
}

}  // namespace

GroupDescriptor::GroupDescriptor(std::vector<std::int64_t> generators)
    : generators_(std::move(generators)), lambda_(1) {
  if (generators_.empty()) throw std::invalid_argument("descriptor needs at least one generator");
  for (std::int64_t n : generators_) {
    if (n < 2) throw std::invalid_argument("generator " + std::to_string(n) + " is below 2");
    lambda_ *= BigInt(static_cast<long>(n));
    for (std::uint64_t p : prime_factors(n)) {
      if (std::find(primes_.begin(), primes_.end(), p) == primes_.end()) primes_.push_back(p);
    }
  }
  std::sort(primes_.begin(), primes_.end());
  for (std::int64_t n : generators_) {
    std::vector<std::int64_t> row(primes_.size(), 0);
    exponents(Rational(n), row);
    lattice_.push_back(std::move(row));
  }
  echelon(lattice_, pivots_, primes_.size());
}

bool GroupDescriptor::exponents(const Rational& s, std::vector<std::int64_t>& out) const {
  out.assign(primes_.size(), 0);
  BigInt num_rest = strip(s.numerator(), primes_, &out, +1);
  BigInt den_rest = strip(s.denominator(), primes_, &out, -1);
  return num_rest == 1 && den_rest == 1;
}

bool GroupDescriptor::in_Y(const Rational& x) const {
  return strip(x.denominator(), primes_, nullptr, 0) == 1;
}

bool GroupDescriptor::slope_in_P(const Rational& s) const {
  if (s.sign() <= 0) return false;
  std::vector<std::int64_t> v;
  if (!exponents(s, v)) return false;
  for (std::size_t r = 0; r < lattice_.size(); ++r) {
    std::size_t c = pivots_[r];
    if (v[c] % lattice_[r][c] != 0) return false;
    std::int64_t q = v[c] / lattice_[r][c];
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= q * lattice_[r][k];
  }
  return std::all_of(v.begin(), v.end(), [](std::int64_t e) { return e == 0; });
}

std::string GroupDescriptor::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < generators_.size(); ++i) os << (i ? "," : "") << generators_[i];
  os << '>';
  return os.str();
}

GroupDescriptor thompson_T() { return GroupDescriptor({2}); }
GroupDescriptor stein_thompson_23() { return GroupDescriptor({2, 3}); }

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::breakpoint_not_in_Y: return "breakpoint-not-in-Y";
    case ViolationKind::image_not_in_Y: return "image-not-in-Y";
    case ViolationKind::slope_not_in_P: return "slope-not-in-P";
  }
  return "unknown";
}

MembershipReport is_member(const PLCircleMap& f, const GroupDescriptor& d) {
  MembershipReport report;
  const auto& breaks = f.breakpoints();
  const auto& images = f.images();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!d.in_Y(breaks[i])) {
      report.violations.push_back({ViolationKind::breakpoint_not_in_Y, i, breaks[i]});
    }
    if (!d.in_Y(images[i])) {
      report.violations.push_back({ViolationKind::image_not_in_Y, i, images[i]});
    }
  }
  std::vector<Rational> slopes = f.slopes();
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    if (!d.slope_in_P(slopes[i])) {
      report.violations.push_back({ViolationKind::slope_not_in_P, i, slopes[i]});
    }
  }
  report.member = report.violations.empty();
  return report;
}

TupleMapResult tuple_map_detailed(std::span<const Rational> x_in, std::span<const Rational> y_in,
                                  const GroupDescriptor& d) {
  if (x_in.size() != y_in.size()) throw TupleMapError("tuple lengths differ");
  if (x_in.empty()) throw TupleMapError("tuples must be nonempty");
  if (!d.slope_in_P(Rational(2))) {
    throw TupleMapError("midpoint insertion needs 2 in P for descriptor " + d.to_string());
  }
  const std::size_t p = x_in.size();
  std::vector<Rational> x;
  std::vector<Rational> y;
  for (std::size_t i = 0; i < p; ++i) {
    x.push_back(x_in[i].frac());
    y.push_back(y_in[i].frac());
    if (!d.in_Y(x.back()) || !d.in_Y(y.back())) {
      throw TupleMapError("tuple entry not in Z[1/" + d.lambda().get_str() + "]");
    }
  }
  if (!positively_ordered(x)) throw TupleMapError("source tuple is not positively ordered");
  if (!positively_ordered(y)) throw TupleMapError("target tuple is not positively ordered");

  auto shift = std::min_element(x.begin(), x.end()) - x.begin();
  std::rotate(x.begin(), x.begin() + shift, x.end());
  std::rotate(y.begin(), y.begin() + shift, y.end());

  TupleMapResult result;
  BigInt grid = d.lambda();
  result.grid_depth = 1;
  auto on_grid = [&](const Rational& v) { return (v * Rational(grid)).is_integer(); };
  while (!std::all_of(x.begin(), x.end(), on_grid) || !std::all_of(y.begin(), y.end(), on_grid)) {
    grid *= d.lambda();
    ++result.grid_depth;
  }

  std::vector<Rational> xs = unwrap_closed(x);
  std::vector<Rational> ys = unwrap_closed(y);
  int max_halvings = 0;
  std::vector<Rational> src;
  std::vector<Rational> dst;
  for (std::size_t i = 0; i < p; ++i) {
    Arc ax = grid_arc(xs[i], xs[i + 1], grid);
    Arc ay = grid_arc(ys[i], ys[i + 1], grid);
    if (ax.interior() < ay.interior()) {
      ax.refine(ay.interior() - ax.interior(), max_halvings);
    } else if (ay.interior() < ax.interior()) {
      ay.refine(ax.interior() - ay.interior(), max_halvings);
    }
    for (std::size_t j = 0; j + 1 < ax.points.size(); ++j) {
      src.push_back(ax.points[j].frac());
      dst.push_back(ay.points[j].frac());
    }
  }

  std::vector<std::size_t> order(src.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return src[a] < src[b]; });
  std::vector<Rational> sx;
  std::vector<Rational> sy;
  sx.reserve(order.size());
  sy.reserve(order.size());
  for (std::size_t i : order) {
    sx.push_back(std::move(src[i]));
    sy.push_back(std::move(dst[i]));
  }
  result.map = PLCircleMap::from_points(std::move(sx), std::move(sy));
  result.refined_depth = result.grid_depth + max_halvings;
  return result;
}

PLCircleMap tuple_map(std::span<const Rational> x, std::span<const Rational> y,
                      const GroupDescriptor& d) {
  return tuple_map_detailed(x, y, d).map;
}

PLCircleMap irrational_candidate_g0() {
  return PLCircleMap::from_points({Rational(0), Rational(1, 4)}, {Rational(1, 2), Rational(0)});
}

PLLineMap g0_lift() { return lift(irrational_candidate_g0(), 0); }

PLLineMap center_generator_z() { return translation(1); }

PLCircleMap torsion_rotation(const GroupDescriptor& d, std::int64_t p, std::int64_t q) {
  if (q == 0) throw std::invalid_argument("rotation with zero denominator");
  Rational r(p, q);
  if (!d.in_Y(r)) {
    throw std::invalid_argument("rotation " + r.to_string() + " is not in Z[1/" +
                                d.lambda().get_str() + "]");
  }
  return rotation_map(r);
}

std::pair<std::vector<Rational>, std::vector<Rational>> random_tuple_pair(
    const GroupDescriptor& d, Rng& rng, std::size_t p, int q) {
  BigInt grid = 1;
  for (int i = 0; i < q; ++i) grid *= d.lambda();
  std::uint64_t n = grid.fits_ulong_p() ? grid.get_ui() : (1ULL << 62);
  p = std::max<std::size_t>(1, std::min<std::size_t>(p, n));
  auto draw = [&] {
    std::vector<std::uint64_t> idx;
    while (idx.size() < p) {
      std::uint64_t k = rng.below(n);
      if (std::find(idx.begin(), idx.end(), k) == idx.end()) idx.push_back(k);
    }
    std::sort(idx.begin(), idx.end());
    std::vector<Rational> out;
    for (std::uint64_t k : idx) out.emplace_back(BigInt(static_cast<unsigned long>(k)), grid);
    return out;
  };
  std::vector<Rational> x = draw();
  std::vector<Rational> y = draw();
  std::rotate(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(rng.below(p)), y.end());
  return {std::move(x), std::move(y)};
}

PLCircleMap random_member(const GroupDescriptor& d, Rng& rng, std::size_t max_points,
                          int max_depth) {
  std::size_t p = 1 + rng.below(max_points);
  int q = static_cast<int>(rng.range(1, max_depth));
  auto [x, y] = random_tuple_pair(d, rng, p, q);
  return tuple_map(x, y, d);
}

}  // namespace plm
