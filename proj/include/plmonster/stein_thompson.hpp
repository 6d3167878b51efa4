#pragma once

// Stein-Thompson groups T_{n_1,...,n_k}: PL circle homeomorphisms with
// breakpoints and images in Y = Z[1/lambda]/Z (lambda = n_1 * ... * n_k)
// and slopes in the multiplicative group P = <n_1, ..., n_k>.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "plmonster/pl_map.hpp"
#include "plmonster/random.hpp"
#include "plmonster/rational.hpp"

namespace plm {

class GroupDescriptor {
 public:
  // Throws std::invalid_argument unless every generator is >= 2.
  explicit GroupDescriptor(std::vector<std::int64_t> generators);

  const std::vector<std::int64_t>& generators() const { return generators_; }
  const BigInt& lambda() const { return lambda_; }
  const std::vector<std::uint64_t>& prime_support() const { return primes_; }

  // x in Z[1/lambda] (no reduction mod 1 needed: integers are in Y).
  bool in_Y(const Rational& x) const;
  // s in P; decided by an exact integer solve over prime-exponent vectors.
  bool slope_in_P(const Rational& s) const;

  std::string to_string() const;

  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
    return a.generators_ == b.generators_;
  }

 private:
  // Exponent vector of s over primes_, or nothing if s has another prime.
  bool exponents(const Rational& s, std::vector<std::int64_t>& out) const;

  std::vector<std::int64_t> generators_;
  BigInt lambda_;
  std::vector<std::uint64_t> primes_;
  // Echelon basis of the exponent lattice of P; pivots_[r] is the first
  // nonzero column of lattice_[r].
  std::vector<std::vector<std::int64_t>> lattice_;
  std::vector<std::size_t> pivots_;
};

// Thompson's group T and the group T_{2,3}.
GroupDescriptor thompson_T();
GroupDescriptor stein_thompson_23();

enum class ViolationKind { breakpoint_not_in_Y, image_not_in_Y, slope_not_in_P };

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  // Index of the breakpoint; for slopes, the arc starting at that breakpoint.
  std::size_t index;
  Rational value;
};

struct MembershipReport {
  bool member = true;
  std::vector<Violation> violations;
};

MembershipReport is_member(const PLCircleMap& f, const GroupDescriptor& d);

class TupleMapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TupleMapResult {
  PLCircleMap map;
  // Smallest q >= 1 with every tuple entry a multiple of lambda^-q.
  int grid_depth = 0;
  // Every breakpoint of map is a multiple of lambda^-refined_depth.
  int refined_depth = 0;
};

// An element of T_{n_1,...,n_k} sending x[i] to y[i] for every i. The grid
// {0, lambda^-q, ...} containing both tuples is refined by midpoint insertion
// until corresponding arcs hold equal point counts, then interpolated.
// Midpoints need 2 in P. Throws TupleMapError.
TupleMapResult tuple_map_detailed(std::span<const Rational> x, std::span<const Rational> y,
                                  const GroupDescriptor& d);
PLCircleMap tuple_map(std::span<const Rational> x, std::span<const Rational> y,
                      const GroupDescriptor& d);

// g0(u) = 2u + 1/2 on [0,1/4), (2/3)u - 1/6 mod 1 on [1/4,1). In the
// coordinate x = 2u + 1 on the circle R+/(x ~ 3x) this is x -> 2x, so its
// rotation number is log 2 / log 3.
PLCircleMap irrational_candidate_g0();
// The offset-0 lift of g0.
PLLineMap g0_lift();

// Unit translation, the generator of the center of a lifted group.
PLLineMap center_generator_z();

// Rotation by p/q. Throws std::invalid_argument unless p/q is in Y.
PLCircleMap torsion_rotation(const GroupDescriptor& d, std::int64_t p, std::int64_t q);

// Two positively ordered p-tuples on the grid lambda^-q Z / Z, with y
// cyclically shifted by a random amount.
std::pair<std::vector<Rational>, std::vector<Rational>> random_tuple_pair(
    const GroupDescriptor& d, Rng& rng, std::size_t p, int q);

// tuple_map of a random tuple pair with 1 <= p <= max_points, grid depth
// 1 <= q <= max_depth.
PLCircleMap random_member(const GroupDescriptor& d, Rng& rng, std::size_t max_points = 4,
                          int max_depth = 2);

}  // namespace plm
