#pragma once

// Hyperelliptic and elliptic models y^2 = f(x) over F_p, their places,
// Mumford divisors with Cantor's group law, point groups and Jacobians.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fflat/abelian.hpp"
#include "fflat/fieldpoly.hpp"

namespace fflat {

/// y^2 = f(x) with f squarefree of odd degree 2g+1 >= 3.
class HyperellipticModel {
 public:
  /// Throws InvalidInput for even p, non-prime p, even or < 3 degree, or non-squarefree f.
  HyperellipticModel(std::uint32_t p, const std::vector<long long>& f_ascending);
  HyperellipticModel(const PrimeField& field, FpPoly f);

  const PrimeField& field() const { return field_; }
  std::uint32_t p() const { return field_.modulus(); }
  const FpPoly& f() const { return f_; }
  int genus() const { return genus_; }
  bool is_elliptic() const { return genus_ == 1; }

 private:
  PrimeField field_;
  FpPoly f_;
  int genus_;
};

enum class PlaceKind { Infinity, Ramified, Inert, Split, Rational };

const char* to_string(PlaceKind kind);

/// A place used as a lattice coordinate. `x` is alpha (ramified), beta
/// (inert/split) or the rational point (rational-field places); `y` is the
/// y-coordinate of a split place on its sheet.
struct Place {
  PlaceKind kind = PlaceKind::Infinity;
  Residue x = 0;
  Residue y = 0;
  int sheet = 0;  // 1 or 2 for split places
  int degree = 1;

  std::string label() const;
  bool operator==(const Place&) const = default;
};

enum class Selector { RationalField, EllipticAllRational, RamifiedInert, HyperellipticAllRational };

const char* to_string(Selector selector);
/// "rational", "elliptic", "ramified-inert", "all-rational"
std::optional<Selector> parse_selector(const std::string& name);

struct PlaceClassification {
  std::vector<Residue> ramified;  // finite ramified alpha (roots of f), ascending
  std::vector<Residue> inert;     // beta with f(beta) a nonsquare
  std::vector<Residue> split;     // beta with f(beta) a nonzero square
};

/// Ordered coordinate system of a function-field lattice.
struct PlaceSystem {
  Selector selector = Selector::RamifiedInert;
  std::vector<Place> places;
  int r = 0;  // rational ramified places, infinity included
  int s = 0;  // inert places of degree 2
  int t = 0;  // split beta values (2t split places)

  std::size_t size() const { return places.size(); }
  std::vector<int> degrees() const;
};

PlaceClassification classify_places(const HyperellipticModel& model);

/// Places in lattice coordinate order for the given selector:
///  RamifiedInert:            (P_inf, P_2..P_r, Q_1..Q_s)
///  HyperellipticAllRational: (P_inf, ramified.., S_11, S_12, .., S_t1, S_t2)
///  EllipticAllRational:      same ordering, index 0 is the neutral place O
/// Sheet 1 of a split place carries the y-root with the smaller residue.
PlaceSystem place_system(const HyperellipticModel& model, Selector selector);

/// n+1 rational places of a rational function field (labels only).
PlaceSystem rational_place_system(int n);

/// Reduced divisor (u, v): u monic, deg v < deg u <= g, u | v^2 - f.
struct MumfordDivisor {
  FpPoly u;
  FpPoly v;

  bool operator==(const MumfordDivisor& o) const { return u == o.u && v == o.v; }
  bool operator<(const MumfordDivisor& o) const;
  std::string to_string() const;
};

MumfordDivisor mumford_identity(const HyperellipticModel& model);
bool is_valid_mumford(const HyperellipticModel& model, const MumfordDivisor& d);
/// Hyperelliptic involution: (u, -v mod u).
MumfordDivisor mumford_negate(const HyperellipticModel& model, const MumfordDivisor& d);
/// Class of the degree-one place (x0, y0) minus P_inf.
MumfordDivisor mumford_point(const HyperellipticModel& model, Residue x0, Residue y0);
/// Composition followed by reduction to deg u <= g.
MumfordDivisor cantor_add(const HyperellipticModel& model, const MumfordDivisor& a, const MumfordDivisor& b);
MumfordDivisor cantor_times(const HyperellipticModel& model, const MumfordDivisor& a, long long k);

/// Affine point on an elliptic model; nullopt is the neutral point O.
using EllipticPoint = std::optional<std::pair<Residue, Residue>>;

EllipticPoint chord_tangent_add(const HyperellipticModel& model, const EllipticPoint& a, const EllipticPoint& b);

struct PointGroup {
  FiniteAbelianGroup group;
  std::vector<EllipticPoint> points;     // O first, then affine points ascending
  std::vector<GroupElement> coords;      // aligned with points
  std::vector<long long> element_orders; // aligned with points (census)
  PlaceSystem places;                    // EllipticAllRational ordering
  std::vector<GroupElement> embedding;   // aligned with places.places
};

/// Rational points of an elliptic model under the chord-tangent law.
PointGroup elliptic_point_group(const HyperellipticModel& model);

struct JacobianLimits {
  int max_genus = 3;
  std::uint32_t max_p = 50;
  /// Cap on the number of (u, v) candidate checks during enumeration.
  std::uint64_t max_candidates = 200'000'000;
};

struct Jacobian {
  FiniteAbelianGroup group;
  std::vector<MumfordDivisor> classes;  // canonical order: (deg u, u, v)
  std::vector<GroupElement> coords;     // aligned with classes
  std::size_t identity_index = 0;

  std::size_t index_of(const MumfordDivisor& d) const;
  GroupElement coord_of(const MumfordDivisor& d) const { return coords[index_of(d)]; }
};

/// Enumerates every reduced Mumford divisor (one per class) and the group structure.
Jacobian jacobian_group(const HyperellipticModel& model, const JacobianLimits& limits = {});

/// Place classes [P - deg(P) P_inf] in a computed Jacobian, aligned with the system.
std::vector<GroupElement> jacobian_embedding(const HyperellipticModel& model, const Jacobian& jac,
                                             const PlaceSystem& system);

long long class_number(const HyperellipticModel& model, const JacobianLimits& limits = {});

struct TwoTorsion {
  FiniteAbelianGroup group;             // (Z/2)^{2g}
  std::vector<GroupElement> embedding;  // aligned with the RamifiedInert place system
};

/// Ramified classes of a split model: P_i -> e_i (i <= 2g), P_{2g+1} -> all-ones,
/// P_inf and inert places -> 0. Throws InvalidInput unless f splits.
TwoTorsion two_torsion_classes(const HyperellipticModel& model);

bool splits_into_linear_factors(const HyperellipticModel& model);

/// Exponents mod 2 (the canonical semi-reduced representative).
std::vector<int> semi_reduced_canonical(const std::vector<long long>& exponents);

/// sum_{i=0}^{g} C(2g+1, i); equals 2^{2g}.
long long count_reduced_ramified(int g);

/// sqrt(q) + 1/sqrt(q) > 2(2g-1), decided as (q+1)^2 > 4 q (2g-1)^2.
bool hasse_weil_condition(std::uint64_t q, int g);

/// Integer bounds floor/ceil of (sqrt(p) -+ 1)^{2g}.
std::pair<long long, long long> hasse_weil_interval(std::uint64_t p, int g);

int gonality(Selector selector);

}  // namespace fflat
