#pragma once

// Lattice automorphisms: coordinate-permutation stabilizers, full isometry
// groups by backtracking over short-vector shells, abelian-group
// automorphisms and induced subgroups from curve symmetries.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "fflat/abelian.hpp"
#include "fflat/curves.hpp"
#include "fflat/lattice.hpp"
#include "fflat/permgroup.hpp"

namespace fflat {

inline constexpr std::size_t kDefaultMaxPermDim = 14;

/// Generic base-image search. Levels are processed deepest first; the order is
/// the product of the orbit sizes of base[k] under the stabilizer of base[0..k).
struct BacktrackProblem {
  std::size_t points = 0;
  std::vector<std::size_t> base;
  /// Candidate images for base[level] given images of base[0..level).
  std::function<std::vector<std::size_t>(std::size_t level, const std::vector<std::size_t>& images)> candidates;
  /// Called after images[level] is assigned.
  std::function<bool(std::size_t level, const std::vector<std::size_t>& images)> partial_ok;
  /// Full assignment to permutation of the points, or nullopt.
  std::function<std::optional<Permutation>(const std::vector<std::size_t>& images)> complete;
};

struct BacktrackResult {
  Int order;
  std::vector<Permutation> generators;
  std::vector<std::size_t> orbit_sizes;
  std::size_t nodes = 0;
};

BacktrackResult backtrack_automorphisms(const BacktrackProblem& problem, std::size_t max_nodes);

/// Does the coordinate permutation (v[i] moves to position perm(i)) map L onto L?
bool stabilizes(const IntegerLattice& lattice, const Permutation& perm);

struct PermStabilizer {
  PermutationGroup group;
  Int order;
};

/// All coordinate permutations fixing L, ambient dimension <= max_dim.
PermStabilizer perm_stabilizer(const IntegerLattice& lattice, std::size_t max_dim = kDefaultMaxPermDim,
                               std::size_t max_vectors = kDefaultMaxEnum);

std::vector<std::pair<Int, int>> factor_integer(const Int& n);

struct IsometryReport {
  Int order;
  std::vector<std::pair<Int, int>> factored;
  bool includes_minus_id = false;
  std::vector<IntMat> generators;  // matrices acting on HNF-basis coordinates (row convention)
  std::size_t shell_size = 0;
  std::size_t nodes = 0;
};

/// Full isometry group of L (includes -Id). Rank <= max_rank.
IsometryReport isometry_group_order(const IntegerLattice& lattice, std::size_t max_rank = 12,
                                    std::size_t max_shell = 20'000, std::size_t max_nodes = 50'000'000,
                                    std::size_t max_vectors = kDefaultMaxEnum);

/// Report for coordinate-permutation mode; includes_minus_id is false.
IsometryReport perm_report(const PermStabilizer& stab);

struct AbelianAutomorphisms {
  long long order = 0;
  /// Each automorphism as images of the invariant-factor generators.
  std::vector<std::vector<GroupElement>> automorphisms;
};

/// Brute force for rank <= 2, |G| <= 10^4.
AbelianAutomorphisms abelian_automorphism_group(const FiniteAbelianGroup& group);
/// Closed-form order for rank <= 2 from the prime-power decomposition.
long long abelian_automorphism_order_formula(const FiniteAbelianGroup& group);

struct SubgroupCheck {
  bool all_stabilize = false;
  Int order;
  Int expected;
  std::size_t generators_checked = 0;
  std::string failure;
};

/// Translations P -> P + Q and automorphisms of the point group, as coordinate
/// permutations of the elliptic all-rational lattice.
SubgroupCheck elliptic_subgroup_check(const IntegerLattice& lattice, const FiniteAbelianGroup& group,
                                      const std::vector<GroupElement>& embedding);

/// Permutations of P^1(F_q) (infinity = index q) induced by x -> (ax+b)/(cx+d).
struct MobiusGroup {
  std::vector<Permutation> elements;  // distinct, sorted
  Int order;                          // Schreier-Sims order of the generated group
  std::size_t fixing_all = 0;         // elements fixing every place
};
MobiusGroup mobius_induced_perms(std::uint32_t q);

/// Transpositions among inert, among finite ramified coordinates, and P_inf <-> P_2.
SubgroupCheck hyperelliptic_subgroup_check(const IntegerLattice& lattice, const PlaceSystem& system);

}  // namespace fflat
