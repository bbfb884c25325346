#pragma once

// Named lattices (A_n, Barnes B_n, scalings), class-group kernel lattices
// and the function-field lattices of y^2 = f(x).

#include <optional>
#include <string>
#include <vector>

#include "fflat/abelian.hpp"
#include "fflat/curves.hpp"
#include "fflat/lattice.hpp"

namespace fflat {

/// Rows e_i - e_{i+1}, i = 0..n-1, in Z^{n+1}.
IntegerLattice root_lattice_a(int n);
/// Sum i*v_i = 0 mod n+1 inside A_n.
IntegerLattice barnes_lattice(int n);
IntegerLattice scale(const IntegerLattice& lattice, const Int& c);

/// { x : sum x_i = 0, d_i | x_i, sum (x_i / d_i) images[i] = 0 in G }.
IntegerLattice kernel_lattice(const FiniteAbelianGroup& group, const std::vector<GroupElement>& images,
                              const std::vector<int>& degrees, std::vector<std::string> labels = {});

enum class GeneratorTag { XMinusAlpha, XMinusBeta, U, GroupRelation };
const char* to_string(GeneratorTag tag);

struct GeneratorVector {
  GeneratorTag tag = GeneratorTag::GroupRelation;
  int place = -1;  // coordinate of alpha_i / beta_j, -1 otherwise
  IntVec v;
};

/// Phi of x - alpha (ramified coordinate), x - beta (inert coordinate) or u = y.
GeneratorVector phi_vector(GeneratorTag tag, int place, const PlaceSystem& system, const HyperellipticModel& model);

struct LatticeBundle {
  IntegerLattice lattice;
  PlaceSystem places;
  std::vector<GeneratorVector> generators;
  std::optional<HyperellipticModel> model;
};

LatticeBundle build_rational_lattice(int n);
LatticeBundle build_ff_lattice(const HyperellipticModel& model, Selector selector, const JacobianLimits& limits = {});

/// Kernel lattice over the ramified classes (2-torsion embedding when f splits,
/// enumerated Jacobian otherwise), inert coordinates weighted by degree 2.
IntegerLattice oracle_build_ramified_inert(const HyperellipticModel& model, const JacobianLimits& limits = {});

/// index_in(L, A_n) * gcd(d_i) / prod(d_i); InvalidInput if not integral.
Int derived_h0(const IntegerLattice& lattice, const std::vector<int>& degrees);

std::vector<std::string> place_labels(const PlaceSystem& system);

}  // namespace fflat
