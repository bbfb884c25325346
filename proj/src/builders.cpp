#include "fflat/builders.hpp"

#include <numeric>

#include "fflat/errors.hpp"

namespace fflat {

IntegerLattice root_lattice_a(int n) {
  if (n < 1) throw InvalidInput("A_n needs n >= 1");
  const auto m = static_cast<std::size_t>(n) + 1;
  IntMat rows(static_cast<std::size_t>(n), IntVec(m, 0));
  for (std::size_t i = 0; i + 1 < m; ++i) {
    rows[i][i] = 1;
    rows[i][i + 1] = -1;
  }
  return IntegerLattice(std::move(rows));
}

IntegerLattice barnes_lattice(int n) {
  if (n < 2) throw InvalidInput("B_n needs n >= 2");
  std::vector<GroupElement> images;
  for (int i = 0; i <= n; ++i) images.push_back({i});
  return kernel_lattice(FiniteAbelianGroup::cyclic(n + 1), images, std::vector<int>(static_cast<std::size_t>(n) + 1, 1));
}

IntegerLattice scale(const IntegerLattice& lattice, const Int& c) {
  if (c < 1) throw InvalidInput("scale factor must be >= 1");
  IntMat rows = lattice.basis();
  for (auto& r : rows)
    for (auto& x : r) x *= c;
  return IntegerLattice(std::move(rows), lattice.labels(), lattice.function_field());
}

IntegerLattice kernel_lattice(const FiniteAbelianGroup& group, const std::vector<GroupElement>& images,
                              const std::vector<int>& degrees, std::vector<std::string> labels) {
  const std::size_t m = images.size();
  if (degrees.size() != m) throw InvalidInput("kernel_lattice: images and degrees differ in length");
  if (m < 2) throw InvalidInput("kernel_lattice needs at least two coordinates");
  const std::size_t k = group.rank();
  for (const auto& e : images)
    if (e.size() != k) throw InvalidInput("kernel_lattice: image has wrong length");
  if (!group.is_zero(group.normalize(images[0]))) throw InvalidInput("kernel_lattice: images[0] must be the identity");

  // rows: [d_i, img_i] for coordinates, then [0, n_j e_j] for the moduli
  IntMat a(m + k, IntVec(k + 1, 0));
  for (std::size_t i = 0; i < m; ++i) {
    if (degrees[i] < 1) throw InvalidInput("place degrees must be positive");
    a[i][0] = degrees[i];
    for (std::size_t j = 0; j < k; ++j) a[i][j + 1] = static_cast<long>(images[i][j]);
  }
  for (std::size_t j = 0; j < k; ++j) a[m + j][j + 1] = static_cast<long>(group.factors()[j]);
  const IntMat ker = left_kernel(a);
  IntMat rows;
  for (const auto& r : ker) {
    IntVec x(m);
    for (std::size_t i = 0; i < m; ++i) x[i] = r[i] * degrees[i];
    rows.push_back(std::move(x));
  }
  IntegerLattice l = IntegerLattice::from_generators(rows, m, std::move(labels), true);
  if (l.rank() != m - 1) throw std::logic_error("kernel_lattice: rank differs from n");
  return l;
}

const char* to_string(GeneratorTag tag) {
  switch (tag) {
    case GeneratorTag::XMinusAlpha: return "x-alpha";
    case GeneratorTag::XMinusBeta: return "x-beta";
    case GeneratorTag::U: return "u";
    case GeneratorTag::GroupRelation: return "relation";
  }
  return "?";
}

GeneratorVector phi_vector(GeneratorTag tag, int place, const PlaceSystem& system, const HyperellipticModel& model) {
  const std::size_t m = system.size();
  GeneratorVector g{tag, place, IntVec(m, 0)};
  auto kind_at = [&](int i) {
    if (i < 0 || static_cast<std::size_t>(i) >= m) throw InvalidInput("generator place index out of range");
    return system.places[static_cast<std::size_t>(i)].kind;
  };
  switch (tag) {
    case GeneratorTag::XMinusAlpha:
      if (kind_at(place) != PlaceKind::Ramified) throw InvalidInput("x - alpha needs a finite ramified place");
      g.v[0] = -2;
      g.v[static_cast<std::size_t>(place)] = 2;
      break;
    case GeneratorTag::XMinusBeta:
      if (kind_at(place) != PlaceKind::Inert) throw InvalidInput("x - beta needs an inert place");
      g.v[0] = -2;
      g.v[static_cast<std::size_t>(place)] = 2;
      break;
    case GeneratorTag::U: {
      if (!splits_into_linear_factors(model)) throw InvalidInput("u requires f to split into linear factors");
      g.place = -1;
      g.v[0] = -(2 * model.genus() + 1);
      for (std::size_t i = 0; i < m; ++i)
        if (system.places[i].kind == PlaceKind::Ramified) g.v[i] = 1;
      break;
    }
    case GeneratorTag::GroupRelation:
      throw InvalidInput("relation vectors are not principal divisors of a named function");
  }
  return g;
}

std::vector<std::string> place_labels(const PlaceSystem& system) {
  std::vector<std::string> out;
  for (const auto& pl : system.places) out.push_back(pl.label());
  return out;
}

namespace {

std::vector<GeneratorVector> relation_generators(const IntegerLattice& l) {
  std::vector<GeneratorVector> out;
  for (const auto& r : l.hnf_basis()) out.push_back({GeneratorTag::GroupRelation, -1, r});
  return out;
}

}  // namespace

LatticeBundle build_rational_lattice(int n) {
  LatticeBundle b;
  b.places = rational_place_system(n);
  const auto m = static_cast<std::size_t>(n) + 1;
  IntMat rows;
  for (std::size_t i = 1; i < m; ++i) {
    IntVec v(m, 0);
    v[0] = -1;
    v[i] = 1;
    b.generators.push_back({GeneratorTag::XMinusAlpha, static_cast<int>(i), v});
    rows.push_back(std::move(v));
  }
  b.lattice = IntegerLattice::from_generators(rows, m, place_labels(b.places), true);
  return b;
}

LatticeBundle build_ff_lattice(const HyperellipticModel& model, Selector selector, const JacobianLimits& limits) {
  LatticeBundle b;
  b.model = model;
  switch (selector) {
    case Selector::RationalField:
      throw InvalidInput("rational selector takes --n, not a curve");
    case Selector::RamifiedInert: {
      b.places = place_system(model, selector);
      for (std::size_t i = 0; i < b.places.size(); ++i) {
        const auto kind = b.places.places[i].kind;
        if (kind == PlaceKind::Ramified)
          b.generators.push_back(phi_vector(GeneratorTag::XMinusAlpha, static_cast<int>(i), b.places, model));
        if (kind == PlaceKind::Inert)
          b.generators.push_back(phi_vector(GeneratorTag::XMinusBeta, static_cast<int>(i), b.places, model));
      }
      if (splits_into_linear_factors(model)) b.generators.push_back(phi_vector(GeneratorTag::U, -1, b.places, model));
      IntMat rows;
      for (const auto& g : b.generators) rows.push_back(g.v);
      b.lattice = IntegerLattice::from_generators(rows, b.places.size(), place_labels(b.places), true);
      if (b.lattice.rank() + 1 != b.places.size())
        throw std::logic_error("ramified-inert generators do not have full rank");
      break;
    }
    case Selector::EllipticAllRational: {
      if (!model.is_elliptic()) throw InvalidInput("elliptic selector needs deg f = 3");
      const PointGroup pg = elliptic_point_group(model);
      b.places = pg.places;
      b.lattice = kernel_lattice(pg.group, pg.embedding, b.places.degrees(), place_labels(b.places));
      b.generators = relation_generators(b.lattice);
      break;
    }
    case Selector::HyperellipticAllRational: {
      b.places = place_system(model, selector);
      const Jacobian jac = jacobian_group(model, limits);
      const auto images = jacobian_embedding(model, jac, b.places);
      b.lattice = kernel_lattice(jac.group, images, b.places.degrees(), place_labels(b.places));
      b.generators = relation_generators(b.lattice);
      break;
    }
  }
  return b;
}

IntegerLattice oracle_build_ramified_inert(const HyperellipticModel& model, const JacobianLimits& limits) {
  const PlaceSystem sys = place_system(model, Selector::RamifiedInert);
  if (splits_into_linear_factors(model)) {
    const TwoTorsion tt = two_torsion_classes(model);
    return kernel_lattice(tt.group, tt.embedding, sys.degrees(), place_labels(sys));
  }
  const Jacobian jac = jacobian_group(model, limits);
  return kernel_lattice(jac.group, jacobian_embedding(model, jac, sys), sys.degrees(), place_labels(sys));
}

Int derived_h0(const IntegerLattice& lattice, const std::vector<int>& degrees) {
  if (degrees.size() != lattice.ambient_dim()) throw InvalidInput("degree count differs from ambient dimension");
  const Int idx = index_in(lattice, root_lattice_a(static_cast<int>(degrees.size()) - 1));
  int g = 0;
  Int prod = 1;
  for (int d : degrees) {
    g = std::gcd(g, d);
    prod *= d;
  }
  const Int num = idx * g;
  if (!mpz_divisible_p(num.get_mpz_t(), prod.get_mpz_t())) throw InvalidInput("index is not divisible by the degree product");
  return num / prod;
}

}  // namespace fflat
