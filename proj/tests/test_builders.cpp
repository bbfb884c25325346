#include <doctest.h>

#include "fflat/builders.hpp"
#include "fflat/errors.hpp"
#include "fflat/verify.hpp"

using namespace fflat;

namespace {

IntVec vec(std::vector<long long> v) { return from_ll({v})[0]; }

}  // namespace

TEST_CASE("root lattice A_n") {
  const auto A = root_lattice_a(2);
  CHECK(A.basis() == from_ll({{1, -1, 0}, {0, 1, -1}}));
  CHECK(gram_and_det2(A).det2 == 3);
  for (int n = 2; n <= 12; ++n) CHECK(lattice_equal(build_rational_lattice(n).lattice, root_lattice_a(n)));
  CHECK_THROWS_AS(root_lattice_a(0), InvalidInput);
}

TEST_CASE("Barnes lattice congruence") {
  const auto B4 = barnes_lattice(4);
  CHECK_FALSE(contains(B4, vec({1, 1, -1, -1, 0})));
  CHECK(contains(B4, vec({1, -1, -1, 1, 0})));  // 0 - 1 - 2 + 3 = 0
  for (int n = 2; n <= 8; ++n) {
    const auto B = barnes_lattice(n);
    for (const auto& row : B.basis()) {
      Int s = 0, w = 0;
      for (std::size_t i = 0; i < row.size(); ++i) {
        s += row[i];
        w += row[i] * static_cast<long>(i);
      }
      CHECK(s == 0);
      CHECK(w % (n + 1) == 0);
    }
  }
}

TEST_CASE("scaling") {
  const auto A = root_lattice_a(4);
  CHECK(lattice_equal(scale(A, 1), A));
  CHECK(minimum2(scale(A, 3)) == 9 * minimum2(A));
  CHECK(gram_and_det2(scale(A, 2)).det2 == 256 * 5);
  CHECK_THROWS_AS(scale(A, 0), InvalidInput);
}

TEST_CASE("kernel lattices") {
  for (int n = 2; n <= 7; ++n) {
    std::vector<GroupElement> images;
    for (int i = 0; i <= n; ++i) images.push_back({i});
    CHECK(lattice_equal(kernel_lattice(FiniteAbelianGroup::cyclic(n + 1), images, std::vector<int>(n + 1, 1)),
                        barnes_lattice(n)));
    const std::vector<GroupElement> trivial(static_cast<std::size_t>(n + 1));
    CHECK(lattice_equal(kernel_lattice(FiniteAbelianGroup(), trivial, std::vector<int>(n + 1, 1)), root_lattice_a(n)));
  }
  const auto m = f7_genus2_split_curve();
  const TwoTorsion tt = two_torsion_classes(m);
  const auto ps = place_system(m, Selector::RamifiedInert);
  const auto K = kernel_lattice(tt.group, tt.embedding, ps.degrees());
  CHECK(lattice_equal(K, build_ff_lattice(m, Selector::RamifiedInert).lattice));
}

TEST_CASE("phi vectors of the genus-3 curve") {
  const auto m = f11_curve();
  const auto ps = place_system(m, Selector::RamifiedInert);
  CHECK(phi_vector(GeneratorTag::U, -1, ps, m).v == vec({-7, 1, 1, 1, 1, 1, 1, 1, 0, 0}));
  CHECK(phi_vector(GeneratorTag::XMinusBeta, 8, ps, m).v == vec({-2, 0, 0, 0, 0, 0, 0, 0, 2, 0}));
  CHECK(phi_vector(GeneratorTag::XMinusAlpha, 3, ps, m).v == vec({-2, 0, 0, 2, 0, 0, 0, 0, 0, 0}));
  for (const auto& g : build_ff_lattice(m, Selector::RamifiedInert).generators) {
    Int s = 0;
    for (const auto& x : g.v) s += x;
    CHECK(s == 0);
  }
}

TEST_CASE("function-field lattices from the examples") {
  const auto b = build_ff_lattice(f11_curve(), Selector::RamifiedInert);
  CHECK(b.lattice.rank() == 9);
  CHECK(b.lattice.ambient_dim() == 10);
  CHECK(b.lattice.function_field());
  CHECK(lattice_equal(b.lattice, IntegerLattice(f11_reference_basis())));
  CHECK(b.lattice.labels() == place_labels(b.places));
  CHECK(derived_h0(b.lattice, b.places.degrees()) == 64);
  CHECK(index_in(b.lattice, root_lattice_a(9)) == 256);

  std::size_t nonsplit = 0;
  for (long long c0 = 1; c0 < 7; ++c0)
    for (long long c1 = 0; c1 < 7; ++c1) {
      const std::vector<long long> f{c0, c1, 0, 0, 0, 1};
      if (!is_squarefree(FpPoly(PrimeField(7), f))) continue;
      const HyperellipticModel model(7, f);
      if (splits_into_linear_factors(model)) continue;
      const auto nb = build_ff_lattice(model, Selector::RamifiedInert);
      const int n = static_cast<int>(nb.lattice.rank());
      if (n == 0) continue;
      CHECK(lattice_equal(nb.lattice, scale(root_lattice_a(n), 2)));
      CHECK(lattice_equal(oracle_build_ramified_inert(model), nb.lattice));
      ++nonsplit;
    }
  CHECK(nonsplit > 10);

  const auto e = build_ff_lattice(f5_elliptic_curve(), Selector::EllipticAllRational);
  CHECK(e.lattice.rank() == 8);
  CHECK(gram_and_det2(e.lattice).det2 == 729);
  CHECK(minimum2(e.lattice) == 4);
}

TEST_CASE("oracle construction on the split genus-2 curve") {
  const auto m = f7_genus2_split_curve();
  CHECK(lattice_equal(oracle_build_ramified_inert(m), build_ff_lattice(m, Selector::RamifiedInert).lattice));
  const auto b = build_ff_lattice(m, Selector::RamifiedInert);
  CHECK(derived_h0(b.lattice, b.places.degrees()) == 16);
  CHECK(index_in(b.lattice, root_lattice_a(6)) == 32);
}

TEST_CASE("all-rational lattices through the Jacobian") {
  const auto m = f7_genus2_split_curve();
  const auto b = build_ff_lattice(m, Selector::HyperellipticAllRational);
  const long long h = class_number(m);
  CHECK(derived_h0(b.lattice, b.places.degrees()) == static_cast<long>(h));
  CHECK(gram_and_det2(b.lattice).det2 == Int(static_cast<long>(h)) * static_cast<long>(h) * static_cast<long>(b.places.size()));
}

TEST_CASE("selectors are validated") {
  CHECK(parse_selector("ramified-inert") == Selector::RamifiedInert);
  CHECK(parse_selector("all-rational") == Selector::HyperellipticAllRational);
  CHECK(parse_selector("elliptic") == Selector::EllipticAllRational);
  CHECK(parse_selector("rational") == Selector::RationalField);
  CHECK_FALSE(parse_selector("bogus").has_value());
  CHECK_THROWS_AS(build_ff_lattice(f11_curve(), Selector::EllipticAllRational), InvalidInput);
}
