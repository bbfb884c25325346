#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "fflat/autgroup.hpp"
#include "fflat/builders.hpp"
#include "fflat/errors.hpp"
#include "fflat/verify.hpp"

using namespace fflat;

namespace {

// Closure of the generators by breadth-first multiplication.
std::size_t closure_size(const std::vector<Permutation>& gens, std::size_t degree) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        const Permutation q = p * g;
        if (seen.insert(q).second) next.push_back(q);
      }
    frontier.swap(next);
  }
  return seen.size();
}

// Isometries by brute force: images of the basis among short vectors with matching Gram matrix.
std::size_t brute_isometries(const IntegerLattice& l) {
  const auto& b = l.basis();
  Int bound = 0;
  for (const auto& r : b) bound = std::max(bound, Int(dot(r, r)));
  std::vector<IntVec> shell;
  for (const auto& v : enumerate_short(l, bound)) {
    shell.push_back(v.v);
    shell.push_back(scaled(v.v, -1));
  }
  std::size_t count = 0;
  std::vector<std::size_t> pick;
  std::function<void()> rec = [&]() {
    const std::size_t i = pick.size();
    if (i == b.size()) {
      ++count;
      return;
    }
    for (std::size_t k = 0; k < shell.size(); ++k) {
      if (dot(shell[k], shell[k]) != dot(b[i], b[i])) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = dot(shell[k], shell[pick[j]]) == dot(b[i], b[j]);
      if (!ok) continue;
      pick.push_back(k);
      rec();
      pick.pop_back();
    }
  };
  rec();
  return count;
}

}  // namespace

TEST_CASE("permutations compose left to right") {
  const Permutation a({1, 2, 0});
  const Permutation t = Permutation::transposition(3, 0, 1);
  const Permutation at = a * t;
  for (std::size_t i = 0; i < 3; ++i) CHECK(at(i) == t(a(i)));
  CHECK((a * a.inverse()).is_identity());
}

TEST_CASE("Schreier-Sims orders") {
  const std::vector<Permutation> s4{Permutation({1, 2, 3, 0}), Permutation::transposition(4, 0, 1)};
  CHECK(schreier_sims_order(4, s4) == 24);
  CHECK(schreier_sims_order(5, {}) == 1);
  // affine group of Z/12
  std::vector<Permutation> aff;
  std::vector<std::uint32_t> shift(12);
  for (std::uint32_t i = 0; i < 12; ++i) shift[i] = (i + 1) % 12;
  aff.emplace_back(shift);
  for (std::uint32_t u : {5u, 7u, 11u}) {
    std::vector<std::uint32_t> m(12);
    for (std::uint32_t i = 0; i < 12; ++i) m[i] = (u * i) % 12;
    aff.emplace_back(m);
  }
  CHECK(schreier_sims_order(12, aff) == 48);
  CHECK(closure_size(aff, 12) == 48);
  const PermutationGroup g(12, aff);
  CHECK(g.contains(Permutation(shift)));
  CHECK_FALSE(g.contains(Permutation::transposition(12, 0, 1)));
  const std::vector<Permutation> d5{Permutation({1, 2, 3, 4, 0}), Permutation({0, 4, 3, 2, 1})};
  CHECK(schreier_sims_order(5, d5) == static_cast<long>(closure_size(d5, 5)));
}

TEST_CASE("coordinate permutation stabilizers") {
  for (int n = 1; n <= 5; ++n) {
    Int f = 1;
    for (int k = 2; k <= n + 1; ++k) f *= k;
    CHECK(perm_stabilizer(root_lattice_a(n)).order == f);
    CHECK(perm_stabilizer(scale(root_lattice_a(n), 2)).order == f);
  }
  // brute force over S_4 for A_3
  std::vector<std::uint32_t> im{0, 1, 2, 3};
  std::size_t count = 0;
  do {
    if (stabilizes(root_lattice_a(3), Permutation(im))) ++count;
  } while (std::next_permutation(im.begin(), im.end()));
  CHECK(count == 24);
  // Barnes B_6: brute force over S_7
  std::vector<std::uint32_t> im7{0, 1, 2, 3, 4, 5, 6};
  count = 0;
  const auto B6 = barnes_lattice(6);
  do {
    if (stabilizes(B6, Permutation(im7))) ++count;
  } while (std::next_permutation(im7.begin(), im7.end()));
  CHECK(perm_stabilizer(B6).order == static_cast<long>(count));
  CHECK(perm_stabilizer(barnes_lattice(11)).order == 48);
  CHECK_THROWS_AS(perm_stabilizer(root_lattice_a(20), 14), ResourceLimit);
}

TEST_CASE("isometry groups against brute force") {
  CHECK(isometry_group_order(root_lattice_a(2)).order == 12);
  CHECK(brute_isometries(root_lattice_a(2)) == 12);
  CHECK(isometry_group_order(root_lattice_a(3)).order == static_cast<long>(brute_isometries(root_lattice_a(3))));
  const auto B5 = barnes_lattice(5);
  CHECK(isometry_group_order(B5).order == static_cast<long>(brute_isometries(B5)));
  const auto Z2 = IntegerLattice(from_ll({{1, 0}, {0, 2}}));
  CHECK(isometry_group_order(Z2).order == 4);
  const auto rep = isometry_group_order(IntegerLattice(f11_reference_basis()));
  CHECK(rep.order == 161280);
  CHECK(rep.factored == std::vector<std::pair<Int, int>>{{2, 9}, {3, 2}, {5, 1}, {7, 1}});
  CHECK(rep.includes_minus_id);
}

TEST_CASE("isometry generators preserve the Gram matrix") {
  const auto L = barnes_lattice(5);
  const auto rep = isometry_group_order(L);
  const IntMat& h = L.hnf_basis();
  IntMat g(h.size(), IntVec(h.size()));
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j) g[i][j] = dot(h[i], h[j]);
  for (const auto& m : rep.generators) CHECK(matmul(matmul(m, g), transpose(m)) == g);
}

TEST_CASE("factorization") {
  CHECK(factor_integer(161280) == std::vector<std::pair<Int, int>>{{2, 9}, {3, 2}, {5, 1}, {7, 1}});
  CHECK(factor_integer(1).empty());
}

TEST_CASE("automorphisms of small abelian groups") {
  CHECK(abelian_automorphism_group(FiniteAbelianGroup::cyclic(8)).order == 4);
  CHECK(abelian_automorphism_group(FiniteAbelianGroup({2, 2})).order == 6);
  CHECK(abelian_automorphism_group(FiniteAbelianGroup({2, 4})).order == 8);
  for (const auto& g : {FiniteAbelianGroup::cyclic(9), FiniteAbelianGroup::cyclic(12), FiniteAbelianGroup({2, 2}),
                        FiniteAbelianGroup({2, 4}), FiniteAbelianGroup({3, 9}), FiniteAbelianGroup({2, 6})})
    CHECK(abelian_automorphism_group(g).order == abelian_automorphism_order_formula(g));
}

TEST_CASE("elliptic translations and automorphisms") {
  const auto m = f5_elliptic_curve();
  const auto pg = elliptic_point_group(m);
  const auto b = build_ff_lattice(m, Selector::EllipticAllRational);
  const auto sc = elliptic_subgroup_check(b.lattice, pg.group, pg.embedding);
  CHECK(sc.all_stabilize);
  CHECK(sc.order == 54);
  CHECK(sc.expected == 54);
}

TEST_CASE("Mobius permutations of the projective line") {
  const auto g3 = mobius_induced_perms(3);
  CHECK(g3.order == 24);
  CHECK(g3.elements.size() == 24);
  CHECK(g3.fixing_all == 1);
  const auto g5 = mobius_induced_perms(5);
  CHECK(g5.order == 120);
  CHECK(g5.order < 720);
  for (const auto& p : g5.elements) CHECK(stabilizes(root_lattice_a(5), p));
}

TEST_CASE("hyperelliptic transposition subgroups") {
  const auto b = build_ff_lattice(f11_curve(), Selector::RamifiedInert);
  const auto sc = hyperelliptic_subgroup_check(b.lattice, b.places);
  CHECK(sc.all_stabilize);
  CHECK(sc.order == 80640);
  const auto b2 = build_ff_lattice(f7_genus2_split_curve(), Selector::RamifiedInert);
  const auto sc2 = hyperelliptic_subgroup_check(b2.lattice, b2.places);
  CHECK(sc2.all_stabilize);
  CHECK(sc2.order == 720);
  CHECK_FALSE(stabilizes(b.lattice, Permutation::transposition(10, 1, 8)));
}

TEST_CASE("isometry order bounds and invariance") {
  for (const auto& L : {root_lattice_a(3), barnes_lattice(5), scale(root_lattice_a(4), 2),
                        IntegerLattice(from_ll({{1, 1, 0}, {0, 2, 1}}))}) {
    const Int iso = isometry_group_order(L).order;
    CHECK(perm_stabilizer(L).order * 2 <= iso);
    CHECK(isometry_group_order(scale(L, 3)).order == iso);
    // reverse the coordinates
    IntMat rev;
    for (auto row : L.basis()) {
      std::reverse(row.begin(), row.end());
      rev.push_back(row);
    }
    CHECK(isometry_group_order(IntegerLattice(rev)).order == iso);
  }
}
