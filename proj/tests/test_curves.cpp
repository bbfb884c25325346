#include <doctest.h>

#include <cmath>
#include <set>

#include "fflat/curves.hpp"
#include "fflat/errors.hpp"
#include "fflat/verify.hpp"

using namespace fflat;

namespace {

int chi(const PrimeField& F, long long a) { return legendre_symbol(F.reduce(a), F); }

// Affine points by brute force.
std::vector<std::pair<Residue, Residue>> affine_points(const HyperellipticModel& m) {
  std::vector<std::pair<Residue, Residue>> pts;
  const auto& F = m.field();
  for (Residue x = 0; x < m.p(); ++x)
    for (Residue y = 0; y < m.p(); ++y)
      if (F.mul(y, y) == m.f().eval(x)) pts.emplace_back(x, y);
  return pts;
}

// Points over F_{p^2} = F_p[i]/(i^2 - n), n a nonresidue.
long long count_points_fp2(const HyperellipticModel& m) {
  const auto& F = m.field();
  const std::uint64_t p = m.p();
  Residue n = 2;
  while (legendre_symbol(n, F) != -1) ++n;
  using E = std::pair<Residue, Residue>;
  auto mul = [&](E a, E b) {
    return E{F.add(F.mul(a.first, b.first), F.mul(n, F.mul(a.second, b.second))),
             F.add(F.mul(a.first, b.second), F.mul(a.second, b.first))};
  };
  auto pw = [&](E a, std::uint64_t e) {
    E r{1, 0};
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  };
  const std::uint64_t q = p * p;
  long long total = static_cast<long long>(q) + 1;
  const auto& c = m.f().coeffs();
  for (Residue x0 = 0; x0 < p; ++x0)
    for (Residue x1 = 0; x1 < p; ++x1) {
      E v{0, 0};
      for (auto it = c.rbegin(); it != c.rend(); ++it) {
        v = mul(v, E{x0, x1});
        v.first = F.add(v.first, *it);
      }
      if (v == E{0, 0}) continue;
      total += pw(v, (q - 1) / 2) == E{1, 0} ? 1 : -1;
    }
  return total;
}

// Genus-2 class number from the zeta function: h = (N1^2 + N2)/2 - p.
long long lpoly_class_number_g2(const HyperellipticModel& m) {
  long long n1 = m.p() + 1;
  for (Residue x = 0; x < m.p(); ++x) n1 += chi(m.field(), m.f().eval(x));
  return (n1 * n1 + count_points_fp2(m)) / 2 - m.p();
}

}  // namespace

TEST_CASE("model validation") {
  CHECK_THROWS_AS(HyperellipticModel(11, {9, 0, 2, 4, 9, 3, 5, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(HyperellipticModel(4, {1, 1, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(HyperellipticModel(7, {0, 0, 1, 1}), InvalidInput);
  CHECK(f11_curve().genus() == 3);
  CHECK(f5_elliptic_curve().is_elliptic());
}

TEST_CASE("place classification") {
  auto c = classify_places(f11_curve());
  CHECK(c.ramified.size() == 7);
  CHECK(c.inert.size() == 2);
  CHECK(c.split.size() == 2);
  c = classify_places(f7_genus2_split_curve());
  CHECK(c.ramified.size() == 5);
  CHECK(c.inert == std::vector<Residue>{6});
  CHECK(c.split == std::vector<Residue>{5});
  c = classify_places(HyperellipticModel(5, {0, -1, 0, 0, 0, 1}));
  CHECK(c.ramified.size() == 5);
  CHECK(c.inert.empty());
  CHECK(c.split.empty());
}

TEST_CASE("place systems order coordinates") {
  const auto ps = place_system(f11_curve(), Selector::RamifiedInert);
  CHECK(ps.size() == 10);
  CHECK(ps.r == 8);
  CHECK(ps.s == 2);
  CHECK(ps.places[0].kind == PlaceKind::Infinity);
  CHECK(ps.degrees() == std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 2, 2});
  const auto all = place_system(f11_curve(), Selector::HyperellipticAllRational);
  CHECK(all.size() == 12);
  CHECK(all.t == 2);
  for (const auto& pl : all.places)
    if (pl.kind == PlaceKind::Split) CHECK(f11_curve().field().mul(pl.y, pl.y) == f11_curve().f().eval(pl.x));
}

TEST_CASE("elliptic point group against brute force") {
  const auto m = f5_elliptic_curve();
  const auto pts = affine_points(m);
  const PointGroup pg = elliptic_point_group(m);
  CHECK(pg.points.size() == pts.size() + 1);
  CHECK(pg.points.size() == 9);
  // element orders by repeated addition
  std::size_t max_order = 0;
  for (const auto& P : pg.points) {
    EllipticPoint acc = P;
    std::size_t k = 1;
    while (acc.has_value()) {
      acc = chord_tangent_add(m, acc, P);
      ++k;
    }
    max_order = std::max(max_order, k);
  }
  CHECK(max_order == 9);
  CHECK(pg.group == FiniteAbelianGroup::cyclic(9));
  CHECK(class_number(m) == 9);
  CHECK(jacobian_group(m).group.order() == 9);
}

TEST_CASE("cantor addition agrees with chord-tangent on an elliptic curve") {
  const auto m = f5_elliptic_curve();
  const auto& F = m.field();
  std::vector<EllipticPoint> pts{std::nullopt};
  for (const auto& pt : affine_points(m)) pts.emplace_back(pt);
  auto to_mumford = [&](const EllipticPoint& P) {
    return P ? mumford_point(m, P->first, P->second) : mumford_identity(m);
  };
  for (const auto& P : pts)
    for (const auto& Q : pts) {
      const EllipticPoint R = chord_tangent_add(m, P, Q);
      CHECK(cantor_add(m, to_mumford(P), to_mumford(Q)) == to_mumford(R));
    }
  (void)F;
}

TEST_CASE("cantor addition of two points matches interpolation on genus 2") {
  const auto m = f7_genus2_split_curve();
  const auto& F = m.field();
  const auto pts = affine_points(m);
  std::size_t checked = 0;
  for (const auto& [a1, b1] : pts)
    for (const auto& [a2, b2] : pts) {
      if (a1 == a2) continue;
      const FpPoly u = FpPoly::linear_root(F, a1) * FpPoly::linear_root(F, a2);
      const Residue slope = F.mul(F.sub(b2, b1), F.inv(F.sub(a2, a1)));
      const FpPoly v = FpPoly::constant(F, b1) + FpPoly::linear_root(F, a1).scaled(slope);
      const MumfordDivisor d = cantor_add(m, mumford_point(m, a1, b1), mumford_point(m, a2, b2));
      CHECK(d.u == u);
      CHECK(d.v == v);
      CHECK(is_valid_mumford(m, d));
      ++checked;
    }
  CHECK(checked > 0);
}

TEST_CASE("cantor group laws") {
  const auto m = f7_genus2_split_curve();
  const Jacobian jac = jacobian_group(m);
  const auto e = mumford_identity(m);
  for (const auto& d : jac.classes) {
    CHECK(is_valid_mumford(m, d));
    CHECK(cantor_add(m, d, e) == d);
    CHECK(cantor_add(m, d, mumford_negate(m, d)) == e);
    CHECK(cantor_times(m, d, static_cast<long long>(jac.classes.size())) == e);
  }
}

TEST_CASE("jacobian order agrees with the zeta function") {
  CHECK(jacobian_group(f7_genus2_split_curve()).group.order() == lpoly_class_number_g2(f7_genus2_split_curve()));
  const auto m37 = f37_genus2_curve();
  const long long h = class_number(m37);
  CHECK(h == lpoly_class_number_g2(m37));
  const auto [lo, hi] = hasse_weil_interval(37, 2);
  CHECK(lo == static_cast<long long>(std::ceil(std::pow(std::sqrt(37.0) - 1, 4))));
  CHECK(hi == static_cast<long long>(std::floor(std::pow(std::sqrt(37.0) + 1, 4))));
  CHECK(h >= lo);
  CHECK(h <= hi);
}

TEST_CASE("jacobian guard") {
  JacobianLimits tight;
  tight.max_candidates = 10;
  CHECK_THROWS_AS(jacobian_group(f37_genus2_curve(), tight), ResourceLimit);
  CHECK_THROWS_AS(jacobian_group(HyperellipticModel(53, {1, 1, 0, 1})), ResourceLimit);
}

TEST_CASE("ramified classes are 2-torsion and span (Z/2)^{2g} when f splits") {
  const auto m = f7_genus2_split_curve();
  const Jacobian jac = jacobian_group(m);
  const auto ps = place_system(m, Selector::RamifiedInert);
  const auto emb = jacobian_embedding(m, jac, ps);
  std::set<GroupElement> span{jac.group.zero()};
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps.places[i].kind == PlaceKind::Inert) continue;
    CHECK(jac.group.is_zero(jac.group.times(emb[i], 2)));
    std::set<GroupElement> next = span;
    for (const auto& g : span) next.insert(jac.group.add(g, emb[i]));
    span = next;
  }
  CHECK(span.size() == 16);

  const TwoTorsion tt = two_torsion_classes(m);
  CHECK(tt.group.order() == 16);
  CHECK(tt.embedding[0] == GroupElement{0, 0, 0, 0});
  CHECK(tt.embedding[5] == GroupElement{1, 1, 1, 1});
  CHECK(splits_into_linear_factors(f11_curve()));
  CHECK_FALSE(splits_into_linear_factors(f37_genus2_curve()));
  CHECK_THROWS_AS(two_torsion_classes(f37_genus2_curve()), InvalidInput);
}

TEST_CASE("reduced ramified counts and semi-reduced form") {
  CHECK(semi_reduced_canonical({3, -2, 1}) == std::vector<int>{1, 0, 1});
  CHECK(semi_reduced_canonical({0, 0, 0}) == std::vector<int>{0, 0, 0});
  CHECK(count_reduced_ramified(3) == 64);
  CHECK(count_reduced_ramified(1) == 4);
  CHECK(count_reduced_ramified(5) == 1024);
}

TEST_CASE("Hasse-Weil condition and gonality") {
  CHECK(hasse_weil_condition(37, 2));
  CHECK_FALSE(hasse_weil_condition(31, 2));
  CHECK(hasse_weil_condition(5, 1));
  CHECK(gonality(Selector::RationalField) == 1);
  CHECK(gonality(Selector::RamifiedInert) == 2);
  CHECK(gonality(Selector::HyperellipticAllRational) == 2);
}
