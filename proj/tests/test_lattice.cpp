#include <doctest.h>

#include <gmpxx.h>

#include <map>
#include <random>
#include <set>

#include "fflat/builders.hpp"
#include "fflat/errors.hpp"
#include "fflat/lattice.hpp"
#include "fflat/verify.hpp"

using namespace fflat;

namespace {

// All nonzero lattice vectors with norm <= bound, both signs, from the box
// |x_i| <= sqrt(bound * (G^-1)_ii) which contains every such coefficient vector.
std::set<IntVec> box_vectors(const IntMat& basis, const Int& bound) {
  const std::size_t n = basis.size();
  IntMat g(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = dot(basis[i], basis[j]);
  const Int det = bareiss_det(g);
  std::vector<long> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntMat minor;
    for (std::size_t a = 0; a < n; ++a) {
      if (a == i) continue;
      IntVec row;
      for (std::size_t b = 0; b < n; ++b)
        if (b != i) row.push_back(g[a][b]);
      minor.push_back(row);
    }
    const Int q = bound * (n == 1 ? Int(1) : bareiss_det(minor)) / det;
    r[i] = Int(sqrt(q)).get_si() + 1;
  }
  std::set<IntVec> out;
  std::vector<long> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -r[i];
  for (;;) {
    IntVec v(basis[0].size(), 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < v.size(); ++c) v[c] += x[i] * basis[i][c];
    if (!is_zero(v) && dot(v, v) <= bound) out.insert(v);
    std::size_t k = 0;
    for (; k < n && ++x[k] > r[k]; ++k) x[k] = -r[k];
    if (k == n) break;
  }
  return out;
}

// Size reduction and Lovasz condition checked with rational Gram-Schmidt.
bool is_lll_reduced(const IntMat& b) {
  const std::size_t n = b.size();
  std::vector<std::vector<mpq_class>> bs(n);
  std::vector<mpq_class> norms(n);
  std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    bs[i].assign(b[i].begin(), b[i].end());
    for (std::size_t j = 0; j < i; ++j) {
      mpq_class d = 0;
      for (std::size_t c = 0; c < b[i].size(); ++c) d += mpq_class(b[i][c]) * bs[j][c];
      mu[i][j] = d / norms[j];
      for (std::size_t c = 0; c < b[i].size(); ++c) bs[i][c] -= mu[i][j] * bs[j][c];
    }
    norms[i] = 0;
    for (const auto& x : bs[i]) norms[i] += x * x;
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (abs(mu[i][j]) > mpq_class(1, 2)) return false;
    if (norms[i] < (mpq_class(3, 4) - mu[i][i - 1] * mu[i][i - 1]) * norms[i - 1]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("gram determinants of named lattices") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(gram_and_det2(root_lattice_a(n)).det2 == n + 1);
    CHECK(gram_and_det2(scale(root_lattice_a(n), 2)).det2 == (Int(1) << (2 * n)) * (n + 1));
  }
  for (int n = 2; n <= 8; ++n) CHECK(gram_and_det2(barnes_lattice(n)).det2 == Int(n + 1) * (n + 1) * (n + 1));
  CHECK_FALSE(gram_and_det2(root_lattice_a(2)).det.has_value());
  CHECK(gram_and_det2(root_lattice_a(3)).det == 2);
  CHECK(gram_and_det2(barnes_lattice(8)).det == 27);
}

TEST_CASE("membership, equality and index") {
  const auto A = root_lattice_a(4);
  const auto A2 = scale(A, 2);
  for (const auto& row : A.basis()) CHECK(contains(A, row));
  CHECK_FALSE(contains(A2, from_ll({{1, -1, 0, 0, 0}})[0]));
  CHECK(contains(A2, from_ll({{2, -2, 0, 0, 0}})[0]));
  CHECK(lattice_equal(A, A));
  CHECK_FALSE(lattice_equal(A, A2));
  for (int n = 1; n <= 6; ++n) {
    CHECK(index_in(scale(root_lattice_a(n), 2), root_lattice_a(n)) == Int(1) << n);
    if (n >= 2) CHECK(index_in(barnes_lattice(n), root_lattice_a(n)) == n + 1);
  }
  CHECK_THROWS_AS(index_in(A, A2), InvalidInput);
  CHECK_THROWS_AS(IntegerLattice(from_ll({{1, 2}, {2, 4}})), InvalidInput);
  // index relation with det2
  const auto L = IntegerLattice(f11_reference_basis());
  const Int idx = index_in(L, root_lattice_a(9));
  CHECK(gram_and_det2(L).det2 == idx * idx * 10);
}

TEST_CASE("LLL output is reduced and spans the same lattice") {
  const IntegerLattice L(f11_reference_basis());
  CHECK(dot(L.basis()[0], L.basis()[0]) == 56);
  const auto R = lll_reduce(L);
  CHECK(lattice_equal(L, R));
  CHECK(is_lll_reduced(R.basis()));
  const auto A = root_lattice_a(5);
  CHECK(lattice_equal(lll_reduce(A), A));
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int t = 0; t < 20; ++t) {
    IntMat m(4, IntVec(5));
    for (auto& r : m)
      for (auto& x : r) x = d(rng);
    if (rank(m) < 4) continue;
    const IntegerLattice M(m);
    const auto red = lll_reduce(M);
    CHECK(lattice_equal(M, red));
    CHECK(is_lll_reduced(red.basis()));
  }
}

TEST_CASE("short vectors against a coefficient box") {
  const auto A2 = root_lattice_a(2);
  const auto sv = enumerate_short(A2, 2);
  CHECK(sv.size() == 3);
  CHECK(box_vectors(A2.basis(), 2).size() == 6);
  CHECK(kissing_number(A2) == 6);
  for (const auto& v : sv) CHECK(v.norm2 == 2);
  for (int n = 1; n <= 6; ++n) CHECK(enumerate_short(scale(root_lattice_a(n), 2), 7).empty());

  std::mt19937 rng(23);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 25; ++t) {
    IntMat m(3, IntVec(3));
    for (auto& r : m)
      for (auto& x : r) x = d(rng);
    if (rank(m) < 3) continue;
    const IntegerLattice L(m);
    const auto box = box_vectors(m, 12);
    std::set<IntVec> found;
    for (const auto& v : enumerate_short(L, 12)) {
      found.insert(v.v);
      found.insert(scaled(v.v, -1));
      CHECK(v.norm2 == dot(v.v, v.v));
    }
    CHECK(found == box);
  }
}

TEST_CASE("enumeration is canonical and guarded") {
  const auto sv = enumerate_short(root_lattice_a(3), 2);
  for (std::size_t i = 0; i + 1 < sv.size(); ++i) CHECK(sv[i].v < sv[i + 1].v);
  for (const auto& v : sv) {
    std::size_t k = 0;
    while (v.v[k] == 0) ++k;
    CHECK(v.v[k] > 0);
  }
  CHECK_THROWS_AS(enumerate_short(root_lattice_a(8), 8, 100), ResourceLimit);
}

TEST_CASE("minima of named and function-field lattices") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(minimum2(root_lattice_a(n)) == 2);
    CHECK(kissing_number(root_lattice_a(n)) == n * (n + 1));
    CHECK(successive_minima2(root_lattice_a(n)).lambda2 == std::vector<Int>(static_cast<std::size_t>(n), 2));
    CHECK(is_well_rounded(root_lattice_a(n)));
    CHECK(minimum2(scale(root_lattice_a(n), 3)) == 18);
  }
  for (int n = 4; n <= 9; ++n) CHECK(minimum2(barnes_lattice(n)) == 4);
  const IntegerLattice F11(f11_reference_basis(), {}, true);
  CHECK(minimum2(F11) == 8);
  CHECK(is_well_rounded(F11));
}

TEST_CASE("minimal-vector bases") {
  const IntegerLattice F11(f11_reference_basis(), {}, true);
  const auto s = minimal_vector_basis(F11);
  REQUIRE(s.basis.has_value());
  CHECK(lattice_equal(IntegerLattice(*s.basis), F11));
  for (const auto& row : *s.basis) CHECK(dot(row, row) == 8);
  const auto A2 = scale(root_lattice_a(5), 2);
  const auto t = minimal_vector_basis(A2);
  REQUIRE(t.basis.has_value());
  CHECK(lattice_equal(IntegerLattice(*t.basis), A2));
  // Z x 2Z is not well rounded
  CHECK_FALSE(minimal_vector_basis(IntegerLattice(from_ll({{1, 0}, {0, 2}}))).basis.has_value());
}

TEST_CASE("dual short vectors of A_n^* against projections of the cube") {
  for (int n = 2; n <= 6; ++n) {
    // (n+1) * projection of x in {-1,0,1}^{n+1} onto the sum-zero hyperplane
    std::set<std::vector<long>> proj;
    const long N = n + 1;
    std::vector<long> x(static_cast<std::size_t>(N), -1);
    for (;;) {
      long s = 0, sq = 0;
      for (long v : x) {
        s += v;
        sq += v * v;
      }
      // |proj|^2 = sq - s^2/N <= n/N
      if (sq * N - s * s <= n && sq * N - s * s > 0) {
        std::vector<long> w;
        for (long v : x) w.push_back(N * v - s);
        proj.insert(w);
      }
      std::size_t k = 0;
      for (; k < x.size() && ++x[k] > 1; ++k) x[k] = -1;
      if (k == x.size()) break;
    }
    CHECK(dual_short_vector_count(root_lattice_a(n), n, n + 1) == static_cast<long>(proj.size()));
    CHECK(proj.size() == static_cast<std::size_t>(2 * N));
  }
  const auto sd = scaled_dual(root_lattice_a(3));
  CHECK(sd.scale == 4);
  CHECK(minimum2(sd.lattice) == 12);
}

TEST_CASE("rational rank") {
  CHECK(rational_rank(from_ll({{1, 2, 3}, {2, 4, 6}, {0, 1, 0}})) == 2);
  CHECK(rational_rank({}) == 0);
}
