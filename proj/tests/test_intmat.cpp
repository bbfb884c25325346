#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fflat/intmat.hpp"

using namespace fflat;

namespace {

// Leibniz expansion.
Int leibniz_det(const IntMat& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Int total = 0;
  do {
    Int term = 1;
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      term *= a[i][perm[i]];
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    }
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

IntMat random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  IntMat m(rows, IntVec(cols));
  for (auto& r : m)
    for (auto& x : r) x = d(rng);
  return m;
}

}  // namespace

TEST_CASE("bareiss determinant matches Leibniz expansion") {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + t % 5;
    const IntMat a = random_matrix(rng, n, n, 9);
    CHECK(bareiss_det(a) == leibniz_det(a));
  }
  CHECK(bareiss_det(from_ll({{0, 1}, {1, 0}})) == -1);
  CHECK(bareiss_det(from_ll({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("hermite normal form") {
  CHECK(hnf(identity_matrix(4)) == identity_matrix(4));
  const IntMat h = hnf(from_ll({{2, 4}, {6, 8}}));
  CHECK(h == from_ll({{2, 0}, {0, 4}}));
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    const IntMat a = random_matrix(rng, 4, 5, 6);
    const IntMat h2 = hnf(a);
    const auto piv = hnf_pivots(h2);
    for (std::size_t i = 0; i < h2.size(); ++i) {
      CHECK(h2[i][piv[i]] > 0);
      if (i) CHECK(piv[i] > piv[i - 1]);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(h2[k][piv[i]] >= 0);
        CHECK(h2[k][piv[i]] < h2[i][piv[i]]);
      }
    }
    // same row lattice: every row of a is an integer combination of h2 and vice versa
    for (const auto& row : a) CHECK(solve_in_hnf(h2, row).has_value());
    CHECK(hnf(h2) == h2);
    CHECK(h2.size() == rank(a));
  }
}

TEST_CASE("smith normal form with transforms") {
  const SmithForm s = snf(from_ll({{2, 4}, {6, 8}}));
  CHECK(s.diagonal() == std::vector<Int>{2, 4});
  CHECK(snf(identity_matrix(3)).diagonal() == std::vector<Int>{1, 1, 1});
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    const IntMat a = random_matrix(rng, 3 + t % 2, 4, 5);
    const SmithForm f = snf(a);
    CHECK(matmul(matmul(f.u, a), f.v) == f.d);
    CHECK(abs(bareiss_det(f.u)) == 1);
    CHECK(abs(bareiss_det(f.v)) == 1);
    const auto d = f.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      if (d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
  }
}

TEST_CASE("basis of 2A_n in A_n coordinates has Smith form 2I") {
  for (std::size_t n = 1; n <= 6; ++n) {
    IntMat m = identity_matrix(n);
    for (auto& r : m)
      for (auto& x : r) x *= 2;
    const auto d = snf(m).diagonal();
    Int prod = 1;
    for (const auto& x : d) {
      CHECK(x == 2);
      prod *= x;
    }
    CHECK(prod == Int(1) << static_cast<unsigned>(n));
  }
}

TEST_CASE("left kernel annihilates and is saturated") {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const IntMat a = random_matrix(rng, 5, 3, 4);
    const IntMat k = left_kernel(a);
    CHECK(k.size() == 5 - rank(a));
    for (const auto& y : k) CHECK(is_zero(matmul(IntMat{y}, a)[0]));
    if (!k.empty()) CHECK(snf(k).diagonal() == std::vector<Int>(k.size(), 1));
  }
}
