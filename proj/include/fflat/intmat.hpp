#pragma once

// Exact integer matrices: Hermite and Smith normal forms, fraction-free
// determinants, integer kernels. Rows are the unit of work throughout.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace fflat {

using Int = mpz_class;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

IntMat identity_matrix(std::size_t n);
IntMat transpose(const IntMat& a, std::size_t cols = 0);
IntMat matmul(const IntMat& a, const IntMat& b);
Int dot(const IntVec& a, const IntVec& b);
IntVec scaled(const IntVec& v, const Int& c);
bool is_zero(const IntVec& v);

IntMat from_ll(const std::vector<std::vector<long long>>& rows);
std::vector<std::vector<long long>> to_ll(const IntMat& m);

/// Row-style Hermite normal form with zero rows removed. Pivots are positive,
/// strictly move right, and entries above a pivot lie in [0, pivot).
IntMat hnf(const IntMat& a);

/// Column index of the leading nonzero entry of each HNF row.
std::vector<std::size_t> hnf_pivots(const IntMat& h);

/// Solve v = c * h for integer c when h is in HNF; nullopt if v is not in the row lattice.
std::optional<IntVec> solve_in_hnf(const IntMat& h, const IntVec& v);

struct SmithForm {
  IntMat d;  // diagonal, d_i | d_{i+1}, nonnegative
  IntMat u;  // unimodular, rows x rows
  IntMat v;  // unimodular, cols x cols
  std::vector<Int> diagonal() const;
};

/// d = u * a * v.
SmithForm snf(const IntMat& a);

/// Determinant of a square matrix by Bareiss fraction-free elimination.
Int bareiss_det(const IntMat& a);

/// Rank over Q.
std::size_t rank(const IntMat& a);

/// Basis (HNF) of {y in Z^rows : y * a = 0}.
IntMat left_kernel(const IntMat& a);

Int gcd_all(const IntVec& v);

std::string to_string(const IntVec& v);

}  // namespace fflat
