#pragma once

// Exact integer lattices: Gram data, membership, LLL, short-vector
// enumeration, successive minima and duals.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fflat/intmat.hpp"

namespace fflat {

inline constexpr std::size_t kDefaultMaxEnum = 1'000'000;

/// Lattice spanned by the rows of an integer basis in Z^m.
class IntegerLattice {
 public:
  IntegerLattice() = default;
  /// Rows must be linearly independent (InvalidInput otherwise).
  explicit IntegerLattice(IntMat basis, std::vector<std::string> labels = {}, bool function_field = false);
  /// Lattice generated by arbitrary (possibly dependent) rows; basis is their HNF.
  static IntegerLattice from_generators(const IntMat& rows, std::size_t ambient_dim,
                                        std::vector<std::string> labels = {}, bool function_field = false);

  std::size_t rank() const { return basis_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const IntMat& basis() const { return basis_; }
  const IntMat& hnf_basis() const { return hnf_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Function-field lattices are even; enumeration asserts it.
  bool function_field() const { return function_field_; }

  IntegerLattice with_basis(IntMat basis) const;

 private:
  IntMat basis_;
  IntMat hnf_;
  std::size_t ambient_ = 0;
  std::vector<std::string> labels_;
  bool function_field_ = false;
};

struct GramData {
  IntMat gram;
  Int det2;
  std::optional<Int> det;  // exact square root of det2 when it is a perfect square
};

GramData gram_and_det2(const IntegerLattice& lattice);

bool contains(const IntegerLattice& lattice, const IntVec& v);
/// Coefficients of v in the HNF basis, if v lies in the lattice.
std::optional<IntVec> hnf_coordinates(const IntegerLattice& lattice, const IntVec& v);
bool lattice_equal(const IntegerLattice& a, const IntegerLattice& b);
/// [M : L] for L contained in M of equal rank; InvalidInput otherwise.
Int index_in(const IntegerLattice& sub, const IntegerLattice& super);

/// Integral LLL data: basis rows, d[0..n] with d[0] = 1 and d[i] = det Gram of
/// the first i rows, lambda[i][j] = d[j+1] * mu_ij for j < i.
struct LllData {
  IntMat basis;
  std::vector<Int> d;
  std::vector<std::vector<Int>> lambda;
};

/// Lovasz condition with delta = num/den (default 3/4), exact integer arithmetic.
LllData lll_data(const IntMat& basis, long delta_num = 3, long delta_den = 4);
IntegerLattice lll_reduce(const IntegerLattice& lattice, long delta_num = 3, long delta_den = 4);

struct LatticeVector {
  IntVec v;
  Int norm2;
};

/// All v != 0 with |v|^2 <= bound2, one of each +-v pair, first nonzero entry
/// positive, sorted lexicographically. ResourceLimit past max_vectors.
std::vector<LatticeVector> enumerate_short(const IntegerLattice& lattice, const Int& bound2,
                                           std::size_t max_vectors = kDefaultMaxEnum);

Int minimum2(const IntegerLattice& lattice, std::size_t max_vectors = kDefaultMaxEnum);
/// Minimal vectors up to sign, canonical order.
std::vector<IntVec> minimal_vectors(const IntegerLattice& lattice, std::size_t max_vectors = kDefaultMaxEnum);
/// Counts both signs.
Int kissing_number(const IntegerLattice& lattice, std::size_t max_vectors = kDefaultMaxEnum);

struct MinimaProfile {
  std::vector<Int> lambda2;
  std::vector<IntVec> witnesses;
};

MinimaProfile successive_minima2(const IntegerLattice& lattice, std::size_t max_vectors = kDefaultMaxEnum);

/// Rank of the row space over Q.
std::size_t rational_rank(const std::vector<IntVec>& rows);

bool is_well_rounded(const IntegerLattice& lattice, std::size_t max_vectors = kDefaultMaxEnum);

struct BasisSearch {
  std::optional<IntMat> basis;  // nullopt = NotFound (exhaustive)
  std::size_t nodes = 0;
};

/// Basis consisting of minimal vectors, by backtracking with a primitivity test.
BasisSearch minimal_vector_basis(const IntegerLattice& lattice, std::size_t max_nodes = 2'000'000,
                                 std::size_t max_vectors = kDefaultMaxEnum);

/// Integer lattice c * L^* (c minimal) whose rows span the dual lattice scaled by c.
struct ScaledDual {
  IntegerLattice lattice;
  Int scale;
};
ScaledDual scaled_dual(const IntegerLattice& lattice);

/// Number of dual vectors w (both signs) with |w|^2 <= num/den.
Int dual_short_vector_count(const IntegerLattice& lattice, const Int& bound_num, const Int& bound_den,
                            std::size_t max_vectors = kDefaultMaxEnum);

}  // namespace fflat
