#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace fflat {

/// Element of a FiniteAbelianGroup: one residue per invariant factor.
using GroupElement = std::vector<long long>;

/// Z/n_1 x ... x Z/n_k with n_1 | n_2 | ... | n_k and every n_i > 1.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<long long> invariant_factors);

  /// Cyclic group Z/n (trivial group for n = 1).
  static FiniteAbelianGroup cyclic(long long n);

  const std::vector<long long>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  long long order() const;

  GroupElement zero() const { return GroupElement(factors_.size(), 0); }
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement times(const GroupElement& a, long long k) const;
  GroupElement normalize(const GroupElement& a) const;
  bool is_zero(const GroupElement& a) const;
  long long element_order(const GroupElement& a) const;

  /// Mixed-radix index in [0, order()).
  long long index_of(const GroupElement& a) const;
  GroupElement element_at(long long index) const;

  std::string to_string() const;
  bool operator==(const FiniteAbelianGroup&) const = default;

 private:
  std::vector<long long> factors_;
};

/// A finite abelian group given by an addition table on element indices,
/// identified with its invariant-factor form.
struct AbelianStructure {
  FiniteAbelianGroup group;
  std::vector<GroupElement> coords;  // coords[i] = image of element i
};

/// Computes the structure of the abelian group with elements 0..size-1,
/// neutral element `identity` and law `add`. Generators are taken greedily
/// in index order; the relation lattice is put in Smith form to obtain
/// invariant factors and coordinates.
AbelianStructure abelian_structure(std::size_t size, std::size_t identity,
                                   const std::function<std::size_t(std::size_t, std::size_t)>& add);

long long euler_phi(long long n);

}  // namespace fflat
