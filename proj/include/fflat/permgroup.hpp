#pragma once

// Permutations and Schreier-Sims stabilizer chains.

#include <cstdint>
#include <string>
#include <vector>

#include "fflat/intmat.hpp"

namespace fflat {

/// image[i] = image of point i. Products apply the left factor first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> image);
  static Permutation identity(std::size_t degree);
  static Permutation transposition(std::size_t degree, std::size_t a, std::size_t b);

  std::size_t degree() const { return image_.size(); }
  std::uint32_t operator()(std::size_t i) const { return image_[i]; }
  const std::vector<std::uint32_t>& image() const { return image_; }
  bool is_identity() const;

  Permutation operator*(const Permutation& then) const;
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return image_ < o.image_; }
  std::string to_string() const;

 private:
  std::vector<std::uint32_t> image_;
};

/// Deterministic Schreier-Sims. Base points are chosen as the smallest moved point.
class PermutationGroup {
 public:
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  Int order() const;
  bool contains(const Permutation& g) const;
  std::vector<std::size_t> base() const;
  std::vector<std::size_t> orbit_sizes() const;

 private:
  struct Level {
    std::size_t point;
    std::vector<Permutation> strong;            // strong generators first needed at this level
    std::vector<int> transversal;               // index into reps, -1 if not in orbit
    std::vector<Permutation> reps;              // reps[k] maps point to orbit[k]
    std::vector<std::size_t> orbit;
  };

  void rebuild(std::size_t level);
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;
  bool close_level(std::size_t level);

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
};

Int schreier_sims_order(std::size_t degree, const std::vector<Permutation>& generators);

/// Orbit of `point` under the generators, in discovery order.
std::vector<std::size_t> orbit_of(std::size_t point, const std::vector<Permutation>& generators, std::size_t degree);

}  // namespace fflat
