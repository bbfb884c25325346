#include "fflat/permgroup.hpp"

#include <sstream>

#include "fflat/errors.hpp"

namespace fflat {

Permutation::Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (auto x : image_) {
    if (x >= image_.size() || seen[x]) throw InvalidInput("permutation image is not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> im(degree);
  for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.image_ = std::move(im);
  return p;
}

Permutation Permutation::transposition(std::size_t degree, std::size_t a, std::size_t b) {
  Permutation p = identity(degree);
  std::swap(p.image_.at(a), p.image_.at(b));
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& then) const {
  if (then.degree() != degree()) throw InvalidInput("permutation degrees differ");
  Permutation p;
  p.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) p.image_[i] = then.image_[image_[i]];
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) p.image_[image_[i]] = static_cast<std::uint32_t>(i);
  return p;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < image_.size(); ++i) os << (i ? "," : "") << image_[i];
  os << ']';
  return os.str();
}

std::vector<std::size_t> orbit_of(std::size_t point, const std::vector<Permutation>& generators, std::size_t degree) {
  std::vector<char> seen(degree, 0);
  std::vector<std::size_t> orbit{point};
  seen[point] = 1;
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (const auto& g : generators) {
      const std::size_t y = g(orbit[k]);
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
  return orbit;
}

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw InvalidInput("generator degree differs from group degree");
  for (const auto& g : generators_) {
    if (g.is_identity()) continue;
    auto [h, j] = strip(g, 0);
    if (h.is_identity()) continue;
    if (j == levels_.size()) {
      std::size_t pt = 0;
      while (h(pt) == pt) ++pt;
      levels_.push_back(Level{pt, {}, {}, {}, {}});
    }
    levels_[j].strong.push_back(h);
    for (std::size_t l = 0; l <= j; ++l) rebuild(l);
  }
  // saturate: every Schreier generator must strip to the identity
  for (;;) {
    bool changed = false;
    for (std::size_t l = levels_.size(); l-- > 0;)
      if (close_level(l)) {
        changed = true;
        break;
      }
    if (!changed) break;
  }
}

void PermutationGroup::rebuild(std::size_t level) {
  Level& lv = levels_[level];
  std::vector<const Permutation*> gens;
  for (std::size_t l = level; l < levels_.size(); ++l)
    for (const auto& g : levels_[l].strong) gens.push_back(&g);
  lv.transversal.assign(degree_, -1);
  lv.reps.clear();
  lv.orbit.clear();
  lv.transversal[lv.point] = 0;
  lv.reps.push_back(Permutation::identity(degree_));
  lv.orbit.push_back(lv.point);
  for (std::size_t k = 0; k < lv.orbit.size(); ++k)
    for (const auto* g : gens) {
      const std::size_t y = (*g)(lv.orbit[k]);
      if (lv.transversal[y] >= 0) continue;
      lv.transversal[y] = static_cast<int>(lv.reps.size());
      lv.reps.push_back(lv.reps[k] * *g);
      lv.orbit.push_back(y);
    }
}

std::pair<Permutation, std::size_t> PermutationGroup::strip(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    const int t = lv.transversal.empty() ? -1 : lv.transversal[g(lv.point)];
    if (t < 0) return {std::move(g), l};
    g = g * lv.reps[static_cast<std::size_t>(t)].inverse();
  }
  return {std::move(g), levels_.size()};
}

bool PermutationGroup::close_level(std::size_t level) {
  std::vector<Permutation> gens;
  for (std::size_t l = level; l < levels_.size(); ++l)
    for (const auto& g : levels_[l].strong) gens.push_back(g);
  const Level lv = levels_[level];
  for (std::size_t k = 0; k < lv.orbit.size(); ++k)
    for (const auto& x : gens) {
      const Permutation s = lv.reps[k] * x * lv.reps[static_cast<std::size_t>(lv.transversal[x(lv.orbit[k])])].inverse();
      auto [h, j] = strip(s, level + 1);
      if (h.is_identity()) continue;
      if (j == levels_.size()) {
        std::size_t pt = 0;
        while (h(pt) == pt) ++pt;
        levels_.push_back(Level{pt, {}, {}, {}, {}});
      }
      levels_[j].strong.push_back(h);
      for (std::size_t l = 0; l <= j; ++l) rebuild(l);
      return true;
    }
  return false;
}

Int PermutationGroup::order() const {
  Int o = 1;
  for (const auto& lv : levels_) o *= static_cast<unsigned long>(lv.orbit.size());
  return o;
}

bool PermutationGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return strip(g, 0).first.is_identity();
}

std::vector<std::size_t> PermutationGroup::base() const {
  std::vector<std::size_t> b;
  for (const auto& lv : levels_) b.push_back(lv.point);
  return b;
}

std::vector<std::size_t> PermutationGroup::orbit_sizes() const {
  std::vector<std::size_t> s;
  for (const auto& lv : levels_) s.push_back(lv.orbit.size());
  return s;
}

Int schreier_sims_order(std::size_t degree, const std::vector<Permutation>& generators) {
  return PermutationGroup(degree, generators).order();
}

}  // namespace fflat
