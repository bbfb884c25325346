#include "fflat/abelian.hpp"

#include <numeric>
#include <sstream>

#include "fflat/errors.hpp"
#include "fflat/intmat.hpp"

namespace fflat {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long long> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] <= 1) throw InvalidInput("invariant factors must exceed 1");
    if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0)
      throw InvalidInput("invariant factors must divide each other in order");
  }
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(long long n) {
  if (n < 1) throw InvalidInput("cyclic group order must be positive");
  return n == 1 ? FiniteAbelianGroup() : FiniteAbelianGroup({n});
}

long long FiniteAbelianGroup::order() const {
  long long o = 1;
  for (long long n : factors_) o *= n;
  return o;
}

GroupElement FiniteAbelianGroup::normalize(const GroupElement& a) const {
  if (a.size() != factors_.size()) throw InvalidInput("group element has wrong length");
  GroupElement r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    long long x = a[i] % factors_[i];
    r[i] = x < 0 ? x + factors_[i] : x;
  }
  return r;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement r(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) r[i] = (a[i] + b[i]) % factors_[i];
  return r;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const {
  GroupElement r(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) r[i] = (factors_[i] - a[i]) % factors_[i];
  return r;
}

GroupElement FiniteAbelianGroup::times(const GroupElement& a, long long k) const {
  GroupElement r(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    long long x = static_cast<long long>((static_cast<__int128>(a[i]) * k) % factors_[i]);
    r[i] = x < 0 ? x + factors_[i] : x;
  }
  return r;
}

bool FiniteAbelianGroup::is_zero(const GroupElement& a) const {
  for (long long x : a)
    if (x != 0) return false;
  return true;
}

long long FiniteAbelianGroup::element_order(const GroupElement& a) const {
  long long o = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const long long oi = factors_[i] / std::gcd(a[i], factors_[i]);
    o = std::lcm(o, oi);
  }
  return o;
}

long long FiniteAbelianGroup::index_of(const GroupElement& a) const {
  long long idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + a[i];
  return idx;
}

GroupElement FiniteAbelianGroup::element_at(long long index) const {
  GroupElement r(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    r[i] = index % factors_[i];
    index /= factors_[i];
  }
  return r;
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "trivial";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? " x " : "") << "Z/" << factors_[i];
  return os.str();
}

AbelianStructure abelian_structure(std::size_t size, std::size_t identity,
                                   const std::function<std::size_t(std::size_t, std::size_t)>& add) {
  // coeff[e] = coefficients of element e over the generators chosen so far
  std::vector<std::vector<long long>> coeff(size);
  std::vector<char> in_span(size, 0);
  std::vector<std::size_t> span{identity};
  in_span[identity] = 1;
  std::vector<std::size_t> gens;
  std::vector<std::vector<long long>> relations;

  for (std::size_t cand = 0; cand < size && span.size() < size; ++cand) {
    if (in_span[cand]) continue;
    const std::size_t g = gens.size();
    gens.push_back(cand);
    for (auto e : span) coeff[e].push_back(0);

    // smallest k with k*cand already in the span
    long long k = 1;
    std::size_t multiple = cand;
    std::vector<std::size_t> multiples{identity, cand};
    while (!in_span[multiple]) {
      multiple = add(multiple, cand);
      ++k;
      multiples.push_back(multiple);
      if (k > static_cast<long long>(size)) throw std::logic_error("abelian_structure: law is not a finite group");
    }
    std::vector<long long> rel(coeff[multiple]);
    for (auto& x : rel) x = -x;
    rel[g] += k;
    relations.push_back(std::move(rel));

    const std::vector<std::size_t> old_span = span;
    for (long long j = 1; j < k; ++j) {
      for (auto h : old_span) {
        const std::size_t e = add(multiples[static_cast<std::size_t>(j)], h);
        if (in_span[e]) throw std::logic_error("abelian_structure: coset collision");
        in_span[e] = 1;
        coeff[e] = coeff[h];
        coeff[e][g] = j;
        span.push_back(e);
      }
    }
  }
  if (span.size() != size) throw std::logic_error("abelian_structure: elements not reached");

  const std::size_t ngen = gens.size();
  IntMat rel(ngen, IntVec(ngen, 0));
  for (std::size_t i = 0; i < ngen; ++i)
    for (std::size_t j = 0; j < relations[i].size(); ++j) rel[i][j] = static_cast<long>(relations[i][j]);

  AbelianStructure out;
  std::vector<long long> factors;
  std::vector<std::size_t> keep;
  if (ngen > 0) {
    const SmithForm sf = snf(rel);
    const auto diag = sf.diagonal();
    for (std::size_t j = 0; j < diag.size(); ++j)
      if (diag[j] > 1) {
        factors.push_back(diag[j].get_si());
        keep.push_back(j);
      }
    out.group = FiniteAbelianGroup(factors);
    out.coords.resize(size);
    for (std::size_t e = 0; e < size; ++e) {
      GroupElement x(keep.size(), 0);
      for (std::size_t t = 0; t < keep.size(); ++t) {
        Int acc = 0;
        for (std::size_t i = 0; i < ngen; ++i) acc += Int(static_cast<long>(coeff[e][i])) * sf.v[i][keep[t]];
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), acc.get_mpz_t(), Int(static_cast<long>(factors[t])).get_mpz_t());
        x[t] = r.get_si();
      }
      out.coords[e] = std::move(x);
    }
  } else {
    out.coords.assign(size, GroupElement{});
  }
  if (out.group.order() != static_cast<long long>(size)) throw std::logic_error("abelian_structure: order mismatch");
  return out;
}

long long euler_phi(long long n) {
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace fflat
