#include "fflat/curves.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>

#include "fflat/errors.hpp"

namespace fflat {

namespace {

FpPoly reduce_mod(const FpPoly& a, const FpPoly& m) { return a % m; }

Residue sqrt_scan(const PrimeField& F, Residue a) {
  for (Residue y = 0; y < F.modulus(); ++y)
    if (F.mul(y, y) == a) return y;
  throw std::logic_error("sqrt_scan: not a square");
}

}  // namespace

HyperellipticModel::HyperellipticModel(std::uint32_t p, const std::vector<long long>& f_ascending)
    : HyperellipticModel(PrimeField(p), FpPoly(PrimeField(p), f_ascending)) {}

HyperellipticModel::HyperellipticModel(const PrimeField& field, FpPoly f) : field_(field), f_(std::move(f)), genus_(0) {
  const int d = f_.degree();
  if (d < 3 || d % 2 == 0)
    throw InvalidInput("defining polynomial must have odd degree >= 3 (got degree " + std::to_string(d) + ")");
  if (!is_squarefree(f_)) throw InvalidInput("defining polynomial " + f_.to_string() + " is not squarefree");
  genus_ = (d - 1) / 2;
}

const char* to_string(PlaceKind kind) {
  switch (kind) {
    case PlaceKind::Infinity: return "infinity";
    case PlaceKind::Ramified: return "ramified";
    case PlaceKind::Inert: return "inert";
    case PlaceKind::Split: return "split";
    case PlaceKind::Rational: return "rational";
  }
  return "?";
}

std::string Place::label() const {
  std::ostringstream os;
  switch (kind) {
    case PlaceKind::Infinity: os << "P_inf"; break;
    case PlaceKind::Ramified: os << "P(" << x << ")"; break;
    case PlaceKind::Inert: os << "Q(" << x << ")"; break;
    case PlaceKind::Split: os << "S(" << x << "," << sheet << ")"; break;
    case PlaceKind::Rational: os << "R(" << x << ")"; break;
  }
  return os.str();
}

const char* to_string(Selector selector) {
  switch (selector) {
    case Selector::RationalField: return "rational";
    case Selector::EllipticAllRational: return "elliptic";
    case Selector::RamifiedInert: return "ramified-inert";
    case Selector::HyperellipticAllRational: return "all-rational";
  }
  return "?";
}

std::optional<Selector> parse_selector(const std::string& name) {
  if (name == "rational") return Selector::RationalField;
  if (name == "elliptic") return Selector::EllipticAllRational;
  if (name == "ramified-inert") return Selector::RamifiedInert;
  if (name == "all-rational") return Selector::HyperellipticAllRational;
  return std::nullopt;
}

std::vector<int> PlaceSystem::degrees() const {
  std::vector<int> d;
  d.reserve(places.size());
  for (const auto& pl : places) d.push_back(pl.degree);
  return d;
}

PlaceClassification classify_places(const HyperellipticModel& model) {
  PlaceClassification c;
  const auto& F = model.field();
  for (Residue b = 0; b < F.modulus(); ++b) {
    switch (legendre_symbol(model.f().eval(b), F)) {
      case 0: c.ramified.push_back(b); break;
      case -1: c.inert.push_back(b); break;
      default: c.split.push_back(b); break;
    }
  }
  return c;
}

PlaceSystem place_system(const HyperellipticModel& model, Selector selector) {
  PlaceSystem sys;
  sys.selector = selector;
  const PlaceClassification c = classify_places(model);
  sys.places.push_back(Place{PlaceKind::Infinity, 0, 0, 0, 1});
  for (Residue a : c.ramified) sys.places.push_back(Place{PlaceKind::Ramified, a, 0, 0, 1});
  sys.r = static_cast<int>(c.ramified.size()) + 1;
  switch (selector) {
    case Selector::RamifiedInert:
      for (Residue b : c.inert) sys.places.push_back(Place{PlaceKind::Inert, b, 0, 0, 2});
      sys.s = static_cast<int>(c.inert.size());
      break;
    case Selector::EllipticAllRational:
      if (!model.is_elliptic()) throw InvalidInput("elliptic selector needs a genus-1 model");
      [[fallthrough]];
    case Selector::HyperellipticAllRational: {
      const auto& F = model.field();
      for (Residue b : c.split) {
        const Residue y0 = sqrt_scan(F, model.f().eval(b));
        const Residue lo = std::min(y0, F.neg(y0));
        const Residue hi = std::max(y0, F.neg(y0));
        sys.places.push_back(Place{PlaceKind::Split, b, lo, 1, 1});
        sys.places.push_back(Place{PlaceKind::Split, b, hi, 2, 1});
      }
      sys.t = static_cast<int>(c.split.size());
      break;
    }
    case Selector::RationalField:
      throw InvalidInput("rational selector does not take a curve model");
  }
  return sys;
}

PlaceSystem rational_place_system(int n) {
  if (n < 1) throw InvalidInput("rational lattice needs n >= 1");
  PlaceSystem sys;
  sys.selector = Selector::RationalField;
  sys.places.push_back(Place{PlaceKind::Infinity, 0, 0, 0, 1});
  for (int i = 0; i < n; ++i) sys.places.push_back(Place{PlaceKind::Rational, static_cast<Residue>(i), 0, 0, 1});
  sys.r = n + 1;
  return sys;
}

// ---------------------------------------------------------------- Mumford

bool MumfordDivisor::operator<(const MumfordDivisor& o) const {
  if (!(u == o.u)) return u < o.u;
  return v < o.v;
}

std::string MumfordDivisor::to_string() const { return "(" + u.to_string() + ", " + v.to_string() + ")"; }

MumfordDivisor mumford_identity(const HyperellipticModel& model) {
  return {FpPoly::constant(model.field(), 1), FpPoly(model.field())};
}

bool is_valid_mumford(const HyperellipticModel& model, const MumfordDivisor& d) {
  if (d.u.is_zero() || d.u.leading() != 1) return false;
  if (d.u.degree() > model.genus()) return false;
  if (d.v.degree() >= d.u.degree()) return false;
  return ((d.v * d.v - model.f()) % d.u).is_zero();
}

MumfordDivisor mumford_negate(const HyperellipticModel& model, const MumfordDivisor& d) {
  (void)model;
  return {d.u, (-d.v) % d.u};
}

MumfordDivisor mumford_point(const HyperellipticModel& model, Residue x0, Residue y0) {
  const auto& F = model.field();
  if (F.mul(y0, y0) != model.f().eval(x0)) throw InvalidInput("point is not on the curve");
  return {FpPoly::linear_root(F, x0), FpPoly::constant(F, y0)};
}

MumfordDivisor cantor_add(const HyperellipticModel& model, const MumfordDivisor& a, const MumfordDivisor& b) {
  const FpPoly& f = model.f();
  // composition
  const XgcdResult g1 = poly_xgcd(a.u, b.u);  // d1 = e1 u1 + e2 u2
  const XgcdResult g2 = poly_xgcd(g1.gcd, a.v + b.v);
  const FpPoly& d = g2.gcd;
  const FpPoly s1 = g2.s * g1.s;
  const FpPoly s2 = g2.s * g1.t;
  const FpPoly& s3 = g2.t;
  FpPoly u = (a.u * b.u) / (d * d);
  FpPoly v = ((s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + f)) / d) % u;
  // reduction
  while (u.degree() > model.genus()) {
    FpPoly u2 = (f - v * v) / u;
    FpPoly v2 = (-v) % u2;
    u = std::move(u2);
    v = std::move(v2);
  }
  u = u.monic();
  v = v % u;
  return {u, v};
}

MumfordDivisor cantor_times(const HyperellipticModel& model, const MumfordDivisor& a, long long k) {
  MumfordDivisor base = k < 0 ? mumford_negate(model, a) : a;
  unsigned long long e = static_cast<unsigned long long>(k < 0 ? -k : k);
  MumfordDivisor acc = mumford_identity(model);
  while (e) {
    if (e & 1) acc = cantor_add(model, acc, base);
    base = cantor_add(model, base, base);
    e >>= 1;
  }
  return acc;
}

// ---------------------------------------------------------------- elliptic

EllipticPoint chord_tangent_add(const HyperellipticModel& model, const EllipticPoint& a, const EllipticPoint& b) {
  if (!model.is_elliptic()) throw InvalidInput("chord-tangent law needs a genus-1 model");
  if (!a) return b;
  if (!b) return a;
  const auto& F = model.field();
  const auto [x1, y1] = *a;
  const auto [x2, y2] = *b;
  if (x1 == x2 && F.add(y1, y2) == 0) return std::nullopt;
  Residue lambda;
  if (x1 == x2) {
    lambda = F.mul(model.f().derivative().eval(x1), F.inv(F.add(y1, y1)));
  } else {
    lambda = F.mul(F.sub(y2, y1), F.inv(F.sub(x2, x1)));
  }
  // x1 + x2 + x3 = (lambda^2 - c2) / c3 for f = c3 x^3 + c2 x^2 + ...
  const Residue c3 = model.f().coeff(3);
  const Residue c2 = model.f().coeff(2);
  const Residue sum = F.mul(F.sub(F.mul(lambda, lambda), c2), F.inv(c3));
  const Residue x3 = F.sub(F.sub(sum, x1), x2);
  const Residue y3 = F.sub(F.mul(lambda, F.sub(x1, x3)), y1);
  return std::make_pair(x3, y3);
}

PointGroup elliptic_point_group(const HyperellipticModel& model) {
  if (!model.is_elliptic()) throw InvalidInput("elliptic point group needs deg f = 3");
  const auto& F = model.field();
  PointGroup pg;
  pg.points.push_back(std::nullopt);
  for (Residue x = 0; x < F.modulus(); ++x) {
    const Residue fx = model.f().eval(x);
    for (Residue y = 0; y < F.modulus(); ++y)
      if (F.mul(y, y) == fx) pg.points.push_back(std::make_pair(x, y));
  }
  std::map<EllipticPoint, std::size_t> index;
  for (std::size_t i = 0; i < pg.points.size(); ++i) index[pg.points[i]] = i;
  auto add = [&](std::size_t i, std::size_t j) { return index.at(chord_tangent_add(model, pg.points[i], pg.points[j])); };

  AbelianStructure st = abelian_structure(pg.points.size(), 0, add);
  pg.group = st.group;
  pg.coords = std::move(st.coords);

  pg.element_orders.resize(pg.points.size());
  for (std::size_t i = 0; i < pg.points.size(); ++i) {
    long long k = 1;
    std::size_t cur = i;
    while (cur != 0) {
      cur = add(cur, i);
      ++k;
    }
    pg.element_orders[i] = k;
  }
  const long long exponent = *std::max_element(pg.element_orders.begin(), pg.element_orders.end());
  if (pg.group.rank() > 2 || (pg.group.rank() > 0 && pg.group.factors().back() != exponent))
    throw std::logic_error("elliptic point group: order census disagrees with invariant factors");

  pg.places = place_system(model, Selector::EllipticAllRational);
  for (const auto& pl : pg.places.places) {
    EllipticPoint pt;
    if (pl.kind == PlaceKind::Ramified) pt = std::make_pair(pl.x, Residue{0});
    if (pl.kind == PlaceKind::Split) pt = std::make_pair(pl.x, pl.y);
    pg.embedding.push_back(pg.coords[index.at(pt)]);
  }
  return pg;
}

// ---------------------------------------------------------------- Jacobian

std::size_t Jacobian::index_of(const MumfordDivisor& d) const {
  auto it = std::lower_bound(classes.begin(), classes.end(), d);
  if (it == classes.end() || !(*it == d)) throw InvalidInput("divisor " + d.to_string() + " is not a reduced class");
  return static_cast<std::size_t>(it - classes.begin());
}

namespace {

// All (u, v) with u monic of degree d and v^2 = f mod u, deg v < d.
void enumerate_degree(const HyperellipticModel& model, int d, std::vector<MumfordDivisor>& out) {
  const auto& F = model.field();
  const std::uint32_t p = F.modulus();
  std::vector<Residue> ucoef(static_cast<std::size_t>(d), 0);  // u = x^d + sum ucoef[i] x^i
  std::array<Residue, 8> vcoef{};
  std::array<std::uint64_t, 8> sq{};
  for (;;) {
    std::vector<long long> ul(ucoef.begin(), ucoef.end());
    ul.push_back(1);
    const FpPoly u(F, ul);
    const FpPoly target = reduce_mod(model.f(), u);
    std::array<Residue, 8> tgt{};
    for (int i = 0; i < d; ++i) tgt[i] = target.coeff(i);

    vcoef.fill(0);
    for (;;) {
      // v^2 mod u, fixed-size arithmetic
      sq.fill(0);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) sq[i + j] += std::uint64_t{vcoef[i]} * vcoef[j];
      for (int k = 2 * d - 2; k >= 0; --k) sq[k] %= p;
      for (int k = 2 * d - 2; k >= d; --k) {
        const std::uint64_t c = sq[k];
        if (c == 0) continue;
        for (int j = 0; j < d; ++j) sq[k - d + j] = (sq[k - d + j] + (p - c) * ucoef[j]) % p;
      }
      bool match = true;
      for (int i = 0; i < d && match; ++i) match = sq[i] == tgt[i];
      if (match) {
        out.push_back({u, FpPoly(F, std::vector<long long>(vcoef.begin(), vcoef.begin() + d))});
      }
      int pos = 0;
      while (pos < d && ++vcoef[pos] == p) vcoef[pos++] = 0;
      if (pos == d) break;
    }
    int pos = 0;
    while (pos < d && ++ucoef[pos] == p) ucoef[pos++] = 0;
    if (pos == d) break;
  }
}

}  // namespace

Jacobian jacobian_group(const HyperellipticModel& model, const JacobianLimits& limits) {
  const int g = model.genus();
  const std::uint64_t p = model.p();
  if (g > limits.max_genus)
    throw ResourceLimit("Jacobian enumeration limited to genus <= " + std::to_string(limits.max_genus));
  if (p > limits.max_p) throw ResourceLimit("Jacobian enumeration limited to p <= " + std::to_string(limits.max_p));
  std::uint64_t candidates = 0, pd = 1;
  for (int d = 1; d <= g; ++d) {
    pd *= p * p;
    candidates += pd;
  }
  if (candidates > limits.max_candidates)
    throw ResourceLimit("Jacobian enumeration needs " + std::to_string(candidates) + " candidate checks (cap " +
                        std::to_string(limits.max_candidates) + ")");

  Jacobian jac;
  jac.classes.push_back(mumford_identity(model));
  for (int d = 1; d <= g; ++d) enumerate_degree(model, d, jac.classes);
  std::sort(jac.classes.begin(), jac.classes.end());
  jac.identity_index = jac.index_of(mumford_identity(model));

  auto add = [&](std::size_t i, std::size_t j) {
    return jac.index_of(cantor_add(model, jac.classes[i], jac.classes[j]));
  };
  AbelianStructure st = abelian_structure(jac.classes.size(), jac.identity_index, add);
  jac.group = st.group;
  jac.coords = std::move(st.coords);
  return jac;
}

std::vector<GroupElement> jacobian_embedding(const HyperellipticModel& model, const Jacobian& jac,
                                             const PlaceSystem& system) {
  std::vector<GroupElement> out;
  out.reserve(system.size());
  for (const auto& pl : system.places) {
    switch (pl.kind) {
      case PlaceKind::Infinity: out.push_back(jac.group.zero()); break;
      case PlaceKind::Ramified: out.push_back(jac.coord_of(mumford_point(model, pl.x, 0))); break;
      case PlaceKind::Split: out.push_back(jac.coord_of(mumford_point(model, pl.x, pl.y))); break;
      // Q - 2 P_inf is the divisor of x - beta
      case PlaceKind::Inert: out.push_back(jac.group.zero()); break;
      case PlaceKind::Rational: throw InvalidInput("rational-field places have no Jacobian image");
    }
  }
  return out;
}

long long class_number(const HyperellipticModel& model, const JacobianLimits& limits) {
  return jacobian_group(model, limits).group.order();
}

bool splits_into_linear_factors(const HyperellipticModel& model) {
  return static_cast<int>(roots_in_fp(model.f()).size()) == model.f().degree();
}

TwoTorsion two_torsion_classes(const HyperellipticModel& model) {
  if (!splits_into_linear_factors(model)) throw InvalidInput("two-torsion embedding needs f to split");
  const int g = model.genus();
  TwoTorsion tt;
  tt.group = FiniteAbelianGroup(std::vector<long long>(static_cast<std::size_t>(2 * g), 2));
  const PlaceSystem sys = place_system(model, Selector::RamifiedInert);
  int ramified_seen = 0;
  for (const auto& pl : sys.places) {
    GroupElement e = tt.group.zero();
    if (pl.kind == PlaceKind::Ramified) {
      ++ramified_seen;
      if (ramified_seen <= 2 * g)
        e[static_cast<std::size_t>(ramified_seen - 1)] = 1;
      else
        std::fill(e.begin(), e.end(), 1);
    }
    tt.embedding.push_back(std::move(e));
  }
  return tt;
}

std::vector<int> semi_reduced_canonical(const std::vector<long long>& exponents) {
  std::vector<int> out;
  out.reserve(exponents.size());
  for (long long a : exponents) out.push_back(static_cast<int>(((a % 2) + 2) % 2));
  return out;
}

long long count_reduced_ramified(int g) {
  if (g < 1) throw InvalidInput("genus must be >= 1");
  long long sum = 0, binom = 1;
  const long long n = 2LL * g + 1;
  for (long long i = 0; i <= g; ++i) {
    sum += binom;
    binom = binom * (n - i) / (i + 1);
  }
  if (sum != (1LL << (2 * g))) throw std::logic_error("reduced-divisor count differs from 2^{2g}");
  return sum;
}

bool hasse_weil_condition(std::uint64_t q, int g) {
  const unsigned __int128 lhs = static_cast<unsigned __int128>(q + 1) * (q + 1);
  const unsigned __int128 k = 2ULL * g - 1;
  const unsigned __int128 rhs = static_cast<unsigned __int128>(4) * q * k * k;
  return lhs > rhs;
}

std::pair<long long, long long> hasse_weil_interval(std::uint64_t p, int g) {
  // (p + 1 +- 2 sqrt p)^g = A + B sqrt p, exact in Z[sqrt p]
  auto power = [&](long long sign) {
    __int128 a = 1, b = 0;
    for (int i = 0; i < g; ++i) {
      const __int128 na = a * static_cast<__int128>(p + 1) + b * 2 * sign * static_cast<__int128>(p);
      const __int128 nb = a * 2 * sign + b * static_cast<__int128>(p + 1);
      a = na;
      b = nb;
    }
    return std::make_pair(a, b);
  };
  auto isqrt = [](__int128 n) {
    __int128 r = static_cast<__int128>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
  };
  const auto [al, bl] = power(-1);
  const auto [ah, bh] = power(+1);
  // ceil(al + bl sqrt p) and floor(ah + bh sqrt p)
  __int128 lo;
  if (bl >= 0) {
    const __int128 s = isqrt(bl * bl * static_cast<__int128>(p));
    lo = al + s + (s * s == bl * bl * static_cast<__int128>(p) ? 0 : 1);
  } else {
    lo = al - isqrt(bl * bl * static_cast<__int128>(p));
  }
  const __int128 hi = ah + isqrt(bh * bh * static_cast<__int128>(p));
  return {static_cast<long long>(lo), static_cast<long long>(hi)};
}

int gonality(Selector selector) { return selector == Selector::RationalField ? 1 : 2; }

}  // namespace fflat
