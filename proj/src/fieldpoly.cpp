#include "fflat/fieldpoly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "fflat/errors.hpp"

namespace fflat {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p == 2) throw InvalidInput("characteristic 2 is not supported");
  if (p >= (1u << 31) || !is_prime(p)) throw InvalidInput("modulus " + std::to_string(p) + " is not an odd prime");
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const {
  Residue r = 1 % p_;
  Residue b = a % p_;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

int legendre_symbol(Residue a, const PrimeField& field) {
  a %= field.modulus();
  if (a == 0) return 0;
  return field.pow(a, (field.modulus() - 1) / 2) == 1 ? 1 : -1;
}

FpPoly::FpPoly(const PrimeField& field, const std::vector<long long>& ascending) : field_(field) {
  c_.reserve(ascending.size());
  for (long long a : ascending) c_.push_back(field_.reduce(a));
  trim();
}

FpPoly FpPoly::constant(const PrimeField& field, long long c) { return FpPoly(field, {c}); }

FpPoly FpPoly::monomial(const PrimeField& field, long long c, int degree) {
  FpPoly r(field);
  r.c_.assign(static_cast<std::size_t>(degree) + 1, 0);
  r.c_.back() = field.reduce(c);
  r.trim();
  return r;
}

FpPoly FpPoly::linear_root(const PrimeField& field, Residue a) {
  return FpPoly(field, {-static_cast<long long>(a), 1});
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Residue FpPoly::eval(Residue a) const {
  Residue r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = field_.add(field_.mul(r, a), *it);
  return r;
}

FpPoly FpPoly::derivative() const {
  FpPoly d(field_);
  if (c_.size() <= 1) return d;
  d.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d.c_[i - 1] = field_.mul(c_[i], field_.reduce(static_cast<long long>(i)));
  d.trim();
  return d;
}

FpPoly FpPoly::scaled(Residue k) const {
  FpPoly r(*this);
  for (auto& a : r.c_) a = field_.mul(a, k);
  r.trim();
  return r;
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  FpPoly r(field_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = field_.add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
  r.trim();
  return r;
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  FpPoly r(field_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = field_.sub(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
  r.trim();
  return r;
}

FpPoly FpPoly::operator-() const {
  FpPoly r(*this);
  for (auto& a : r.c_) a = field_.neg(a);
  return r;
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
  FpPoly r(field_);
  if (is_zero() || o.is_zero()) return r;
  const std::uint64_t p = field_.modulus();
  std::vector<std::uint64_t> acc(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{c_[i]} * o.c_[j]) % p;
  }
  r.c_.assign(acc.begin(), acc.end());
  r.trim();
  return r;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  FpPoly q(field_);
  FpPoly r(*this);
  const int dd = divisor.degree();
  if (r.degree() < dd) return {q, r};
  const Residue lead_inv = field_.inv(divisor.leading());
  q.c_.assign(static_cast<std::size_t>(r.degree() - dd + 1), 0);
  for (int k = r.degree(); k >= dd; --k) {
    const Residue coef = field_.mul(r.c_[k], lead_inv);
    q.c_[k - dd] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= dd; ++j) r.c_[k - dd + j] = field_.sub(r.c_[k - dd + j], field_.mul(coef, divisor.c_[j]));
  }
  r.trim();
  q.trim();
  return {q, r};
}

bool FpPoly::operator<(const FpPoly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  return std::lexicographical_compare(c_.rbegin(), c_.rend(), o.c_.rbegin(), o.c_.rend());
}

std::string FpPoly::to_text() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c_[i]);
  }
  return s;
}

std::string FpPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c_[i] != 1 || i == 0) os << c_[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Residue poly_eval(const FpPoly& f, Residue a) { return f.eval(a); }

FpPoly poly_gcd(const FpPoly& f, const FpPoly& g) {
  if (f.is_zero() && g.is_zero()) throw InvalidInput("gcd of two zero polynomials");
  FpPoly a = f, b = g;
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

XgcdResult poly_xgcd(const FpPoly& f, const FpPoly& g) {
  const PrimeField& F = f.field();
  FpPoly r0 = f, r1 = g;
  FpPoly s0 = FpPoly::constant(F, 1), s1(F);
  FpPoly t0(F), t1 = FpPoly::constant(F, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    FpPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Residue k = F.inv(r0.leading());
  return {r0.scaled(k), s0.scaled(k), t0.scaled(k)};
}

bool is_squarefree(const FpPoly& f) {
  if (f.degree() < 1) throw InvalidInput("squarefree test needs a nonconstant polynomial");
  const FpPoly d = f.derivative();
  // f' == 0 means f is a p-th power
  if (d.is_zero()) return false;
  return poly_gcd(f, d).is_one();
}

std::vector<Residue> roots_in_fp(const FpPoly& f) {
  std::vector<Residue> roots;
  if (f.is_zero()) throw InvalidInput("roots of the zero polynomial");
  for (Residue a = 0; a < f.field().modulus(); ++a)
    if (f.eval(a) == 0) roots.push_back(a);
  return roots;
}

FpPoly parse_poly(const PrimeField& field, std::string_view text) {
  std::vector<long long> coeffs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view tok = text.substr(pos, next - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) throw InvalidInput("empty coefficient in polynomial text '" + std::string(text) + "'");
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw InvalidInput("bad coefficient '" + std::string(tok) + "'");
    coeffs.push_back(v);
    pos = next + 1;
  }
  return FpPoly(field, coeffs);
}

}  // namespace fflat
