#pragma once

// Prime fields F_p (p odd) and univariate polynomials over them.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fflat {

using Residue = std::uint32_t;

class PrimeField {
 public:
  /// Throws InvalidInput unless p is an odd prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  Residue reduce(long long a) const {
    long long r = a % static_cast<long long>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  Residue inv(Residue a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// Euler's criterion: 0 for a = 0, +1 for nonzero squares, -1 otherwise.
int legendre_symbol(Residue a, const PrimeField& field);

/// Polynomial over F_p with canonical ascending coefficients (no trailing zeros).
class FpPoly {
 public:
  /// Degree reported for the zero polynomial; every true degree is >= 0.
  static constexpr int kZeroDegree = -1;

  explicit FpPoly(const PrimeField& field) : field_(field) {}
  FpPoly(const PrimeField& field, const std::vector<long long>& ascending);

  static FpPoly constant(const PrimeField& field, long long c);
  static FpPoly monomial(const PrimeField& field, long long c, int degree);
  /// x - a
  static FpPoly linear_root(const PrimeField& field, Residue a);

  const PrimeField& field() const { return field_; }
  const std::vector<Residue>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Residue coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  Residue leading() const { return c_.empty() ? 0 : c_.back(); }

  Residue eval(Residue a) const;
  FpPoly derivative() const;
  FpPoly monic() const;
  FpPoly scaled(Residue k) const;

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator-() const;
  FpPoly operator*(const FpPoly& o) const;
  /// Quotient and remainder; throws std::domain_error when dividing by zero.
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& divisor) const;
  FpPoly operator/(const FpPoly& o) const { return divmod(o).first; }
  FpPoly operator%(const FpPoly& o) const { return divmod(o).second; }

  bool operator==(const FpPoly& o) const { return field_ == o.field_ && c_ == o.c_; }
  bool operator<(const FpPoly& o) const;

  /// Comma-separated ascending coefficients, e.g. "9,0,2,4,9,3,5,1".
  std::string to_text() const;
  std::string to_string() const;

 private:
  void trim();

  PrimeField field_;
  std::vector<Residue> c_;
};

Residue poly_eval(const FpPoly& f, Residue a);

/// Monic gcd; throws InvalidInput when both inputs are zero.
FpPoly poly_gcd(const FpPoly& f, const FpPoly& g);

struct XgcdResult {
  FpPoly gcd;  // monic
  FpPoly s;
  FpPoly t;    // s*f + t*g == gcd
};
XgcdResult poly_xgcd(const FpPoly& f, const FpPoly& g);

/// gcd(f, f') == 1; throws InvalidInput for constant f.
bool is_squarefree(const FpPoly& f);

/// All a in F_p with f(a) = 0, ascending. Exhaustive scan.
std::vector<Residue> roots_in_fp(const FpPoly& f);

/// Parse "9,0,2,4,9,3,5,1" (ascending, integers reduced mod p).
FpPoly parse_poly(const PrimeField& field, std::string_view text);

bool is_prime(std::uint64_t n);

}  // namespace fflat
