#pragma once

// Named verification checks with per-check pass/fail/skipped status.

#include <functional>
#include <string>
#include <vector>

#include "fflat/curves.hpp"
#include "fflat/io.hpp"
#include "fflat/lattice.hpp"

namespace fflat {

enum class CheckStatus { Pass, Fail, Skipped };
const char* to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string reason;  // first failed expectation, or the guard message when skipped
  Json details = Json::object();
  double seconds = 0;
};

struct VerifyOptions {
  std::size_t max_enum = kDefaultMaxEnum;
  std::size_t max_perm_dim = 14;
  JacobianLimits jacobian{};
};

struct CheckInfo {
  std::string name;
  int criterion = 0;
  std::string statement;
  std::function<void(class CheckContext&)> body;
};

/// Collects computed values and expectations for one check.
class CheckContext {
 public:
  explicit CheckContext(const VerifyOptions& options) : options_(options) {}
  const VerifyOptions& options() const { return options_; }
  void expect(bool ok, const std::string& what);
  Json& details() { return details_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  const VerifyOptions& options_;
  Json details_ = Json::object();
  std::vector<std::string> failures_;
};

const std::vector<CheckInfo>& verify_registry();
const CheckInfo* find_check(const std::string& name);

/// ResourceLimit inside a check yields Skipped; any other exception is a failure.
CheckResult run_check(const CheckInfo& check, const VerifyOptions& options);

Json check_result_to_json(const CheckResult& result);

/// Basis printed for the genus-3 curve over F_11 (rows of Phi of u, x - alpha_i, x - beta_j).
IntMat f11_reference_basis();
/// 9,0,2,4,9,3,5,1 over F_11.
HyperellipticModel f11_curve();
/// x(x-1)(x-2)(x-3)(x-4) over F_7.
HyperellipticModel f7_genus2_split_curve();
/// y^2 = x^3 + x + 1 over F_5.
HyperellipticModel f5_elliptic_curve();
/// Genus-2 curve over F_37 used for the class-number determinant law.
HyperellipticModel f37_genus2_curve();

/// Monic polynomial with the given roots, ascending coefficients reduced mod p.
std::vector<long long> poly_from_roots(std::uint32_t p, const std::vector<long long>& roots, long long lead = 1);

}  // namespace fflat
