#pragma once

// Verification drivers shared by the command-line tool and the acceptance run.

#include "qhr/characters/admissible.hpp"
#include "qhr/modular/transforms.hpp"

#include <string>

namespace qhr::cli {

using liealg::NilpotentSlice;
using liealg::RootSystem;

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  nlohmann::json reports = nlohmann::json::array();
};

struct VerifyOptions {
  Rational N = 4;
  int U = 6;
  double eps = 1e-6;
  int points = 5;
  int seed_direction = 0;
  std::uint64_t weyl_cap = liealg::kDefaultWeylCap;
  std::size_t lattice_cap = 1 << 20;
};

/// Minimal slice, or principal, or Dynkin labels separated by commas.
NilpotentSlice parse_nilpotent(const RootSystem& rs, const std::string& selector);

/// Level k with Lambda = k Lambda_0 + rho_hat on the minimal slice: the specialized
/// affine numerator against the reduced Weyl-theta sum, exactly.
CheckResult verify_theorem1(const RootSystem& rs, long k, const VerifyOptions& o);
/// Minimal W-denominator identity at level h^vee - b.
CheckResult verify_remark4(const RootSystem& rs, const VerifyOptions& o, bool literal_shift = false);
/// W^min_k equals 1 (k = -b).
CheckResult verify_wmin_trivial(const RootSystem& rs, long k, const VerifyOptions& o);

CheckResult verify_theta(const RootSystem& rs, long n, const VerifyOptions& o);
CheckResult verify_f(const RootSystem& rs, const NilpotentSlice& slice, long n, const VerifyOptions& o);
CheckResult verify_denominator(const RootSystem& rs, const NilpotentSlice& slice, const VerifyOptions& o);
/// Psi transforms at level k (n = k + h^vee, lambda_bar = rho, alpha = alpha^(-k)) on the minimal slice.
/// which is one of S-plain ... T-star, or "all" (which adds the S^2 closure).
CheckResult verify_theorem2(const RootSystem& rs, long k, const std::string& which, const VerifyOptions& o);
CheckResult verify_theorem4b(const RootSystem& rs, const NilpotentSlice& slice, long p, long u,
                             const VerifyOptions& o);

}  // namespace qhr::cli
