#pragma once

// Numerical verification of the S and T transformation laws.

#include "qhr/modular/numeric.hpp"

#include "json.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace qhr::modular {

struct EvalPoint {
  Complex tau;
  CVec z;
  Complex t = 0;
  double eps = 1e-6;
};

struct TransformReport {
  std::string identity;
  EvalPoint point;
  Complex left, right;
  double abs_deviation = 0;
  /// |left - right| / max(1, |left|, |right|)
  double rel_deviation = 0;
  /// Truncation bound on |left - right|, on the same scale as rel_deviation.
  double tail_bound = 0;
  bool pass = false;
};

TransformReport compare(std::string identity, const EvalPoint& point, const Value& left, const Value& right);

nlohmann::json to_json(const TransformReport& r);

/// Deterministic points with Im tau in [0.6, 1.2], |Re tau| <= 0.5 and z drawn by zgen.
std::vector<EvalPoint> sample_points(int count, std::uint64_t seed,
                                     const std::function<CVec(std::mt19937_64&)>& zgen, double eps = 1e-6);
/// Small complex z in h^f (zero when h^f is trivial or unavailable).
CVec random_hf(const RootSystem& rs, const NilpotentSlice& slice, std::mt19937_64& rng);
/// Small complex z anywhere in h.
CVec random_h(const RootSystem& rs, std::mt19937_64& rng);

/// S, T and S-then-S for Theta_lambda.
std::vector<TransformReport> verify_theta_transforms(const RootSystem& rs, const RVec& lambda_bar, long n,
                                                     const EvalPoint& point);

/// The S and T laws of f_{lambda,w} (plain), f^- (minus) or f^* (star).
std::vector<TransformReport> verify_f_transforms(const SliceEvaluator& se, Variant variant, const RVec& lambda_bar,
                                                 long n, const WeylElement& w, const EvalPoint& point);

/// S laws of R, R^-, R^* and the three T laws.
std::vector<TransformReport> verify_denominator_transforms(const SliceEvaluator& se, const EvalPoint& point);

enum class Which { SPlain, SMinus, SStar, TPlain, TMinus, TStar };
std::string to_string(Which w);
Which parse_which(const std::string& s);

TransformReport verify_psi_transform(const SliceEvaluator& se, const RVec& lambda_bar, long n, const RVec& alpha,
                                     Which which, const EvalPoint& point);
/// Psi_lambda(tau, -z) against two applications of the S law.
TransformReport verify_psi_double_s(const SliceEvaluator& se, const RVec& lambda_bar, long n, const RVec& alpha,
                                    const EvalPoint& point);

/// T laws of the vacuum Euler-Poincare characters at k + h^vee = p/u.
std::vector<TransformReport> verify_vacuum_t_transforms(const SliceEvaluator& se, long p, long u,
                                                        const EvalPoint& point);

}  // namespace qhr::modular
