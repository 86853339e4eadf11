#pragma once

#include "qhr/liealg/root_system.hpp"

namespace qhr::liealg {

/// lambda = finite + level * Lambda_0 + delta_coeff * delta.
struct AffineWeight {
  RVec finite;
  Rational level;
  Rational delta_coeff;

  /// t_gamma(lambda) = lambda + n gamma - ((lambda|gamma) + n|gamma|^2/2) delta.
  AffineWeight translate(const RootSystem& rs, const RVec& gamma) const;
  /// |lambda|^2 = |finite|^2 + 2 level * delta_coeff.
  Rational norm2(const RootSystem& rs) const;
  AffineWeight operator+(const AffineWeight& o) const {
    return {finite + o.finite, level + o.level, delta_coeff + o.delta_coeff};
  }
};

/// k Lambda_0 + rho-hat = rho + (k + h^vee) Lambda_0.
AffineWeight shifted_vacuum(const RootSystem& rs, const Rational& k);

struct AdmissibleVacuum {
  long p = 0;
  long u = 0;
  Rational k;              // p/u - h^vee
  AffineWeight lambda;     // k Lambda_0
  AffineWeight lambda0;    // (p - h^vee) Lambda_0
};

/// Principal admissible vacuum weight for k + h^vee = p/u. Requires p >= h^vee,
/// gcd(p,u) = 1 and gcd(u, r^vee) = 1.
AdmissibleVacuum principal_admissible_vacuum(const RootSystem& rs, long p, long u);

}  // namespace qhr::liealg
