#include "qhr/liealg/affine.hpp"

namespace qhr::liealg {

AffineWeight AffineWeight::translate(const RootSystem& rs, const RVec& gamma) const {
  AffineWeight r = *this;
  r.finite = finite + level * gamma;
  r.delta_coeff = delta_coeff - (rs.form(finite, gamma) + level * rs.norm2(gamma) / 2);
  return r;
}

Rational AffineWeight::norm2(const RootSystem& rs) const { return rs.norm2(finite) + 2 * level * delta_coeff; }

AffineWeight shifted_vacuum(const RootSystem& rs, const Rational& k) {
  return {rs.rho(), k + rs.dual_coxeter_number(), Rational(0)};
}

AdmissibleVacuum principal_admissible_vacuum(const RootSystem& rs, long p, long u) {
  const long hv = rs.dual_coxeter_number();
  if (u < 1) throw LieAlgebraError("u must be a positive integer, got " + std::to_string(u));
  if (p < hv)
    throw LieAlgebraError("p >= h^vee violated: p = " + std::to_string(p) + ", h^vee = " + std::to_string(hv));
  if (gcd_long(p, u) != 1)
    throw LieAlgebraError("gcd(p,u) = 1 violated: p = " + std::to_string(p) + ", u = " + std::to_string(u));
  if (gcd_long(u, rs.lacety()) != 1)
    throw LieAlgebraError("gcd(u,r^vee) = 1 violated: u = " + std::to_string(u) +
                          ", r^vee = " + std::to_string(rs.lacety()));
  AdmissibleVacuum v;
  v.p = p;
  v.u = u;
  v.k = make_rational(p, u) - hv;
  v.lambda = {zeros(rs.rank()), v.k, Rational(0)};
  v.lambda0 = {zeros(rs.rank()), Rational(p - hv), Rational(0)};
  return v;
}

}  // namespace qhr::liealg
