#include "qhr/characters/numerators.hpp"

#include "qhr/characters/products.hpp"
#include "qhr/liealg/lattice.hpp"

namespace qhr::characters {

namespace {

void require_level(const Rational& n) {
  if (n <= 0 || !is_integer(n)) throw liealg::LieAlgebraError("level must be a positive integer, got " + n.get_str());
}

Gaussian weyl_weight(const RootSystem& rs, const NilpotentSlice& slice, const WeylElement& w, const RVec& alpha,
                     const RVec& beta) {
  const Rational c = rs.form(beta, slice.x) * rs.form(w.apply(alpha), rs.coroot(beta)) / 4;
  return Gaussian(w.sign() * c);
}

}  // namespace

QJetSeries numerator_A_specialized(const RootSystem& rs, const std::vector<WeylElement>& W,
                                   const NilpotentSlice& slice, const AffineWeight& Lambda, const RVec& alpha,
                                   const RVec& z0, const Rational& N, int U) {
  require_level(Lambda.level);
  const Rational n = Lambda.level;
  const RVec& x = slice.x;
  const Rational x2 = rs.norm2(x);
  // q^{|Lambda|^2/2n} from F, and the point h = -tau d + (-tau x + z) + (tau|x|^2/2) K
  const Rational norm_shift = Lambda.norm2(rs) / (2 * n);
  SeriesAccumulator acc(U, N);
  for (const auto& w : W) {
    const RVec wx = w.apply_inverse(x);
    const Rational radius2 = 2 * n * N;
    for (const auto& gamma : liealg::coroot_ball(rs, Lambda.finite - n * wx, n, radius2)) {
      const Rational weight = rs.form(alpha, gamma) / 2;
      if (weight == 0) continue;
      const AffineWeight t = Lambda.translate(rs, gamma);
      const RVec wt = w.apply(t.finite);
      // e^{lambda}(tau, z', t') = e^{2 pi i (lambda_bar|z')} e^{2 pi i level t'} q^{-delta coefficient}
      const Rational e = norm_shift - t.delta_coeff - rs.form(wt, x) + t.level * x2 / 2;
      const Rational c = z0.empty() ? Rational(0) : rs.form(wt, z0);
      acc.add(e, Rational(w.sign()) * weight, c);
    }
  }
  auto s = acc.finish();
  if (!z0.empty()) s.set_direction(z0);
  return s;
}

QJetSeries reduced_weyl_theta_sum(const RootSystem& rs, const std::vector<WeylElement>& W, const NilpotentSlice& slice,
                        const RVec& lambda_bar, long n, const RVec& alpha, const RVec& z0, const Rational& N, int U,
                        const std::optional<RVec>& beta) {
  require_level(Rational(n));
  const RVec b = beta ? *beta : slice.beta;
  const Rational bx = rs.form(b, slice.x);
  if (!is_integer(bx)) throw liealg::LieAlgebraError("beta(x) must be an integer");
  SeriesAccumulator acc(U, N);
  for (const auto& w : W) {
    const Gaussian wt = weyl_weight(rs, slice, w, alpha, b);
    if (wt.is_zero()) continue;
    theta::ThetaArgs args;
    args.direction = z0.empty() ? RVec{} : w.apply_inverse(z0);
    args.tau_shift = -w.apply_inverse(slice.x);
    args.q_offset = Rational(n) * rs.norm2(slice.x) / 2;
    theta::accumulate_theta(rs, lambda_bar, Rational(n), args, wt, acc, N);
  }
  auto s = acc.finish();
  if (!z0.empty()) s.set_direction(z0);
  return s;
}

QJetSeries numerator_B(const RootSystem& rs, const std::vector<WeylElement>& W, const NilpotentSlice& slice,
                       Variant variant, const RVec& lambda_bar, long n, const RVec& alpha, const RVec& z0,
                       const Rational& N, int U) {
  require_level(Rational(n));
  SeriesAccumulator acc(U, N);
  for (const auto& w : W) {
    const Gaussian wt = weyl_weight(rs, slice, w, alpha, slice.beta);
    if (wt.is_zero()) continue;
    const auto args = theta::f_args(rs, variant, Rational(n), w, slice.x, z0);
    theta::accumulate_theta(rs, lambda_bar, Rational(n), args, wt, acc, N);
  }
  auto s = acc.finish();
  if (!z0.empty()) s.set_direction(z0);
  return s;
}

CharacterResult psi(const RootSystem& rs, const std::vector<WeylElement>& W, const NilpotentSlice& slice,
                    Variant variant, const RVec& lambda_bar, long n, const RVec& alpha, const RVec& z0,
                    const Rational& N, int U) {
  int m = 0;
  for (int idx : slice.delta0_positive)
    if (z0.empty() || rs.form(rs.roots()[idx], z0) != 0) ++m;
  // theta_11 with a vanishing argument is identically zero
  if (!z0.empty())
    for (int idx : slice.delta0_positive)
      if (rs.form(rs.roots()[idx], z0) == 0)
        throw SeriesError("direction z0 is orthogonal to a root of Delta^0_+; the denominator vanishes");
  if (z0.empty() && !slice.delta0_positive.empty())
    throw SeriesError("Delta^0_+ is nonempty: a direction z0 in h^f is required");
  const int Ub = U + m;
  const Rational lead = theta::w_denominator_lead(slice, variant);
  CharacterResult r;
  r.series = compute_to(
      [&](const Rational& c) {
        const auto den = theta::w_denominator(rs, slice, variant, z0, c + lead, Ub);
        const auto num = numerator_B(rs, W, slice, variant, lambda_bar, n, alpha, z0, c + lead, Ub);
        auto q = cancel_u_and_divide(num, den);
        r.u_cancelled = q.m;
        return q.value;
      },
      N);
  if (!z0.empty()) r.series.set_direction(z0);
  r.limit = r.series.u0_part();
  r.label = "psi/" + theta::to_string(variant);
  return r;
}

Gaussian denominator_phase(const NilpotentSlice& slice) {
  static const Gaussian powers[4] = {Gaussian(1), Gaussian(Rational(0), Rational(1)), Gaussian(-1),
                                     Gaussian(Rational(0), Rational(-1))};
  return powers[slice.delta0_positive.size() % 4];
}

Rational wmin_central_charge(const RootSystem& rs, const Rational& k) {
  const long hv = rs.dual_coxeter_number();
  return k * rs.dimension() / (k + hv) - 6 * k + hv - 4;
}

CharacterResult wmin_character(const RootSystem& rs, const std::vector<WeylElement>& W, long k, const Rational& N,
                               int U, const std::optional<RVec>& z0) {
  const int b = liealg::deligne_b(rs);
  if (k >= 0 || k < -b)
    throw liealg::LieAlgebraError("W^min_k needs a negative integer k >= -b = " + std::to_string(-b) +
                                  ", got k = " + std::to_string(k));
  const auto slice = liealg::minimal_slice(rs);
  const RVec dir = z0 ? *z0 : liealg::generic_direction(rs, slice);
  const RVec alpha = liealg::alpha_j(rs, static_cast<int>(-k));
  const long n = k + rs.dual_coxeter_number();
  auto r = psi(rs, W, slice, Variant::Plain, rs.rho(), n, alpha, dir, N, U);
  r.series = r.series * denominator_phase(slice);
  r.limit = r.series.u0_part();
  r.central_charge = wmin_central_charge(rs, Rational(k));
  r.central_charge_external = true;
  r.label = rs.name() + " W^min_k, k = " + std::to_string(k);
  return r;
}

DenominatorIdentity minimal_denominator_identity(const RootSystem& rs, const std::vector<WeylElement>& W,
                                                 const Rational& N, int U, bool literal_shift,
                                                 const std::optional<RVec>& z0) {
  const int b = liealg::deligne_b(rs);
  const auto slice = liealg::minimal_slice(rs);
  const RVec dir = z0 ? *z0 : liealg::generic_direction(rs, slice);
  const RVec alpha = liealg::alpha_j(rs, b);
  const long n = rs.dual_coxeter_number() - b;
  const RVec& theta = rs.highest_root();
  DenominatorIdentity out;
  out.denominator = theta::w_denominator(rs, slice, Variant::Plain, dir, N, U);
  SeriesAccumulator acc(U, N);
  for (const auto& w : W) {
    const Rational c = Rational(w.sign()) * rs.form(w.apply(alpha), theta) / 4;
    if (c == 0) continue;
    const RVec half = make_rational(1, 2) * (literal_shift ? w.apply(theta) : w.apply_inverse(theta));
    theta::ThetaArgs args;
    args.direction = w.apply_inverse(dir);
    args.tau_shift = -half;
    args.q_offset = Rational(n) * rs.norm2(half) / 2;
    theta::accumulate_theta(rs, rs.rho(), Rational(n), args, Gaussian(c), acc, N);
  }
  out.weyl_sum = acc.finish() * denominator_phase(slice);
  out.weyl_sum.set_direction(dir);
  out.equal = series_equal(out.denominator, out.weyl_sum, N, U);
  return out;
}

}  // namespace qhr::characters
