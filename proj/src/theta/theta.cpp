#include "qhr/theta/theta.hpp"

#include "qhr/liealg/lattice.hpp"

#include <cmath>

namespace qhr::theta {

namespace {

Rational pairing(const RootSystem& rs, const RVec& a, const RVec& b) {
  if (a.empty() || b.empty()) return 0;
  return rs.form(a, b);
}

// The series divided by q^lead, so that products keep their relative order.
QJetSeries relative(const QJetSeries& s, const Rational& lead) { return s.shift_q(-lead); }

QJetSeries one(int U, const Rational& N) { return QJetSeries::constant(Gaussian(1), U, N); }

}  // namespace

std::string to_string(Variant v) {
  switch (v) {
    case Variant::Plain:
      return "plain";
    case Variant::Minus:
      return "minus";
    case Variant::Star:
      return "star";
  }
  return "?";
}

void for_each_theta_point(const RootSystem& rs, const RVec& lambda_bar, const Rational& n, const RVec& tau_shift,
                          const Rational& q_offset, const Rational& cutoff,
                          const std::function<void(const RVec& mu, const Rational& exponent)>& visit) {
  if (n <= 0) throw liealg::LieAlgebraError("theta functions need a positive level, got " + n.get_str());
  // |mu|^2/2n + (mu|y) + off = |mu + n y|^2/2n - n|y|^2/2 + off
  const RVec y = tau_shift.empty() ? zeros(rs.rank()) : tau_shift;
  const Rational shift2 = rs.norm2(y);
  const Rational radius2 = 2 * n * (cutoff - q_offset + n * shift2 / 2);
  if (radius2 < 0) return;
  const RVec center = lambda_bar + n * y;
  for (const auto& gamma : liealg::coroot_ball(rs, center, n, radius2)) {
    const RVec mu = lambda_bar + n * gamma;
    const Rational e = rs.norm2(mu) / (2 * n) + rs.form(mu, y) + q_offset;
    visit(mu, e);
  }
}

void accumulate_theta(const RootSystem& rs, const RVec& lambda_bar, const Rational& n, const ThetaArgs& args,
                      const Gaussian& weight, SeriesAccumulator& acc, const Rational& cutoff) {
  const bool real_weight = weight.is_real();
  for_each_theta_point(rs, lambda_bar, n, args.tau_shift, args.q_offset, cutoff,
                       [&](const RVec& mu, const Rational& e) {
                         const Rational c = pairing(rs, mu, args.direction);
                         const Rational ph = pairing(rs, mu, args.phase);
                         if (sgn(ph) == 0 && real_weight) {
                           acc.add(e, weight.re, c);
                         } else {
                           acc.add(e, weight * root_of_unity(ph), c);
                         }
                       });
}

QJetSeries theta_lambda(const RootSystem& rs, const RVec& lambda_bar, long n, const RVec& z0, const Rational& N,
                        int U) {
  SeriesAccumulator acc(U, N);
  accumulate_theta(rs, lambda_bar, Rational(n), ThetaArgs{z0, {}, {}, Rational(0)}, Gaussian(1), acc, N);
  auto s = acc.finish();
  s.set_direction(z0);
  return s;
}

ThetaArgs f_args(const RootSystem& rs, const Rational& n, const WeylElement& w, const RVec& x, const RVec& z0, int a,
                 int b) {
  const RVec xw = w.apply_inverse(x);
  ThetaArgs args;
  args.direction = z0.empty() ? RVec{} : w.apply_inverse(z0);
  args.tau_shift = Rational(b - 1) * xw;
  args.phase = Rational(a) * xw;
  args.q_offset = n * rs.norm2(x) / 2;
  return args;
}

ThetaArgs f_args(const RootSystem& rs, Variant variant, const Rational& n, const WeylElement& w, const RVec& x,
                 const RVec& z0) {
  switch (variant) {
    case Variant::Plain:
      return f_args(rs, n, w, x, z0, 0, 0);
    case Variant::Minus:
      return f_args(rs, n, w, x, z0, 1, 0);
    case Variant::Star: {
      ThetaArgs args = f_args(rs, n, w, x, z0, 1, 1);
      args.q_offset -= n * rs.norm2(x) / 2;
      return args;
    }
  }
  throw std::logic_error("unknown variant");
}

QJetSeries f_function(const RootSystem& rs, Variant variant, const RVec& lambda_bar, long n, const WeylElement& w,
                      const RVec& x, const RVec& z0, const Rational& N, int U) {
  SeriesAccumulator acc(U, N);
  accumulate_theta(rs, lambda_bar, Rational(n), f_args(rs, variant, Rational(n), w, x, z0), Gaussian(1), acc, N);
  auto s = acc.finish();
  s.set_direction(z0);
  return s;
}

QJetSeries f_shifted(const RootSystem& rs, const RVec& lambda_bar, long n, const WeylElement& w, const RVec& x,
                     const RVec& z0, int a, int b, const Rational& N, int U) {
  SeriesAccumulator acc(U, N);
  accumulate_theta(rs, lambda_bar, Rational(n), f_args(rs, Rational(n), w, x, z0, a, b), Gaussian(1), acc, N);
  auto s = acc.finish();
  s.set_direction(z0);
  return s;
}

QJetSeries dedekind_eta(const Rational& N, int U) { return dedekind_eta_scaled(Rational(1), N, U); }

QJetSeries dedekind_eta_scaled(const Rational& scale, const Rational& N, int U) {
  if (scale <= 0) throw std::invalid_argument("eta(s tau) needs s > 0");
  QJetSeries s(U, N);
  const Rational lead = scale / 24;
  // pentagonal exponents k(3k-1)/2 for k = 0, 1, -1, 2, -2, ...
  s.add_term(lead, UJet(U, Gaussian(1)));
  for (long k = 1;; ++k) {
    bool any = false;
    for (long kk : {k, -k}) {
      const Rational e = lead + scale * Rational(kk * (3 * kk - 1) / 2);
      if (e > N) continue;
      any = true;
      s.add_term(e, UJet(U, Gaussian(k % 2 == 0 ? 1 : -1)));
    }
    if (!any) break;
  }
  return s;
}

Rational jacobi_theta_lead(ThetaKind kind) {
  return (kind == ThetaKind::T10 || kind == ThetaKind::T11) ? make_rational(1, 8) : Rational(0);
}

QJetSeries jacobi_theta(ThetaKind kind, const Rational& zcoef, const Rational& N, int U) {
  if (kind == ThetaKind::T11) return jacobi_theta11_product(zcoef, N, U);
  const Rational shift = kind == ThetaKind::T10 ? make_rational(1, 2) : Rational(0);
  SeriesAccumulator acc(U, N);
  if (N < 0) return acc.finish();
  const long J = static_cast<long>(std::sqrt(2 * N.get_d())) + 2;
  for (long j = -J; j <= J; ++j) {
    const Rational m = Rational(j) + shift;
    const Rational sign = (kind == ThetaKind::T01 && j % 2 != 0) ? Rational(-1) : Rational(1);
    acc.add(m * m / 2, sign, m * zcoef);
  }
  return acc.finish();
}

QJetSeries jacobi_theta11_product(const Rational& zcoef, const Rational& N, int U) {
  const Rational lead = make_rational(1, 8);
  const Rational rel = N - lead;
  if (rel < 0) return QJetSeries(U, N);
  // q^{1/12} eta(tau) = q^{1/8} prod (1 - q^n)
  QJetSeries p = one(U, rel);
  const UJet y = UJet::exp_linear(zcoef, U), yinv = UJet::exp_linear(-zcoef, U);
  for (long k = 1; k <= floor_of(rel).get_si(); ++k) {
    QJetSeries f = one(U, rel);
    f.add_term(Rational(k), -UJet(U, Gaussian(1)));
    QJetSeries g = one(U, rel);
    g.add_term(Rational(k), -yinv);
    p = p * f * g;
  }
  for (long k = 1; k <= floor_of(rel).get_si() + 1; ++k) {
    QJetSeries h = one(U, rel);
    h.add_term(Rational(k - 1), -y);
    p = p * h;
  }
  p = p.times_jet(UJet::exp_linear(-zcoef / 2, U)) * Gaussian(Rational(0), Rational(-1));
  return p.shift_q(lead);
}

long eta_exponent(const NilpotentSlice& slice) {
  const long twice = 3 * slice.rank - slice.dim_gf();
  if (twice % 2 != 0) throw std::logic_error("eta exponent of the W-denominator is not an integer");
  return twice / 2;
}

Rational w_denominator_lead(const NilpotentSlice& slice, Variant variant) {
  Rational lead = Rational(eta_exponent(slice)) / 24 + Rational(static_cast<long>(slice.delta0_positive.size())) / 8;
  if (variant == Variant::Star) lead += Rational(static_cast<long>(slice.delta_half.size())) / 16;
  return lead;
}

namespace {

ThetaKind half_kind(Variant v) {
  switch (v) {
    case Variant::Plain:
      return ThetaKind::T01;
    case Variant::Minus:
      return ThetaKind::T00;
    case Variant::Star:
      return ThetaKind::T10;
  }
  return ThetaKind::T01;
}

// Square root of a series whose leading constant is a positive rational square.
QJetSeries sqrt_scaled(const QJetSeries& s) {
  const Gaussian c = s.terms().begin()->second[0];
  if (!c.is_real() || sgn(c.re) <= 0) throw SeriesError("square root of a non-positive leading coefficient");
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), c.re.get_num_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), c.re.get_den_mpz_t());
  const Rational root = Rational(rn) / Rational(rd);
  if (root * root != c.re) throw SeriesError("leading coefficient " + c.re.get_str() + " is not a rational square");
  return (s * Gaussian(Rational(1) / c.re)).sqrt_unit() * Gaussian(root);
}

}  // namespace

QJetSeries w_denominator(const RootSystem& rs, const NilpotentSlice& slice, Variant variant, const RVec& z0,
                         const Rational& N, int U) {
  const Rational lead = w_denominator_lead(slice, variant);
  const Rational rel = N - lead;
  if (rel < 0) return QJetSeries(U, N);
  const long E = eta_exponent(slice);
  const QJetSeries eta_rel = relative(dedekind_eta(rel + make_rational(1, 24), U), make_rational(1, 24));
  QJetSeries r = eta_rel.pow(std::labs(E));
  if (E < 0) r = r.invert().inverse;
  const auto& roots = rs.roots();
  auto coef = [&](int idx) { return z0.empty() ? Rational(0) : rs.form(roots[idx], z0); };
  for (int idx : slice.delta0_positive) {
    const Rational c = coef(idx);
    r = r * relative(jacobi_theta(ThetaKind::T11, c, rel + make_rational(1, 8), U), make_rational(1, 8));
  }
  if (!slice.delta_half.empty()) {
    const ThetaKind kind = half_kind(variant);
    const Rational tl = jacobi_theta_lead(kind);
    QJetSeries h = one(U, rel);
    for (int idx : slice.delta_half) h = h * relative(jacobi_theta(kind, coef(idx), rel + tl, U), tl);
    r = r * sqrt_scaled(h);
  }
  auto out = r.shift_q(lead);
  if (!z0.empty()) out.set_direction(z0);
  return out;
}

QJetSeries half_product_by_pairing(const RootSystem& rs, const NilpotentSlice& slice, ThetaKind kind, const RVec& z0,
                                   const Rational& N, int U) {
  if (slice.kind != liealg::SliceKind::Minimal) throw std::invalid_argument("pairing form needs the minimal slice");
  const Rational tl = jacobi_theta_lead(kind);
  const long d = static_cast<long>(slice.delta_half.size());
  const Rational lead = tl * d / 2;
  const Rational rel = N - lead;
  QJetSeries h = one(U, rel);
  const auto& theta = rs.highest_root();
  for (int idx : slice.delta_half) {
    const RVec& a = rs.roots()[idx];
    // take one root from each pair {a, theta - a}
    if (a > theta - a) continue;
    const Rational c = z0.empty() ? Rational(0) : rs.form(a, z0);
    h = h * relative(jacobi_theta(kind, c, rel + tl, U), tl);
  }
  return h.shift_q(lead);
}

}  // namespace qhr::theta
