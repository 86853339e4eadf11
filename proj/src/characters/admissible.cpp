#include "qhr/characters/admissible.hpp"

#include "qhr/characters/products.hpp"
#include "qhr/liealg/lattice.hpp"

#include <cmath>

namespace qhr::characters {

namespace {

using liealg::LieAlgebraError;

Gaussian minus_i_power(long k) {
  static const Gaussian powers[4] = {Gaussian(1), Gaussian(Rational(0), Rational(-1)), Gaussian(-1),
                                     Gaussian(Rational(0), Rational(1))};
  return powers[((k % 4) + 4) % 4];
}

void require_dominant(const RootSystem& rs, const RVec& lambda0, long level) {
  if (level < 0) throw LieAlgebraError("level of Lambda^0 must be nonnegative, got " + std::to_string(level));
  const RVec c = rs.weight_coords(lambda0);
  for (const auto& v : c)
    if (!is_integer(v) || v < 0) throw LieAlgebraError("Lambda^0 must be dominant integral");
  if (rs.form(lambda0, rs.coroot(rs.highest_root())) > level)
    throw LieAlgebraError("Lambda^0 is not dominant at level " + std::to_string(level) + ": (lambda|theta) too large");
}

QJetSeries eta_power(const Rational& scale, long power, const Rational& N) {
  // eta(s tau)^E = q^{sE/24} prod (1 - q^{sn})^E
  const Rational lead = scale * power / 24;
  return euler_power(scale, power, N - lead).shift_q(lead);
}

// theta_11(u tau, -j tau) = i sum_m (-1)^m q^{u(m+1/2)^2/2 - j(m+1/2)}
QJetSeries theta11_at_multiple(long u, const Rational& j, const Rational& N) {
  QJetSeries s(0, N);
  const double jd = j.get_d(), disc = jd * jd + 2.0 * u * std::max(0.0, N.get_d() + 1);
  const long lo = static_cast<long>(std::floor((jd - std::sqrt(disc)) / u)) - 2;
  const long hi = static_cast<long>(std::ceil((jd + std::sqrt(disc)) / u)) + 2;
  for (long m = lo; m <= hi; ++m) {
    const Rational t = Rational(m) + make_rational(1, 2);
    const Rational e = Rational(u) * t * t / 2 - j * t;
    s.add_term(e, UJet(0, Gaussian(Rational(0), Rational(m % 2 == 0 ? 1 : -1))));
  }
  return s;
}

QJetSeries power_of(const QJetSeries& s, long k) {
  if (k >= 0) return s.pow(k);
  return s.pow(-k).invert().inverse;
}

void require_boundary(const RootSystem& rs, long u) {
  if (u < 1) throw LieAlgebraError("u must be a positive integer, got " + std::to_string(u));
  if (gcd_long(u, rs.dual_coxeter_number()) != 1)
    throw LieAlgebraError("boundary level needs gcd(u, h^vee) = 1: u = " + std::to_string(u) +
                          ", h^vee = " + std::to_string(rs.dual_coxeter_number()));
  if (gcd_long(u, rs.lacety()) != 1)
    throw LieAlgebraError("boundary level needs gcd(u, r^vee) = 1: u = " + std::to_string(u));
}

}  // namespace

QJetSeries integrable_character_specialized(const RootSystem& rs, const std::vector<WeylElement>& W,
                                            const RVec& lambda0, long m, long u, const RVec& x, const Rational& N) {
  require_dominant(rs, lambda0, m);
  if (u < 1) throw LieAlgebraError("u must be a positive integer");
  const long hv = rs.dual_coxeter_number();
  const long p = m + hv;
  const RVec mu0 = lambda0 + rs.rho();
  const RVec zeta = rs.rho_vee();
  const Rational ur(u), pr(p);
  // order of vanishing of the specialized denominator at zeta = 0
  int order = 0;
  Rational over = 0;
  for (const auto& a : rs.positive_roots()) {
    const Rational ax = rs.form(a, x);
    if (ax == 0) ++order;
    for (long n = 1; ur * n <= ax; ++n) {
      if (ur * n == ax) ++order;
      over += ax - ur * n;
    }
  }
  const Rational x2 = rs.norm2(x);
  const Rational mono = Rational(hv) * x2 / (2 * ur) + ur * rs.norm2(rs.rho()) / (2 * hv) - rs.form(rs.rho(), x);
  const Rational theta_x = rs.form(rs.highest_root(), x);
  auto build = [&](const Rational& c) {
    SeriesAccumulator acc(order, c);
    for (const auto& w : W) {
      const RVec center = mu0 - (pr / ur) * w.apply_inverse(x);
      const Rational radius2 = 2 * pr * c / ur;
      if (radius2 < 0) continue;
      for (const auto& gamma : liealg::coroot_ball(rs, center, pr, radius2)) {
        const RVec mu = mu0 + pr * gamma;
        const RVec d = mu - (pr / ur) * w.apply_inverse(x);
        acc.add(ur * rs.norm2(d) / (2 * pr), Rational(w.sign()), rs.form(w.apply(mu), zeta));
      }
    }
    const QJetSeries num = acc.finish();
    std::vector<LinearFactor> f;
    const Rational rel = c - mono + over;
    const long nmax = floor_of((rel + theta_x) / ur).get_si() + 2;
    for (long n = 1; n <= nmax; ++n) f.push_back({ur * n, Rational(0), static_cast<long>(rs.rank())});
    for (const auto& a : rs.positive_roots()) {
      const Rational ax = rs.form(a, x), az = rs.form(a, zeta);
      for (long n = 0; n <= nmax; ++n) {
        f.push_back({ur * n + ax, -az, 1});
        if (n >= 1) f.push_back({ur * n - ax, az, 1});
      }
    }
    QJetSeries den = factor_product(f, c - mono, order).times_jet(UJet::exp_linear(rs.form(rs.rho(), zeta), order));
    den = den.shift_q(mono);
    return cancel_u_and_divide(num, den).value.u0_part();
  };
  return compute_to(build, N);
}

QJetSeries vacuum_character_dimension_sum(const RootSystem& rs, long p, const Rational& N) {
  const long hv = rs.dual_coxeter_number();
  if (p < hv) throw LieAlgebraError("p >= h^vee violated");
  const Rational pr(p);
  const long dim = rs.dimension();
  auto build = [&](const Rational& c) {
    const Rational top = c + Rational(dim) / 24;
    QJetSeries num(0, top);
    for (const auto& gamma : liealg::coroot_ball(rs, rs.rho(), pr, 2 * pr * top)) {
      const RVec v = rs.rho() + pr * gamma;
      Rational d = 1;
      for (const auto& a : rs.positive_roots()) d *= rs.form(v, a) / rs.form(rs.rho(), a);
      num.add_term(rs.norm2(v) / (2 * pr), UJet(0, Gaussian(d)));
    }
    return num * eta_power(Rational(1), -dim, c + 1);
  };
  return compute_to(build, N);
}

Rational qhr_prefactor_exponent(const RootSystem& rs, const NilpotentSlice& slice, long u) {
  const long hv = rs.dual_coxeter_number();
  const Rational ur(u);
  const RVec v = ur * rs.rho() - Rational(hv) * slice.x;
  return rs.norm2(v) / (2 * ur * hv) - Rational(slice.dim_g0()) / 24 + Rational(slice.dim_g_half()) / 48 +
         Rational(rs.rank()) * (1 - ur) / 24;
}

CharacterResult qhr_admissible_character(const RootSystem& rs, const std::vector<WeylElement>& W,
                                         const NilpotentSlice& slice, long p, long u, const RVec& lambda0,
                                         const Rational& N) {
  const auto vac = liealg::principal_admissible_vacuum(rs, p, u);
  const long level = p - rs.dual_coxeter_number();
  require_dominant(rs, lambda0, level);
  const Rational a = qhr_prefactor_exponent(rs, slice, u);
  const Rational ur(u);
  const long l = rs.rank();
  auto build = [&](const Rational& c) {
    std::vector<LinearFactor> f;
    const Rational span = c + slice.theta_x + 2;
    const long nmax = floor_of(span).get_si() + 2;
    for (long n = 1; ur * n <= span; ++n) {
      f.push_back({ur * n, Rational(0), l});
    }
    for (long n = 1; n <= nmax; ++n) f.push_back({Rational(n), Rational(0), -l});
    for (const auto& al : rs.positive_roots()) {
      const Rational ax = rs.form(al, slice.x);
      if (ax > 0) f.push_back({ax, Rational(0), 1});
      if (ax == make_rational(1, 2))
        for (long n = 1; n <= nmax; ++n) f.push_back({Rational(n) - make_rational(1, 2), Rational(0), -1});
      for (long n = 1; ur * n - ax <= span; ++n) {
        f.push_back({ur * n + ax, Rational(0), 1});
        f.push_back({ur * n - ax, Rational(0), 1});
      }
      if (ax == 0)
        for (long n = 1; n <= nmax; ++n) f.push_back({Rational(n), Rational(0), -2});
    }
    const Rational eta_shift = Rational(l) * (ur - 1) / 24;
    QJetSeries prod = factor_product(f, c - a - eta_shift + 2, 0).shift_q(a + eta_shift);
    const QJetSeries d = integrable_character_specialized(rs, W, lambda0, level, u, slice.x, c + 2);
    return prod * d;
  };
  CharacterResult r;
  r.series = compute_to(build, N);
  r.limit = r.series;
  r.central_charge = qhr_central_charge(rs, slice, p, u);
  r.label = rs.name() + " QHR " + liealg::to_string(slice.kind) + " p=" + std::to_string(p) + " u=" +
            std::to_string(u);
  (void)vac;
  return r;
}

CharacterResult principal_product_formula(const RootSystem& rs, long p, long u, const RVec& lambda0,
                                         const Rational& N) {
  if (u < 1) throw LieAlgebraError("u must be a positive integer");
  require_dominant(rs, lambda0, p - rs.dual_coxeter_number());
  const Rational kh = make_rational(p, u);
  const RVec v = lambda0 + rs.rho() - kh * rs.rho_vee();
  const Rational pre = rs.norm2(v) / (2 * kh);
  const long l = rs.rank();
  const RVec mu = lambda0 + rs.rho();
  auto build = [&](const Rational& c) {
    const Rational rel = c - pre + Rational(l) / 24;
    std::vector<LinearFactor> f;
    for (long j = 1; Rational(p * j) <= rel; ++j) f.push_back({Rational(p * j), Rational(0), l});
    for (const auto& a : rs.positive_roots()) {
      const Rational s = 2 / rs.norm2(a);
      const Rational base = rs.form(mu, rs.coroot(a));
      for (long j = 0; base + s * j * p <= rel; ++j) f.push_back({base + s * j * p, Rational(0), 1});
      for (long j = 1; s * j * p - base <= rel; ++j) f.push_back({s * j * p - base, Rational(0), 1});
    }
    QJetSeries prod = factor_product(f, rel, 0);
    return (prod * euler_power(Rational(1), -l, rel)).shift_q(pre - Rational(l) / 24);
  };
  CharacterResult r;
  r.series = compute_to(build, N);
  r.limit = r.series;
  r.central_charge = qhr_central_charge(rs, liealg::principal_slice(rs), p, u);
  r.label = rs.name() + " principal product p=" + std::to_string(p) + " u=" + std::to_string(u);
  return r;
}

CharacterResult principal_qhr_character(const RootSystem& rs, long p, const RVec& lambda0, const Rational& N) {
  const long h = rs.coxeter_number(), hv = rs.dual_coxeter_number();
  if (p < hv) throw LieAlgebraError("p >= h^vee violated: p = " + std::to_string(p));
  if (gcd_long(p, h) != 1)
    throw LieAlgebraError("gcd(p, h) = 1 violated: p = " + std::to_string(p) + ", h = " + std::to_string(h));
  auto r = principal_product_formula(rs, p, h, lambda0, N);
  r.label = rs.name() + " principal QHR p=" + std::to_string(p);
  return r;
}

CharacterResult boundary_affine_character(const RootSystem& rs, long u, const Rational& N) {
  require_boundary(rs, u);
  const long dim = rs.dimension();
  auto build = [&](const Rational& c) {
    return eta_power(Rational(u), dim, c + 1) * eta_power(Rational(1), -dim, c + 1);
  };
  CharacterResult r;
  r.series = compute_to(build, N);
  r.limit = r.series;
  r.central_charge = Rational((1 - u) * dim);
  r.label = rs.name() + " boundary vacuum u=" + std::to_string(u);
  return r;
}

CharacterResult boundary_qhr_character(const RootSystem& rs, const NilpotentSlice& slice, long u,
                                       const Rational& N, bool literal_phase) {
  require_boundary(rs, u);
  const long dim = rs.dimension(), d0 = slice.dim_g0(), dh = slice.dim_g_half();
  const long hv = rs.dual_coxeter_number();
  Rational depth = 0;
  for (const auto& j : slice.grades())
    if (j > 0) depth += j * j * slice.dim_graded(j) / (2 * u);
  auto build = [&](const Rational& c) {
    const Rational span = c + depth + 2;
    QJetSeries s = eta_power(Rational(u), (3 * d0 - dim) / 2, span) * eta_power(Rational(1), -(d0 - dh), span) *
                   eta_power(make_rational(1, 2), -dh, span);
    for (const auto& j : slice.grades()) {
      if (j <= 0) continue;
      s = s * theta11_at_multiple(u, j, span).pow(slice.dim_graded(j));
    }
    s = s.shift_q(Rational(hv) * rs.norm2(slice.x) / (2 * u));
    const long phase = static_cast<long>(rs.num_positive()) - (literal_phase ? 0 : static_cast<long>(slice.delta0_positive.size()));
    return s * minus_i_power(phase);
  };
  CharacterResult r;
  r.series = compute_to(build, N);
  r.limit = r.series;
  r.central_charge = boundary_qhr_central_charge(rs, slice, u);
  r.label = rs.name() + " boundary QHR u=" + std::to_string(u);
  return r;
}

CharacterResult boundary_qhr_character_product(const RootSystem& rs, const NilpotentSlice& slice, long u,
                                               const Rational& N, bool literal_phase) {
  require_boundary(rs, u);
  const long dim = rs.dimension(), d0 = slice.dim_g0(), dh = slice.dim_g_half();
  const long hv = rs.dual_coxeter_number();
  const Rational ur(u);
  const Rational pre = Rational(hv) * rs.norm2(slice.x) / (2 * ur) - rs.form(rs.rho(), slice.x) +
                       ur * (dim - d0) / 24;
  Rational depth = 0;
  for (const auto& j : slice.grades())
    if (j > 0) depth += j * j * slice.dim_graded(j) / ur;
  auto build = [&](const Rational& c) {
    const Rational slack = c + depth + 2;
    std::vector<LinearFactor> f;
    for (const auto& j : slice.grades()) {
      if (j <= 0) continue;
      const long mult = slice.dim_graded(j);
      for (long n = 1; ur * n - ur <= slack - pre + j; ++n) {
        f.push_back({ur * n - j, Rational(0), mult});
        f.push_back({ur * n - (ur - j), Rational(0), mult});
      }
    }
    QJetSeries s = factor_product(f, slack - pre, 0).shift_q(pre);
    s = s * eta_power(Rational(u), d0, slack) * eta_power(Rational(1), -(d0 - dh), slack) *
        eta_power(make_rational(1, 2), -dh, slack);
    return literal_phase ? s * minus_i_power(static_cast<long>(slice.delta0_positive.size())) : s;
  };
  CharacterResult r;
  r.series = compute_to(build, N);
  r.limit = r.series;
  r.central_charge = boundary_qhr_central_charge(rs, slice, u);
  r.label = rs.name() + " boundary QHR product u=" + std::to_string(u);
  return r;
}

CharacterResult admissible_vacuum_character(const RootSystem& rs, long p, long u, const Rational& N) {
  const auto vac = liealg::principal_admissible_vacuum(rs, p, u);
  const long dim = rs.dimension();
  auto build = [&](const Rational& c) {
    const QJetSeries ch = vacuum_character_dimension_sum(rs, p, c / u + 1).rescale_q(u);
    return ch * eta_power(Rational(u), dim, c + 1) * eta_power(Rational(1), -dim, c + 1);
  };
  CharacterResult r;
  r.series = compute_to(build, N);
  r.limit = r.series;
  r.central_charge = affine_central_charge(rs, vac.k);
  r.label = rs.name() + " admissible vacuum p=" + std::to_string(p) + " u=" + std::to_string(u);
  return r;
}

bool vanishing_predicate(const NilpotentSlice& slice, long u) { return Rational(u) <= slice.theta_x; }

Rational affine_central_charge(const RootSystem& rs, const Rational& k) {
  return k * rs.dimension() / (k + rs.dual_coxeter_number());
}

Rational qhr_central_charge(const RootSystem& rs, const NilpotentSlice& slice, long p, long u) {
  const RVec v = rs.rho() - make_rational(p, u) * slice.x;
  return Rational(slice.dim_g0()) - Rational(slice.dim_g_half()) / 2 - make_rational(12 * u, p) * rs.norm2(v);
}

Rational boundary_qhr_central_charge(const RootSystem& rs, const NilpotentSlice& slice, long u) {
  return qhr_central_charge(rs, slice, rs.dual_coxeter_number(), u);
}

}  // namespace qhr::characters
