#include "qhr/characters/products.hpp"

#include <cstdlib>

namespace qhr::characters {

QJetSeries factor_product(const std::vector<LinearFactor>& factors, const Rational& N, int U) {
  Rational shift = 0;
  UJet mono(U, Gaussian(1));
  std::vector<LinearFactor> normal;
  for (const auto& f : factors) {
    if (f.count == 0) continue;
    if (f.e == 0 && f.c == 0) {
      if (f.count < 0) throw SeriesError("factor_product: inverse of an identically zero factor");
      return QJetSeries(U, N);
    }
    if (f.e < 0) {
      UJet m = -UJet::exp_linear(f.c, U);
      UJet p(U, Gaussian(1));
      for (long i = 0; i < std::labs(f.count); ++i) p = p * m;
      mono = mono * (f.count > 0 ? p : p.inverse());
      shift += f.e * f.count;
      normal.push_back({-f.e, -f.c, f.count});
    } else {
      normal.push_back(f);
    }
  }
  const Rational rel = N - shift;
  QJetSeries s = QJetSeries::constant(Gaussian(1), U, rel);
  if (rel < 0) return QJetSeries(U, N);
  for (const auto& f : normal) {
    if (f.e > rel) continue;
    const UJet y = UJet::exp_linear(f.c, U);
    if (f.count > 0) {
      for (long i = 0; i < f.count; ++i) s = s - s.shift_q(f.e).times_jet(y);
    } else if (f.e == 0) {
      throw SeriesError("factor_product: inverse of a factor vanishing at u = 0");
    } else {
      // 1/(1 - t) = (1 + t)(1 + t^2)(1 + t^4)...
      for (long i = 0; i < -f.count; ++i) {
        Rational step = f.e;
        UJet yk = y;
        while (step <= rel) {
          s = s + s.shift_q(step).times_jet(yk);
          step = step * 2;
          yk = yk * yk;
        }
      }
    }
    s = s.truncated(rel);
  }
  QJetSeries out = s.times_jet(mono).shift_q(shift);
  return out;
}

QJetSeries euler_power(const Rational& s, long count, const Rational& N) {
  std::vector<LinearFactor> f;
  for (long n = 1; s * n <= N; ++n) f.push_back({s * n, Rational(0), count});
  return factor_product(f, N, 0);
}

UQuotient cancel_u_and_divide(const QJetSeries& num, const QJetSeries& den) {
  const int m = den.u_order();
  if (m < 0) throw SeriesError("denominator vanishes to the full jet order; increase the jet order");
  const int mn = num.u_order();
  if (mn >= 0 && mn < m)
    throw SeriesError("quotient has a pole along the direction: numerator u-order " + std::to_string(mn) +
                      " < denominator u-order " + std::to_string(m));
  const auto inv = den.invert();
  UQuotient q;
  q.m = m;
  q.value = num.is_zero() ? QJetSeries(den.jet_order() - m, num.cutoff() - *den.lead_exponent())
                          : num.divide_u(m) * inv.inverse;
  return q;
}

QJetSeries compute_to(const std::function<QJetSeries(const Rational&)>& build, const Rational& N) {
  Rational c = N;
  for (int attempt = 0; attempt < 8; ++attempt) {
    QJetSeries s = build(c);
    if (s.cutoff() >= N) return s.truncated(N);
    c += (N - s.cutoff()) + 1;
  }
  throw SeriesError("could not reach the requested q-order " + N.get_str());
}

}  // namespace qhr::characters
