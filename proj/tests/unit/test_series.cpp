#include "qhr/series/qseries.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qhr;

namespace {

QJetSeries mono(const Rational& e, const Gaussian& c, const Rational& cutoff, int U = 0) {
  return QJetSeries::monomial(e, UJet(U, c), cutoff);
}

// Euler product prod_{n>=1} (1 - q^n) up to q^N, built factor by factor.
QJetSeries euler_product(int N, int U = 0) {
  QJetSeries p = QJetSeries::constant(Gaussian(1), U, Rational(N));
  for (int n = 1; n <= N; ++n) p = p * (QJetSeries::constant(Gaussian(1), U, Rational(N)) - mono(n, 1, N, U));
  return p;
}

QJetSeries random_series(std::mt19937_64& rng, int U, const Rational& cutoff) {
  std::uniform_int_distribution<int> coef(-5, 5), expo(0, 12), count(1, 6);
  QJetSeries s(U, cutoff);
  const int n = count(rng);
  for (int t = 0; t < n; ++t) {
    UJet j(U);
    for (int k = 0; k <= U; ++k) j[k] = Gaussian(make_rational(coef(rng), 1 + (k % 3)), Rational(coef(rng)));
    s.add_term(make_rational(expo(rng), 4), j);
  }
  return s;
}

}  // namespace

TEST(Series, IdentityAndHalfPowers) {
  const QJetSeries one = QJetSeries::constant(1, 2, 6);
  const QJetSeries s = mono(make_rational(1, 3), Gaussian(2, 1), 6, 2) + mono(2, 5, 6, 2);
  EXPECT_TRUE(series_equal(one * s, s, 6, 2));
  const auto h = mono(make_rational(1, 2), 1, 6);
  EXPECT_TRUE(series_equal(h * h, mono(1, 1, 6), 6, 0));
}

TEST(Series, EtaInverse) {
  const auto e = euler_product(8);
  // pentagonal numbers oracle: 1 - q - q^2 + q^5 + q^7
  EXPECT_EQ(e.coefficient(1), Gaussian(-1));
  EXPECT_EQ(e.coefficient(2), Gaussian(-1));
  EXPECT_EQ(e.coefficient(3), Gaussian(0));
  EXPECT_EQ(e.coefficient(5), Gaussian(1));
  EXPECT_EQ(e.coefficient(7), Gaussian(1));
  const auto inv = e.invert();
  EXPECT_EQ(inv.m, 0);
  EXPECT_TRUE(series_equal(inv.inverse * e, QJetSeries::constant(1, 0, 8), 8, 0));
  // partitions p(n)
  const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(inv.inverse.coefficient(n), Gaussian(p[n]));
}

TEST(Series, InvertGeometric) {
  const auto s = QJetSeries::constant(1, 0, 6) - mono(1, 1, 6);
  const auto inv = s.invert().inverse;
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(inv.coefficient(k), Gaussian(1));
  EXPECT_EQ(inv.cutoff(), 6);
}

TEST(Series, InvertFactorsU) {
  UJet u(4);
  u[1] = 1;
  const auto s = QJetSeries::monomial(0, u, 5) + QJetSeries::monomial(1, u, 5);
  const auto r = s.invert();
  EXPECT_EQ(r.m, 1);
  EXPECT_EQ(r.inverse.jet_order(), 3);
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(r.inverse.coefficient(k), Gaussian(k % 2 ? -1 : 1));
  UJet z(3);
  EXPECT_THROW(QJetSeries::monomial(0, z, 5).invert(), SeriesError);
}

TEST(Series, InvertShiftsCutoff) {
  const auto s = mono(make_rational(1, 24), 1, make_rational(49, 24)) * euler_product(2).shift_q(0);
  const auto r = s.invert();
  EXPECT_EQ(r.e, make_rational(1, 24));
  EXPECT_EQ(r.inverse.cutoff(), make_rational(49, 24) - make_rational(2, 24));
  EXPECT_TRUE(series_equal(r.inverse * s, QJetSeries::constant(1, 0, 2), 2, 0));
}

TEST(Series, SqrtUnit) {
  const auto one = QJetSeries::constant(1, 3, 5);
  EXPECT_TRUE(series_equal(one.sqrt_unit(), one, 5, 3));
  const auto sq = QJetSeries::constant(1, 0, 6) + mono(1, 2, 6) + mono(2, 1, 6);
  EXPECT_TRUE(series_equal(sq.sqrt_unit(), QJetSeries::constant(1, 0, 6) + mono(1, 1, 6), 6, 0));
  EXPECT_THROW((sq * Gaussian(2)).sqrt_unit(), SeriesError);
  std::mt19937_64 rng(7);
  auto r = random_series(rng, 3, 4).shift_q(make_rational(1, 4));
  r += QJetSeries::constant(1, 3, 4);
  const auto root = r.sqrt_unit();
  EXPECT_TRUE(series_equal(root * root, r, 4, 3));
}

TEST(Series, ExpLinear) {
  EXPECT_EQ(UJet::exp_linear(0, 5), UJet(5, Gaussian(1)));
  EXPECT_EQ(UJet::exp_linear(1, 6) * UJet::exp_linear(-1, 6), UJet(6, Gaussian(1)));
  const Rational a = make_rational(3, 7), b = make_rational(-5, 2);
  EXPECT_EQ(UJet::exp_linear(a + b, 8), UJet::exp_linear(a, 8) * UJet::exp_linear(b, 8));
  EXPECT_EQ(UJet::exp_linear(2, 3)[3], Gaussian(make_rational(8, 6)));
}

TEST(Series, Accumulator) {
  SeriesAccumulator acc(4, 3);
  acc.add(1, Rational(2), make_rational(1, 2));
  acc.add(1, Gaussian(0, 1), Rational(-1));
  acc.add(5, Rational(1), Rational(0));
  const auto s = acc.finish();
  const UJet expect = UJet::exp_linear(make_rational(1, 2), 4) * Gaussian(2) + UJet::exp_linear(-1, 4) * Gaussian::i();
  EXPECT_EQ(s.terms().at(1), expect);
  EXPECT_EQ(s.terms().size(), 1u);
}

TEST(Series, Rescale) {
  const auto eta = euler_product(3).shift_q(make_rational(1, 24));
  const auto r = eta.rescale_q(3);
  EXPECT_EQ(r.lead_exponent(), make_rational(3, 24));
  EXPECT_EQ(r.coefficient(make_rational(3, 24) + 3), Gaussian(-1));
  EXPECT_EQ(r.coefficient(make_rational(3, 24) + 6), Gaussian(-1));
  EXPECT_TRUE(series_equal(eta.rescale_q(1), eta, 3, 0));
  EXPECT_TRUE(series_equal(mono(1, 1, 5).rescale_q(2), mono(2, 1, 10), 10, 0));
  const auto t = r.truncated(3);
  EXPECT_TRUE(t.tail_dropped());
}

TEST(Series, RingAxiomsRandom) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(rng, 3, 4), b = random_series(rng, 3, 4), c = random_series(rng, 3, 4);
    EXPECT_TRUE(series_equal((a * b) * c, a * (b * c), 4, 3));
    EXPECT_TRUE(series_equal(a * (b + c), a * b + a * c, 4, 3));
    EXPECT_TRUE(series_equal(a * b, b * a, 4, 3));
    EXPECT_TRUE(series_equal(a - a, QJetSeries(3, 4), 4, 3));
  }
}

TEST(Series, InverseRandom) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_series(rng, 3, 5).shift_q(make_rational(1, 2)) + QJetSeries::constant(Gaussian(2, -1), 3, 5);
    const auto inv = a.invert();
    EXPECT_TRUE(series_equal(inv.inverse * a, QJetSeries::constant(1, 3, 5), 5, 3));
  }
}

TEST(Series, TruncationMonotonicity) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto hi_a = random_series(rng, 5, 6) + QJetSeries::constant(1, 5, 6);
    auto hi_b = random_series(rng, 5, 6);
    const auto lo_a = hi_a.truncated(3).with_jet_order(2), lo_b = hi_b.truncated(3).with_jet_order(2);
    EXPECT_TRUE(series_equal((hi_a * hi_b).truncated(3), lo_a * lo_b, 3, 2));
    EXPECT_TRUE(series_equal(hi_a.invert().inverse, lo_a.invert().inverse, 3, 2));
  }
}

TEST(Series, Phases) {
  EXPECT_EQ(root_of_unity(make_rational(1, 4)), Gaussian::i());
  EXPECT_EQ(root_of_unity(make_rational(-1, 2)), Gaussian(-1));
  EXPECT_THROW(root_of_unity(make_rational(1, 8)), NonGaussianPhase);
}

TEST(Series, CanonicalText) {
  const auto s = mono(make_rational(1, 2), Gaussian(1, -2), 2) + mono(0, 3, 2);
  EXPECT_EQ(s.str(), "0 u^0: 3\n1/2 u^0: 1-2i\nO(q^2)\n");
}
