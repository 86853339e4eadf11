#pragma once

// Truncated q-series with rational exponents and UJet coefficients.
//
// A series carries an absolute cutoff c: every coefficient at an exponent
// <= c is exact, everything above c is unknown. Products and inverses
// propagate the cutoff so that results never claim more than they know.

#include "qhr/series/ujet.hpp"

#include <map>
#include <optional>
#include <string>

namespace qhr {

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QJetSeries;

struct InverseResult;

class QJetSeries {
 public:
  QJetSeries() : QJetSeries(0, Rational(0)) {}
  QJetSeries(int jet_order, Rational cutoff) : jet_order_(jet_order), cutoff_(std::move(cutoff)) {}

  static QJetSeries constant(const Gaussian& c, int jet_order, const Rational& cutoff);
  static QJetSeries monomial(const Rational& exponent, const UJet& coeff, const Rational& cutoff);

  int jet_order() const { return jet_order_; }
  const Rational& cutoff() const { return cutoff_; }
  bool tail_dropped() const { return tail_dropped_; }
  const std::map<Rational, UJet>& terms() const { return terms_; }
  const std::optional<RVec>& direction() const { return direction_; }
  void set_direction(RVec z0) { direction_ = std::move(z0); }

  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> lead_exponent() const;
  /// Lowest u-power over all terms, or -1 for the zero series.
  int u_order() const;
  Gaussian coefficient(const Rational& exponent, int u_power = 0) const;
  /// Common denominator of all exponents.
  Integer exponent_denominator() const;

  /// Adds coeff q^exponent; ignored beyond the cutoff.
  void add_term(const Rational& exponent, const UJet& coeff);

  QJetSeries& operator+=(const QJetSeries& o);
  QJetSeries& operator-=(const QJetSeries& o);
  QJetSeries& operator*=(const Gaussian& s);
  friend QJetSeries operator+(QJetSeries a, const QJetSeries& b) { return a += b; }
  friend QJetSeries operator-(QJetSeries a, const QJetSeries& b) { return a -= b; }
  friend QJetSeries operator*(const QJetSeries& a, const QJetSeries& b);
  friend QJetSeries operator*(QJetSeries a, const Gaussian& s) { return a *= s; }
  QJetSeries operator-() const;

  /// Multiplies by q^e.
  QJetSeries shift_q(const Rational& e) const;
  /// Multiplies by a UJet (a function of u only).
  QJetSeries times_jet(const UJet& j) const;
  /// Lowers the cutoff to at most c, recording whether terms were discarded.
  QJetSeries truncated(const Rational& c) const;
  QJetSeries with_jet_order(int order) const;
  /// tau -> factor * tau.
  QJetSeries rescale_q(long factor) const;
  /// Divides every jet by u^m (jet order drops by m).
  QJetSeries divide_u(int m) const;
  /// u^0 part of each jet, as a series of jet order 0.
  QJetSeries u0_part() const;
  /// Raises to a nonnegative integer power.
  QJetSeries pow(long k) const;

  InverseResult invert() const;
  /// Square root of a series whose leading coefficient has constant term 1.
  QJetSeries sqrt_unit() const;

  /// Canonical rendering: one "exponent u^k: coefficient" line per nonzero
  /// coefficient, sorted by exponent then u-power, followed by the cutoff.
  std::string str() const;

 private:
  void prune();
  static QJetSeries from_dense(const std::vector<UJet>& dense, const Rational& start, const Integer& denom,
                               const Rational& cutoff, int jet_order);
  std::vector<UJet> to_dense(const Rational& start, const Integer& denom, long count) const;

  int jet_order_;
  Rational cutoff_;
  bool tail_dropped_ = false;
  std::map<Rational, UJet> terms_;
  std::optional<RVec> direction_;
};

struct InverseResult {
  /// 1 / (series / u^m), including the factor q^{-e}.
  QJetSeries inverse;
  Rational e;
  int m = 0;
};

/// True if a and b agree on all exponents <= up_to and u-powers <= jet order.
/// Throws if up_to exceeds either cutoff.
bool series_equal(const QJetSeries& a, const QJetSeries& b, const Rational& up_to, int jet_order);

/// Accumulates sums of coef * exp(c u) q^e through power sums, which is much
/// cheaper than building a jet per term.
class SeriesAccumulator {
 public:
  SeriesAccumulator(int jet_order, Rational cutoff) : jet_order_(jet_order), cutoff_(std::move(cutoff)) {}
  void add(const Rational& exponent, const Gaussian& coef, const Rational& c);
  void add(const Rational& exponent, const Rational& coef, const Rational& c);
  QJetSeries finish() const;

 private:
  int jet_order_;
  Rational cutoff_;
  std::map<Rational, std::vector<Gaussian>> sums_;
};

}  // namespace qhr
