#pragma once

// Finite and infinite products of linear factors (1 - q^e exp(c u)), and
// helpers for quotients that cancel a common power of u.

#include "qhr/series/qseries.hpp"

#include <functional>
#include <vector>

namespace qhr::characters {

/// (1 - q^e exp(c u))^count.
struct LinearFactor {
  Rational e;
  Rational c;
  long count = 1;
};

/// Product of the factors, exact to q-order N. Factors with e < 0 are rewritten
/// as -q^e exp(cu) (1 - q^{-e} exp(-cu)); a factor (1 - 1) makes the product zero.
QJetSeries factor_product(const std::vector<LinearFactor>& factors, const Rational& N, int U);

/// prod_{n>=1} (1 - q^{s n})^count, i.e. (q^{-s/24} eta(s tau))^count.
QJetSeries euler_power(const Rational& s, long count, const Rational& N);

/// num / den after dividing both by u^m, m = ord_u(den). Throws if num has lower u-order.
struct UQuotient {
  QJetSeries value;
  int m = 0;
};
UQuotient cancel_u_and_divide(const QJetSeries& num, const QJetSeries& den);

/// Calls build(c) with growing internal cutoffs until the result is exact to N,
/// then truncates to N.
QJetSeries compute_to(const std::function<QJetSeries(const Rational&)>& build, const Rational& N);

}  // namespace qhr::characters
