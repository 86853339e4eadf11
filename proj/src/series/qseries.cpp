#include "qhr/series/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace qhr {

namespace {

void check_direction(const std::optional<RVec>& a, const std::optional<RVec>& b) {
  if (a && b && *a != *b) throw SeriesError("series built against different directions z0");
}

}  // namespace

QJetSeries QJetSeries::constant(const Gaussian& c, int jet_order, const Rational& cutoff) {
  QJetSeries s(jet_order, cutoff);
  s.add_term(Rational(0), UJet(jet_order, c));
  return s;
}

QJetSeries QJetSeries::monomial(const Rational& exponent, const UJet& coeff, const Rational& cutoff) {
  QJetSeries s(coeff.order(), cutoff);
  s.add_term(exponent, coeff);
  return s;
}

std::optional<Rational> QJetSeries::lead_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

int QJetSeries::u_order() const {
  int m = -1;
  for (const auto& [e, j] : terms_) {
    const int v = j.valuation();
    if (v >= 0 && (m < 0 || v < m)) m = v;
  }
  return m;
}

Gaussian QJetSeries::coefficient(const Rational& exponent, int u_power) const {
  if (exponent > cutoff_) throw SeriesError("coefficient requested beyond cutoff " + cutoff_.get_str());
  const auto it = terms_.find(exponent);
  if (it == terms_.end() || u_power > it->second.order()) return Gaussian();
  return it->second[u_power];
}

Integer QJetSeries::exponent_denominator() const {
  Integer d = 1;
  for (const auto& [e, j] : terms_) d = lcm(d, e.get_den());
  return d;
}

void QJetSeries::add_term(const Rational& exponent, const UJet& coeff) {
  if (exponent > cutoff_) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    UJet j = coeff.truncated(jet_order_);
    if (!j.is_zero()) terms_.emplace(exponent, std::move(j));
    return;
  }
  it->second += coeff.truncated(jet_order_);
  if (it->second.is_zero()) terms_.erase(it);
}

void QJetSeries::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first > cutoff_ || it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

QJetSeries& QJetSeries::operator+=(const QJetSeries& o) {
  check_direction(direction_, o.direction_);
  if (!direction_) direction_ = o.direction_;
  if (o.jet_order_ < jet_order_) *this = with_jet_order(o.jet_order_);
  cutoff_ = std::min(cutoff_, o.cutoff_);
  tail_dropped_ = tail_dropped_ || o.tail_dropped_;
  for (const auto& [e, j] : o.terms_) add_term(e, j);
  prune();
  return *this;
}

QJetSeries& QJetSeries::operator-=(const QJetSeries& o) { return *this += -o; }

QJetSeries& QJetSeries::operator*=(const Gaussian& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, j] : terms_) j *= s;
  return *this;
}

QJetSeries QJetSeries::operator-() const {
  QJetSeries r = *this;
  for (auto& [e, j] : r.terms_) j = -j;
  return r;
}

QJetSeries operator*(const QJetSeries& a, const QJetSeries& b) {
  check_direction(a.direction_, b.direction_);
  const Rational la = a.terms_.empty() ? a.cutoff_ : a.terms_.begin()->first;
  const Rational lb = b.terms_.empty() ? b.cutoff_ : b.terms_.begin()->first;
  QJetSeries r(std::min(a.jet_order_, b.jet_order_), std::min(a.cutoff_ + lb, b.cutoff_ + la));
  r.direction_ = a.direction_ ? a.direction_ : b.direction_;
  r.tail_dropped_ = a.tail_dropped_ || b.tail_dropped_;
  for (const auto& [ea, ja] : a.terms_) {
    if (ea + lb > r.cutoff_) break;
    for (const auto& [eb, jb] : b.terms_) {
      Rational e = ea + eb;
      if (e > r.cutoff_) break;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end())
        r.terms_.emplace(std::move(e), ja * jb);
      else
        it->second += ja * jb;
    }
  }
  r.prune();
  return r;
}

QJetSeries QJetSeries::shift_q(const Rational& e) const {
  QJetSeries r(jet_order_, cutoff_ + e);
  r.direction_ = direction_;
  r.tail_dropped_ = tail_dropped_;
  for (const auto& [x, j] : terms_) r.terms_.emplace(x + e, j);
  return r;
}

QJetSeries QJetSeries::times_jet(const UJet& jet) const {
  QJetSeries r(std::min(jet_order_, jet.order()), cutoff_);
  r.direction_ = direction_;
  r.tail_dropped_ = tail_dropped_;
  for (const auto& [e, j] : terms_) r.add_term(e, j * jet);
  return r;
}

QJetSeries QJetSeries::truncated(const Rational& c) const {
  if (c >= cutoff_) return *this;
  QJetSeries r = *this;
  r.cutoff_ = c;
  const std::size_t before = r.terms_.size();
  r.prune();
  if (r.terms_.size() != before) r.tail_dropped_ = true;
  return r;
}

QJetSeries QJetSeries::with_jet_order(int order) const {
  QJetSeries r(std::min(order, jet_order_), cutoff_);
  r.direction_ = direction_;
  r.tail_dropped_ = tail_dropped_;
  for (const auto& [e, j] : terms_) r.add_term(e, j);
  return r;
}

QJetSeries QJetSeries::rescale_q(long factor) const {
  if (factor < 1) throw SeriesError("rescale_q needs a positive integer factor");
  QJetSeries r(jet_order_, cutoff_ * factor);
  r.direction_ = direction_;
  r.tail_dropped_ = tail_dropped_;
  for (const auto& [e, j] : terms_) r.terms_.emplace(e * factor, j);
  return r;
}

QJetSeries QJetSeries::divide_u(int m) const {
  if (m > jet_order_) throw SeriesError("divide_u: u-order " + std::to_string(m) + " exceeds jet order");
  QJetSeries r(jet_order_ - m, cutoff_);
  r.direction_ = direction_;
  r.tail_dropped_ = tail_dropped_;
  for (const auto& [e, j] : terms_) {
    try {
      r.add_term(e, j.divide_u(m));
    } catch (const std::invalid_argument&) {
      throw SeriesError("divide_u: coefficient of q^" + e.get_str() + " is not divisible by u^" + std::to_string(m));
    }
  }
  return r;
}

QJetSeries QJetSeries::u0_part() const { return with_jet_order(0); }

QJetSeries QJetSeries::pow(long k) const {
  if (k < 0) throw SeriesError("pow: negative exponent");
  if (k == 0) {
    QJetSeries one = constant(Gaussian(1), jet_order_, cutoff_ - (terms_.empty() ? cutoff_ : terms_.begin()->first));
    one.direction_ = direction_;
    return one;
  }
  std::optional<QJetSeries> result;
  QJetSeries base = *this;
  while (k > 0) {
    if (k & 1) result = result ? *result * base : base;
    k >>= 1;
    if (k) base = base * base;
  }
  return *result;
}

std::vector<UJet> QJetSeries::to_dense(const Rational& start, const Integer& denom, long count) const {
  std::vector<UJet> dense(count, UJet(jet_order_));
  for (const auto& [e, j] : terms_) {
    const Rational pos = (e - start) * denom;
    if (!is_integer(pos)) throw SeriesError("exponent off the common grid");
    const long k = pos.get_num().get_si();
    if (k < count) dense[k] = j;
  }
  return dense;
}

QJetSeries QJetSeries::from_dense(const std::vector<UJet>& dense, const Rational& start, const Integer& denom,
                                  const Rational& cutoff, int jet_order) {
  QJetSeries r(jet_order, cutoff);
  for (std::size_t k = 0; k < dense.size(); ++k)
    if (!dense[k].is_zero()) r.add_term(start + Rational(static_cast<long>(k)) / Rational(denom), dense[k]);
  return r;
}

namespace {

Integer grid_denominator(const std::map<Rational, UJet>& terms, const Rational& start) {
  Integer d = 1;
  for (const auto& [e, j] : terms) d = lcm(d, Rational(e - start).get_den());
  return d;
}

}  // namespace

InverseResult QJetSeries::invert() const {
  if (terms_.empty()) throw SeriesError("invert: series is zero to its cutoff");
  const Rational e0 = terms_.begin()->first;
  const int m = terms_.begin()->second.valuation();
  if (m < 0) throw SeriesError("invert: leading jet vanishes to order U; increase the jet order");
  const QJetSeries unit = divide_u(m);
  const Integer denom = grid_denominator(terms_, e0);
  const Rational span = cutoff_ - e0;
  const long count = floor_of(span * denom).get_si() + 1;
  const auto a = unit.to_dense(e0, denom, count);
  std::vector<UJet> b(count, UJet(unit.jet_order_));
  const UJet inv0 = a[0].inverse();
  b[0] = inv0;
  for (long k = 1; k < count; ++k) {
    UJet s(unit.jet_order_);
    for (long j = 1; j <= k; ++j)
      if (!a[j].is_zero()) s += a[j] * b[k - j];
    b[k] = -(s * inv0);
  }
  InverseResult res;
  res.inverse = from_dense(b, -e0, denom, cutoff_ - 2 * e0, unit.jet_order_);
  res.inverse.direction_ = direction_;
  res.inverse.tail_dropped_ = tail_dropped_;
  res.e = e0;
  res.m = m;
  return res;
}

QJetSeries QJetSeries::sqrt_unit() const {
  if (terms_.empty()) throw SeriesError("sqrt_unit: zero series");
  const Rational e0 = terms_.begin()->first;
  const UJet& a0 = terms_.begin()->second;
  if (a0[0] != Gaussian(1)) throw SeriesError("sqrt_unit: leading constant term is not 1");
  const Integer denom = grid_denominator(terms_, e0);
  const long count = floor_of((cutoff_ - e0) * denom).get_si() + 1;
  const auto a = to_dense(e0, denom, count);
  std::vector<UJet> b(count, UJet(jet_order_));
  b[0] = a0.sqrt_unit();
  const UJet inv2b0 = (b[0] * Gaussian(2)).inverse();
  for (long k = 1; k < count; ++k) {
    UJet s = a[k];
    for (long j = 1; j < k; ++j)
      if (!b[j].is_zero() && !b[k - j].is_zero()) s -= b[j] * b[k - j];
    b[k] = s * inv2b0;
  }
  const Rational start = e0 / 2;
  QJetSeries r = from_dense(b, start, denom, start + (cutoff_ - e0), jet_order_);
  r.direction_ = direction_;
  r.tail_dropped_ = tail_dropped_;
  return r;
}

std::string QJetSeries::str() const {
  std::ostringstream os;
  for (const auto& [e, j] : terms_)
    for (int k = 0; k <= j.order(); ++k)
      if (!j[k].is_zero()) os << e.get_str() << " u^" << k << ": " << j[k].str() << "\n";
  os << "O(q^" << cutoff_.get_str() << ")\n";
  return os.str();
}

bool series_equal(const QJetSeries& a, const QJetSeries& b, const Rational& up_to, int jet_order) {
  if (up_to > a.cutoff() || up_to > b.cutoff())
    throw SeriesError("series_equal: comparison window exceeds a cutoff");
  if (jet_order > a.jet_order() || jet_order > b.jet_order())
    throw SeriesError("series_equal: comparison jet order exceeds a series' jet order");
  auto visible = [&](const QJetSeries& s) {
    std::map<Rational, UJet> out;
    for (const auto& [e, j] : s.terms()) {
      if (e > up_to) break;
      UJet t = j.truncated(jet_order);
      if (!t.is_zero()) out.emplace(e, std::move(t));
    }
    return out;
  };
  return visible(a) == visible(b);
}

void SeriesAccumulator::add(const Rational& exponent, const Gaussian& coef, const Rational& c) {
  if (exponent > cutoff_) return;
  auto& s = sums_[exponent];
  if (s.empty()) s.resize(jet_order_ + 1);
  Gaussian t = coef;
  for (int k = 0; k <= jet_order_; ++k) {
    s[k] += t;
    if (k < jet_order_) t *= c;
  }
}

void SeriesAccumulator::add(const Rational& exponent, const Rational& coef, const Rational& c) {
  if (exponent > cutoff_) return;
  auto& s = sums_[exponent];
  if (s.empty()) s.resize(jet_order_ + 1);
  Rational t = coef;
  for (int k = 0; k <= jet_order_; ++k) {
    s[k].re += t;
    if (k < jet_order_) t *= c;
  }
}

QJetSeries SeriesAccumulator::finish() const {
  QJetSeries r(jet_order_, cutoff_);
  std::vector<Rational> inv_fact(jet_order_ + 1);
  inv_fact[0] = 1;
  for (int k = 1; k <= jet_order_; ++k) inv_fact[k] = inv_fact[k - 1] / k;
  for (const auto& [e, s] : sums_) {
    UJet j(jet_order_);
    for (int k = 0; k <= jet_order_; ++k) j[k] = s[k] * inv_fact[k];
    r.add_term(e, j);
  }
  return r;
}

}  // namespace qhr
