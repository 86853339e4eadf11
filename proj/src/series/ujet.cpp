#include "qhr/series/ujet.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhr {

bool UJet::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

int UJet::valuation() const {
  for (int k = 0; k <= order(); ++k)
    if (!c_[k].is_zero()) return k;
  return -1;
}

UJet& UJet::operator+=(const UJet& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (int k = 0; k <= order(); ++k) c_[k] += o.c_[k];
  return *this;
}

UJet& UJet::operator-=(const UJet& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (int k = 0; k <= order(); ++k) c_[k] -= o.c_[k];
  return *this;
}

UJet& UJet::operator*=(const Gaussian& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

UJet operator*(const UJet& a, const UJet& b) {
  const int n = std::min(a.order(), b.order());
  UJet r(n);
  for (int i = 0; i <= n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

UJet UJet::operator-() const {
  UJet r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

bool UJet::operator==(const UJet& o) const {
  const int n = std::max(order(), o.order());
  for (int k = 0; k <= n; ++k) {
    const bool za = k > order() || c_[k].is_zero();
    const bool zb = k > o.order() || o.c_[k].is_zero();
    if (za && zb) continue;
    if (za != zb || c_[k] != o.c_[k]) return false;
  }
  return true;
}

UJet UJet::truncated(int n) const {
  UJet r(n);
  for (int k = 0; k <= std::min(n, order()); ++k) r.c_[k] = c_[k];
  return r;
}

UJet UJet::divide_u(int m) const {
  if (m > order()) throw std::invalid_argument("divide_u: u-power exceeds jet order");
  for (int k = 0; k < m; ++k)
    if (!c_[k].is_zero()) throw std::invalid_argument("divide_u: jet is not divisible by u^" + std::to_string(m));
  UJet r(order() - m);
  for (int k = m; k <= order(); ++k) r.c_[k - m] = c_[k];
  return r;
}

UJet UJet::inverse() const {
  if (c_[0].is_zero()) throw std::domain_error("UJet::inverse: zero constant term");
  UJet r(order());
  const Gaussian inv0 = c_[0].inverse();
  r.c_[0] = inv0;
  for (int k = 1; k <= order(); ++k) {
    Gaussian s;
    for (int j = 1; j <= k; ++j)
      if (!c_[j].is_zero()) s += c_[j] * r.c_[k - j];
    r.c_[k] = -(s * inv0);
  }
  return r;
}

UJet UJet::sqrt_unit() const {
  if (c_[0] != Gaussian(1)) throw std::domain_error("UJet::sqrt_unit: constant term is not 1");
  UJet r(order());
  r.c_[0] = Gaussian(1);
  for (int k = 1; k <= order(); ++k) {
    Gaussian s = c_[k];
    for (int j = 1; j < k; ++j) s -= r.c_[j] * r.c_[k - j];
    r.c_[k] = s * make_rational(1, 2);
  }
  return r;
}

UJet UJet::exp_linear(const Rational& c, int order) {
  UJet r(order);
  Rational t = 1;
  for (int k = 0; k <= order; ++k) {
    r.c_[k] = t;
    t = t * c / (k + 1);
  }
  return r;
}

}  // namespace qhr
