#pragma once

#include "qhr/series/gaussian.hpp"

#include <vector>

namespace qhr {

/// Truncated polynomial c_0 + c_1 u + ... + c_U u^U over Q(i).
class UJet {
 public:
  UJet() : c_(1) {}
  explicit UJet(int order) : c_(order + 1) {}
  UJet(int order, Gaussian constant) : c_(order + 1) { c_[0] = std::move(constant); }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Gaussian& operator[](int k) const { return c_[k]; }
  Gaussian& operator[](int k) { return c_[k]; }
  const std::vector<Gaussian>& coeffs() const { return c_; }

  bool is_zero() const;
  /// Lowest k with c_k != 0, or -1 when the jet vanishes.
  int valuation() const;

  UJet& operator+=(const UJet& o);
  UJet& operator-=(const UJet& o);
  UJet& operator*=(const Gaussian& s);
  friend UJet operator+(UJet a, const UJet& b) { return a += b; }
  friend UJet operator-(UJet a, const UJet& b) { return a -= b; }
  friend UJet operator*(const UJet& a, const UJet& b);
  friend UJet operator*(UJet a, const Gaussian& s) { return a *= s; }
  UJet operator-() const;
  bool operator==(const UJet& o) const;

  /// Keeps c_0..c_order.
  UJet truncated(int order) const;
  /// Divides by u^m; requires c_0..c_{m-1} = 0. The result has order U - m.
  UJet divide_u(int m) const;
  UJet inverse() const;
  /// Square root with constant term 1; requires c_0 = 1.
  UJet sqrt_unit() const;

  /// exp(c u) truncated at order U.
  static UJet exp_linear(const Rational& c, int order);

 private:
  std::vector<Gaussian> c_;
};

}  // namespace qhr
