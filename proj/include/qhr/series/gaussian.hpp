#pragma once

#include "qhr/rational.hpp"

#include <complex>
#include <stdexcept>
#include <string>

namespace qhr {

/// Element of Q(i).
struct Gaussian {
  Rational re, im;

  Gaussian() = default;
  Gaussian(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Gaussian(int r) : re(r) {}                  // NOLINT(google-explicit-constructor)
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Gaussian i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  Gaussian conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator*=(const Rational& r) {
    re *= r;
    im *= r;
    return *this;
  }
  Gaussian operator-() const { return {-re, -im}; }
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator*(Gaussian a, const Rational& b) { return a *= b; }
  friend Gaussian operator*(const Rational& b, Gaussian a) { return a *= b; }
  Gaussian inverse() const;
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) { return a * b.inverse(); }
  bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }
  bool operator!=(const Gaussian& o) const { return !(*this == o); }

  template <class T>
  std::complex<T> to_complex() const {
    return {static_cast<T>(re.get_d()), static_cast<T>(im.get_d())};
  }
  std::string str() const;
};

class NonGaussianPhase : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// exp(2 pi i * frac); throws NonGaussianPhase unless 4*frac is an integer.
Gaussian root_of_unity(const Rational& frac);

}  // namespace qhr
