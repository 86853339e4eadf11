#include "qhr/series/gaussian.hpp"

namespace qhr {

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  if (sgn(im) == 0 && sgn(o.im) == 0) {
    re *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

Gaussian Gaussian::inverse() const {
  const Rational n = norm();
  if (sgn(n) == 0) throw std::domain_error("Gaussian: division by zero");
  return {re / n, -im / n};
}

std::string Gaussian::str() const {
  if (sgn(im) == 0) return re.get_str();
  if (sgn(re) == 0) return im.get_str() + "i";
  return re.get_str() + (sgn(im) > 0 ? "+" : "") + im.get_str() + "i";
}

Gaussian root_of_unity(const Rational& frac) {
  const Rational four = 4 * frac;
  if (!is_integer(four)) throw NonGaussianPhase("phase exp(2 pi i " + frac.get_str() + ") is not in Q(i)");
  long k = four.get_num().get_si() % 4;
  if (k < 0) k += 4;
  switch (k) {
    case 0:
      return {Rational(1), Rational(0)};
    case 1:
      return {Rational(0), Rational(1)};
    case 2:
      return {Rational(-1), Rational(0)};
    default:
      return {Rational(0), Rational(-1)};
  }
}

}  // namespace qhr
