#pragma once

// Exact rational scalars and small dense vectors/matrices over them.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qhr {

using Rational = mpq_class;
using Integer = mpz_class;
using RVec = std::vector<Rational>;
using RMat = std::vector<RVec>;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r);
std::string to_string(const RVec& v);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
long gcd_long(long a, long b);

bool is_integer(const Rational& r);
bool is_half_integer(const Rational& r);  // r in (1/2)Z
Integer floor_of(const Rational& r);

RVec zeros(std::size_t n);
RVec operator+(const RVec& a, const RVec& b);
RVec operator-(const RVec& a, const RVec& b);
RVec operator-(const RVec& a);
RVec operator*(const Rational& s, const RVec& a);
bool is_zero(const RVec& v);

RMat identity_matrix(std::size_t n);
RMat mat_mul(const RMat& a, const RMat& b);
RVec mat_vec(const RMat& a, const RVec& v);
RMat transpose(const RMat& a);
/// Inverse of a square nonsingular matrix; throws std::domain_error when singular.
RMat inverse(const RMat& a);
Rational determinant(RMat a);
/// Basis of {v : a v = 0} for a (rows x cols) matrix.
std::vector<RVec> nullspace(const RMat& a);

/// Least common multiple of all denominators in a vector.
Integer common_denominator(const RVec& v);

}  // namespace qhr
