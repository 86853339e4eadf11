#pragma once

#include "qhr/liealg/root_system.hpp"

#include <cstdint>
#include <vector>

namespace qhr::liealg {

/// Weyl group element as an integer matrix acting on simple-root coordinates.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(int rank, std::vector<int> matrix, std::vector<int> inverse, int sign)
      : rank_(rank), matrix_(std::move(matrix)), inverse_(std::move(inverse)), sign_(sign) {}

  int rank() const { return rank_; }
  /// epsilon(w) = det(w).
  int sign() const { return sign_; }
  RVec apply(const RVec& v) const { return apply_with(matrix_, v); }
  RVec apply_inverse(const RVec& v) const { return apply_with(inverse_, v); }
  RMat matrix() const;
  WeylElement inverse() const { return WeylElement(rank_, inverse_, matrix_, sign_); }
  WeylElement compose(const WeylElement& other) const;  // this * other
  int entry(int i, int j) const { return matrix_[i * rank_ + j]; }
  bool operator==(const WeylElement& o) const { return matrix_ == o.matrix_; }

 private:
  RVec apply_with(const std::vector<int>& m, const RVec& v) const;

  int rank_ = 0;
  std::vector<int> matrix_;
  std::vector<int> inverse_;
  int sign_ = 1;
};

class WeylCapExceeded : public std::runtime_error {
 public:
  WeylCapExceeded(const std::string& what, Integer order) : std::runtime_error(what), order_(std::move(order)) {}
  const Integer& order() const { return order_; }

 private:
  Integer order_;
};

constexpr std::uint64_t kDefaultWeylCap = 10'000'000;

/// Enumerates W by closure from the simple reflections. Throws WeylCapExceeded
/// when the order predicted by the exponents exceeds cap.
std::vector<WeylElement> weyl_group(const RootSystem& rs, std::uint64_t cap = kDefaultWeylCap);

WeylElement simple_reflection(const RootSystem& rs, int i);
WeylElement identity_element(const RootSystem& rs);
/// The reflection r_alpha for an arbitrary root alpha.
WeylElement root_reflection(const RootSystem& rs, const RVec& alpha);

}  // namespace qhr::liealg
