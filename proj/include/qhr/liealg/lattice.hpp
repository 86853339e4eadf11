#pragma once

#include "qhr/liealg/root_system.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace qhr::liealg {

class LatticeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultLatticeCap = 5'000'000;

/// gamma in Q^vee (returned in simple-root coordinates) with |center + n gamma|^2 <= radius2, exactly.
std::vector<RVec> coroot_ball(const RootSystem& rs, const RVec& center, const Rational& n, const Rational& radius2,
                              std::size_t cap = kDefaultLatticeCap);

/// Floating-point variant: visits integer coroot coordinates m with
/// |shift + sum m_i alpha_i^vee|^2 <= radius2 where shift is given in coroot coordinates.
void coroot_ball_numeric(const RootSystem& rs, const std::vector<double>& shift, double radius2,
                         const std::function<void(const std::vector<long>&)>& visit,
                         std::size_t cap = kDefaultLatticeCap);

/// Gram matrix (alpha_i^vee | alpha_j^vee) as doubles.
std::vector<std::vector<double>> coroot_gram(const RootSystem& rs);

/// Representatives of P / n Q^vee in simple-root coordinates, deterministic order.
std::vector<RVec> weight_cosets(const RootSystem& rs, long n, std::size_t cap = kDefaultLatticeCap);

/// Index |P / n Q^vee| = n^l |P / Q^vee|.
Integer weight_coset_count(const RootSystem& rs, long n);

/// Upper-triangular Hermite normal form of an integer row basis.
std::vector<std::vector<long>> hermite_normal_form(std::vector<std::vector<long>> rows);

}  // namespace qhr::liealg
