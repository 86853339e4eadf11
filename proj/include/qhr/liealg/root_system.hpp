#pragma once

// Simple Lie algebra root data in simple-root coordinates.
//
// Every vector of the Cartan subalgebra (identified with its dual through the
// invariant form) is stored by its coordinates in the basis of simple roots.
// The invariant form is the Gram matrix of the simple roots, normalized so
// that long roots have squared length 2.

#include "qhr/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhr::liealg {

class LieAlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CartanType {
  char series = 'A';  // one of A..G
  int rank = 1;

  std::string name() const { return std::string(1, series) + std::to_string(rank); }
  bool simply_laced() const { return series == 'A' || series == 'D' || series == 'E'; }
  /// Parses names like "D4", "e6", "A1".
  static CartanType parse(const std::string& text);
};

class RootSystem {
 public:
  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  std::string name() const { return type_.name(); }

  const RMat& gram() const { return gram_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  /// All roots; the first |positive_roots()| entries are the positive ones.
  const std::vector<RVec>& roots() const { return roots_; }
  const std::vector<RVec>& positive_roots() const { return positive_; }
  std::size_t num_positive() const { return positive_.size(); }

  RVec simple_root(int i) const;
  RVec simple_coroot(int i) const;
  const RVec& fundamental_weight(int i) const { return fundamental_weights_[i]; }
  const std::vector<RVec>& fundamental_weights() const { return fundamental_weights_; }

  const RVec& highest_root() const { return theta_; }
  const RVec& rho() const { return rho_; }
  const RVec& rho_vee() const { return rho_vee_; }

  int coxeter_number() const { return coxeter_; }
  int dual_coxeter_number() const { return dual_coxeter_; }
  int lacety() const { return lacety_; }
  int dimension() const { return static_cast<int>(roots_.size()) + rank(); }

  Rational form(const RVec& a, const RVec& b) const;
  Rational norm2(const RVec& a) const { return form(a, a); }
  RVec coroot(const RVec& alpha) const;
  /// Reflection r_alpha(v) = v - (v|alpha^vee) alpha.
  RVec reflect(const RVec& alpha, const RVec& v) const;
  /// Sum of simple-root coefficients.
  Rational height(const RVec& v) const;
  bool is_root(const RVec& v) const;
  /// Index into roots(), or -1.
  int root_index(const RVec& v) const;

  /// |W| from the exponents (dual partition of the root-height distribution).
  Integer weyl_order_from_heights() const;
  /// Exponents m_1 <= ... <= m_l.
  std::vector<int> exponents() const;

  /// Converts from fundamental-weight coordinates to simple-root coordinates.
  RVec from_weight_coords(const std::vector<long>& coeffs) const;
  /// Pairings (v|alpha_i^vee), i.e. the coordinates of v in the fundamental weight basis.
  RVec weight_coords(const RVec& v) const;

 private:
  friend RootSystem build_root_system(const CartanType& type);

  CartanType type_;
  RMat gram_;
  std::vector<std::vector<int>> cartan_;  // cartan_[i][j] = <alpha_j, alpha_i^vee>
  std::vector<RVec> roots_;
  std::vector<RVec> positive_;
  std::vector<RVec> fundamental_weights_;
  std::map<std::vector<int>, int> index_;
  RVec theta_, rho_, rho_vee_;
  int coxeter_ = 0, dual_coxeter_ = 0, lacety_ = 1;
};

/// Builds the root system of a simple Lie algebra. Throws LieAlgebraError for
/// unsupported series or rank.
RootSystem build_root_system(const CartanType& type);
inline RootSystem build_root_system(char series, int rank) { return build_root_system(CartanType{series, rank}); }

}  // namespace qhr::liealg
