#pragma once

#include "qhr/liealg/root_system.hpp"

#include <map>
#include <optional>
#include <vector>

namespace qhr::liealg {

enum class SliceKind { Minimal, Principal, Dynkin };

std::string to_string(SliceKind kind);

/// Grading of g by ad x for a nilpotent f with Dynkin characteristic 2x.
struct NilpotentSlice {
  SliceKind kind = SliceKind::Minimal;
  std::vector<int> labels;  // 2 alpha_i(x)
  RVec x;
  Rational theta_x;
  /// Indices into RootSystem::roots() grouped by alpha(x).
  std::map<Rational, std::vector<int>> graded_roots;
  /// Positive roots with alpha(x) = 0.
  std::vector<int> delta0_positive;
  /// Roots with alpha(x) = 1/2.
  std::vector<int> delta_half;
  int rank = 0;
  bool hf_available = true;
  std::vector<RVec> hf_basis;
  RVec beta;

  int dim_graded(const Rational& j) const;
  int dim_g0() const { return dim_graded(0); }
  int dim_g_half() const { return dim_graded(make_rational(1, 2)); }
  /// dim g^f = dim g_0 + dim g_{1/2}.
  int dim_gf() const { return dim_g0() + dim_g_half(); }
  /// Sum of dim g_j over j > 0.
  int dim_positive() const;
  std::vector<Rational> grades() const;
};

NilpotentSlice minimal_slice(const RootSystem& rs);
NilpotentSlice principal_slice(const RootSystem& rs);
/// Slice from Dynkin labels 2 alpha_i(x) in {0,1,2}. Delegates to the principal
/// or minimal constructor when the labels match; otherwise h^f is unavailable.
NilpotentSlice dynkin_slice(const RootSystem& rs, const std::vector<int>& labels);

/// Deterministic direction z0 in h^f with (alpha|z0) != 0 for every root alpha
/// not vanishing on h^f. Different seeds give different directions.
RVec generic_direction(const RootSystem& rs, const NilpotentSlice& slice, int seed = 0);

/// True if alpha restricted to h^f is identically zero.
bool vanishes_on_hf(const RootSystem& rs, const NilpotentSlice& slice, const RVec& alpha);

/// alpha^(j) = theta minus j-1 simple roots; defined for D_n and E types, 1 <= j <= b.
RVec alpha_j(const RootSystem& rs, int j);
/// b = 2 for D_n and h^vee/6 + 1 for E types. Throws for other types.
int deligne_b(const RootSystem& rs);

}  // namespace qhr::liealg
