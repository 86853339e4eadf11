#include "qhr/liealg/slice.hpp"

#include <algorithm>

namespace qhr::liealg {

std::string to_string(SliceKind kind) {
  switch (kind) {
    case SliceKind::Minimal:
      return "minimal";
    case SliceKind::Principal:
      return "principal";
    case SliceKind::Dynkin:
      return "dynkin";
  }
  return "?";
}

int NilpotentSlice::dim_graded(const Rational& j) const {
  const auto it = graded_roots.find(j);
  const int roots = it == graded_roots.end() ? 0 : static_cast<int>(it->second.size());
  return j == 0 ? roots + rank : roots;
}

int NilpotentSlice::dim_positive() const {
  int d = 0;
  for (const auto& [j, idx] : graded_roots)
    if (j > 0) d += static_cast<int>(idx.size());
  return d;
}

std::vector<Rational> NilpotentSlice::grades() const {
  std::vector<Rational> g;
  for (const auto& [j, idx] : graded_roots) g.push_back(j);
  if (!graded_roots.count(0)) {
    g.push_back(0);
    std::sort(g.begin(), g.end());
  }
  return g;
}

namespace {

void grade(const RootSystem& rs, NilpotentSlice& s) {
  s.rank = rs.rank();
  s.graded_roots.clear();
  s.delta0_positive.clear();
  s.delta_half.clear();
  const auto& roots = rs.roots();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Rational ax = rs.form(roots[i], s.x);
    if (!is_half_integer(ax)) throw LieAlgebraError("grading element gives alpha(x) outside Z/2");
    s.graded_roots[ax].push_back(static_cast<int>(i));
    if (ax == 0 && i < rs.num_positive()) s.delta0_positive.push_back(static_cast<int>(i));
    if (ax == make_rational(1, 2)) s.delta_half.push_back(static_cast<int>(i));
  }
  s.theta_x = rs.form(rs.highest_root(), s.x);
  s.labels.assign(rs.rank(), 0);
  for (int i = 0; i < rs.rank(); ++i) s.labels[i] = static_cast<int>(Rational(2 * rs.form(rs.simple_root(i), s.x)).get_num().get_si());
}

}  // namespace

NilpotentSlice minimal_slice(const RootSystem& rs) {
  NilpotentSlice s;
  s.kind = SliceKind::Minimal;
  s.x = make_rational(1, 2) * rs.highest_root();
  grade(rs, s);
  // h^f = theta-perp
  RVec row(rs.rank());
  for (int j = 0; j < rs.rank(); ++j) row[j] = rs.form(rs.highest_root(), rs.simple_root(j));
  s.hf_basis = nullspace(RMat{row});
  s.beta = rs.highest_root();
  return s;
}

NilpotentSlice principal_slice(const RootSystem& rs) {
  NilpotentSlice s;
  s.kind = SliceKind::Principal;
  s.x = rs.rho_vee();
  grade(rs, s);
  s.beta = rs.highest_root();
  return s;
}

NilpotentSlice dynkin_slice(const RootSystem& rs, const std::vector<int>& labels) {
  if (static_cast<int>(labels.size()) != rs.rank())
    throw LieAlgebraError("expected " + std::to_string(rs.rank()) + " Dynkin labels");
  for (int l : labels)
    if (l < 0 || l > 2) throw LieAlgebraError("Dynkin labels must lie in {0,1,2}");
  if (std::all_of(labels.begin(), labels.end(), [](int l) { return l == 2; })) return principal_slice(rs);
  NilpotentSlice m = minimal_slice(rs);
  if (m.labels == labels) return m;

  NilpotentSlice s;
  s.kind = SliceKind::Dynkin;
  RVec half(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) half[i] = make_rational(labels[i], 2);
  s.x = mat_vec(inverse(rs.gram()), half);
  grade(rs, s);
  s.hf_available = false;
  const auto& pos = rs.positive_roots();
  // positives are sorted by height, then lexicographically
  for (const auto& b : pos) {
    const Rational bx = rs.form(b, s.x);
    if (bx > 0 && is_integer(bx)) {
      s.beta = b;
      return s;
    }
  }
  throw LieAlgebraError("no positive root beta with beta(x) a positive integer for these labels");
}

bool vanishes_on_hf(const RootSystem& rs, const NilpotentSlice& slice, const RVec& alpha) {
  for (const auto& h : slice.hf_basis)
    if (rs.form(alpha, h) != 0) return false;
  return true;
}

RVec generic_direction(const RootSystem& rs, const NilpotentSlice& slice, int seed) {
  if (!slice.hf_available) throw LieAlgebraError("h^f is unavailable for this slice; only z = 0 is supported");
  if (slice.hf_basis.empty()) return zeros(rs.rank());
  // coefficients drawn from 1, 3, 7, 13, ... shifted by seed, rescaled on failure
  for (int attempt = 0; attempt < 64; ++attempt) {
    RVec z = zeros(rs.rank());
    for (std::size_t i = 0; i < slice.hf_basis.size(); ++i) {
      const long c = 1 + static_cast<long>(i * (i + 1)) * (2 + seed + attempt) + seed;
      z = z + make_rational(c, 1 + static_cast<long>(i) + attempt) * slice.hf_basis[i];
    }
    bool ok = true;
    for (const auto& a : rs.positive_roots())
      if (!vanishes_on_hf(rs, slice, a) && rs.form(a, z) == 0) ok = false;
    if (ok) return z;
  }
  throw LieAlgebraError("could not find a generic direction in h^f");
}

int deligne_b(const RootSystem& rs) {
  const char t = rs.type().series;
  if (t == 'D' && rs.rank() >= 4) return 2;
  if (t == 'E') return rs.dual_coxeter_number() / 6 + 1;
  throw LieAlgebraError("alpha^(j) is defined only for D_n (n>=4) and E_6, E_7, E_8, not " + rs.name());
}

RVec alpha_j(const RootSystem& rs, int j) {
  const int b = deligne_b(rs);
  if (j < 1 || j > b)
    throw LieAlgebraError("alpha^(j) requires 1 <= j <= b = " + std::to_string(b) + ", got j = " +
                          std::to_string(j));
  // Every positive root is theta minus a sum of simple roots, so the candidates
  // are exactly the positive roots of height ht(theta) - (j-1).
  const Rational target = rs.height(rs.highest_root()) - (j - 1);
  std::vector<RVec> found;
  for (const auto& a : rs.positive_roots())
    if (rs.height(a) == target) found.push_back(a);
  if (found.size() != 1) throw LieAlgebraError("alpha^(j) is not unique for " + rs.name());
  return found.front();
}

}  // namespace qhr::liealg
