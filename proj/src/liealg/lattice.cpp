#include "qhr/liealg/lattice.hpp"

#include <cmath>
#include <numeric>

namespace qhr::liealg {

std::vector<std::vector<double>> coroot_gram(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<std::vector<double>> g(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = rs.form(rs.simple_coroot(i), rs.simple_coroot(j)).get_d();
  return g;
}

void coroot_ball_numeric(const RootSystem& rs, const std::vector<double>& shift, double radius2,
                         const std::function<void(const std::vector<long>&)>& visit, std::size_t cap) {
  const int n = rs.rank();
  const auto g = coroot_gram(rs);
  // upper Cholesky factor: g = R^T R
  std::vector<std::vector<double>> r(n, std::vector<double>(n, 0.0));
  for (int j = 0; j < n; ++j) {
    double d = g[j][j];
    for (int k = 0; k < j; ++k) d -= r[k][j] * r[k][j];
    r[j][j] = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      double s = g[j][i];
      for (int k = 0; k < j; ++k) s -= r[k][j] * r[k][i];
      r[j][i] = s / r[j][j];
    }
  }
  std::vector<long> m(n);
  std::size_t count = 0;
  std::function<void(int, double)> rec = [&](int i, double remaining) {
    if (i < 0) {
      if (++count > cap) throw LatticeCapExceeded("lattice enumeration exceeded cap " + std::to_string(cap));
      visit(m);
      return;
    }
    double t = r[i][i] * shift[i];
    for (int j = i + 1; j < n; ++j) t += r[i][j] * (m[j] + shift[j]);
    const double mid = -t / r[i][i];
    const double half = std::sqrt(std::max(remaining, 0.0)) / r[i][i] + 1e-9;
    const long lo = static_cast<long>(std::ceil(mid - half));
    const long hi = static_cast<long>(std::floor(mid + half));
    for (long v = lo; v <= hi; ++v) {
      m[i] = v;
      const double e = r[i][i] * v + t;
      rec(i - 1, remaining - e * e);
    }
  };
  rec(n - 1, radius2 * (1 + 1e-12) + 1e-12);
}

std::vector<RVec> coroot_ball(const RootSystem& rs, const RVec& center, const Rational& n, const Rational& radius2,
                              std::size_t cap) {
  const int l = rs.rank();
  // center / n in coroot coordinates: alpha_i^vee = (2/|alpha_i|^2) alpha_i
  std::vector<double> shift(l);
  std::vector<Rational> to_coroot(l);
  for (int i = 0; i < l; ++i) {
    to_coroot[i] = rs.norm2(rs.simple_root(i)) / 2;
    shift[i] = Rational(center[i] * to_coroot[i] / n).get_d();
  }
  const double r2 = Rational(radius2 / (n * n)).get_d();
  std::vector<RVec> out;
  coroot_ball_numeric(
      rs, shift, r2,
      [&](const std::vector<long>& m) {
        RVec gamma(l);
        for (int i = 0; i < l; ++i) gamma[i] = Rational(m[i]) / to_coroot[i];
        if (rs.norm2(center + n * gamma) <= radius2) out.push_back(std::move(gamma));
      },
      cap);
  return out;
}

std::vector<std::vector<long>> hermite_normal_form(std::vector<std::vector<long>> rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows[0].size() : 0;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < nc && pivot_row < nr; ++c) {
    // gcd-reduce column c below pivot_row
    for (;;) {
      std::size_t best = nr;
      for (std::size_t i = pivot_row; i < nr; ++i)
        if (rows[i][c] != 0 && (best == nr || std::labs(rows[i][c]) < std::labs(rows[best][c]))) best = i;
      if (best == nr) break;
      std::swap(rows[pivot_row], rows[best]);
      bool done = true;
      for (std::size_t i = pivot_row + 1; i < nr; ++i) {
        if (rows[i][c] == 0) continue;
        const long f = rows[i][c] / rows[pivot_row][c];
        for (std::size_t j = 0; j < nc; ++j) rows[i][j] -= f * rows[pivot_row][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[pivot_row][c] == 0) continue;
    if (rows[pivot_row][c] < 0)
      for (auto& v : rows[pivot_row]) v = -v;
    for (std::size_t i = 0; i < pivot_row; ++i) {
      long f = rows[i][c] / rows[pivot_row][c];
      if (rows[i][c] - f * rows[pivot_row][c] < 0) --f;
      for (std::size_t j = 0; j < nc; ++j) rows[i][j] -= f * rows[pivot_row][j];
    }
    ++pivot_row;
  }
  return rows;
}

Integer weight_coset_count(const RootSystem& rs, long n) {
  // |P/Q^vee| = det of the coroot Gram matrix in weight coordinates
  RMat g(rs.rank(), zeros(rs.rank()));
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j) g[i][j] = rs.form(rs.simple_coroot(i), rs.simple_coroot(j));
  Integer c = Rational(abs(determinant(g))).get_num();
  for (int i = 0; i < rs.rank(); ++i) c *= n;
  return c;
}

std::vector<RVec> weight_cosets(const RootSystem& rs, long n, std::size_t cap) {
  const int l = rs.rank();
  const Integer count = weight_coset_count(rs, n);
  if (count > Integer(static_cast<unsigned long>(cap)))
    throw LatticeCapExceeded("|P/nQ^vee| = " + count.get_str() + " exceeds cap " + std::to_string(cap));
  std::vector<std::vector<long>> rows(l, std::vector<long>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      rows[i][j] = n * rs.form(rs.simple_coroot(i), rs.simple_coroot(j)).get_num().get_si();
  const auto h = hermite_normal_form(rows);
  std::vector<long> diag(l);
  for (int i = 0; i < l; ++i) diag[i] = h[i][i];
  std::vector<RVec> reps;
  std::vector<long> c(l, 0);
  for (;;) {
    std::vector<long> coeffs(c.begin(), c.end());
    reps.push_back(rs.from_weight_coords(coeffs));
    int i = l - 1;
    while (i >= 0 && ++c[i] == diag[i]) c[i--] = 0;
    if (i < 0) break;
  }
  return reps;
}

}  // namespace qhr::liealg
