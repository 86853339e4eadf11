#include "qhr/modular/numeric.hpp"

#include "qhr/liealg/affine.hpp"
#include "qhr/liealg/lattice.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qhr::modular {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0, 1);

double cholesky_det(std::vector<DVec> g) {
  const std::size_t l = g.size();
  double det = 1;
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t k = 0; k < i; ++k) g[i][i] -= g[i][k] * g[i][k];
    if (g[i][i] <= 0) throw std::logic_error("Gram matrix is not positive definite");
    det *= g[i][i];
    const double d = std::sqrt(g[i][i]);
    g[i][i] = d;
    for (std::size_t j = i + 1; j < l; ++j) {
      for (std::size_t k = 0; k < i; ++k) g[j][i] -= g[j][k] * g[i][k];
      g[j][i] /= d;
    }
  }
  return det;
}

double diameter(const std::vector<DVec>& g) {
  double d = 0;
  for (std::size_t i = 0; i < g.size(); ++i) d += std::sqrt(g[i][i]);
  return d;
}

void require_upper_half_plane(const Complex& tau) {
  if (!(tau.imag() > 0)) throw InvalidPoint("tau must lie in the upper half plane, got Im tau = " +
                                            std::to_string(tau.imag()));
}

// Smallest radius whose Gaussian tail, times K, falls below tol.
double tail_radius(int rank, double covol, double diam, double a, double K, double tol) {
  double R = 1;
  while (K * gaussian_tail(rank, covol, diam, a, R) > tol) R *= 1.1;
  return R;
}

Complex to_complex(const Gaussian& g) { return {g.re.get_d(), g.im.get_d()}; }

CVec apply_matrix(const WeylElement& w, const CVec& v, bool inverse) {
  const WeylElement m = inverse ? w.inverse() : w;
  CVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += static_cast<double>(m.entry(i, j)) * v[j];
  return r;
}

CVec axpy(const CVec& a, const Complex& s, const CVec& b) {
  CVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += s * b[i];
  return r;
}

}  // namespace

Value operator+(const Value& a, const Value& b) { return {a.v + b.v, a.tail + b.tail}; }
Value operator-(const Value& a, const Value& b) { return {a.v - b.v, a.tail + b.tail}; }
Value operator*(const Value& a, const Value& b) {
  return {a.v * b.v, std::abs(a.v) * b.tail + std::abs(b.v) * a.tail + a.tail * b.tail};
}
Value operator*(const Complex& s, const Value& a) { return {s * a.v, std::abs(s) * a.tail}; }
Value operator/(const Value& a, const Value& b) {
  const double m = std::abs(b.v);
  if (b.tail >= m) return {a.v / b.v, std::numeric_limits<double>::infinity()};
  // |a/b - a'/b'| <= (|a| db + |b| da) / (|b| (|b| - db))
  return {a.v / b.v, (std::abs(a.v) * b.tail + m * a.tail) / (m * (m - b.tail))};
}

Complex e2pi(const Complex& x) { return std::exp(2 * kPi * kI * x); }

void enumerate_ellipsoid(const std::vector<DVec>& gram, const DVec& center, double r2,
                         const std::function<void(const std::vector<long>&)>& visit) {
  const int l = static_cast<int>(gram.size());
  // |k - c|^2 = sum_i d_i (k_i - c_i + sum_{j>i} m_ij (k_j - c_j))^2
  std::vector<DVec> chol(l, DVec(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j <= i; ++j) {
      double s = gram[i][j];
      for (int k = 0; k < j; ++k) s -= chol[i][k] * chol[j][k];
      chol[i][j] = i == j ? std::sqrt(s) : s / chol[j][j];
    }
  // gram = L L^T with L lower; write x^T L L^T x = sum_j (sum_{i>=j} L_ij x_i)^2 and enumerate from the last coordinate
  DVec d(l);
  std::vector<DVec> m(l, DVec(l, 0));
  for (int j = 0; j < l; ++j) {
    d[j] = chol[j][j] * chol[j][j];
    for (int i = j + 1; i < l; ++i) m[j][i] = chol[i][j] / chol[j][j];
  }
  std::vector<long> k(l, 0);
  std::function<void(int, double)> rec = [&](int j, double used) {
    double shift = 0;
    for (int i = j + 1; i < l; ++i) shift += m[j][i] * (k[i] - center[i]);
    const double mid = center[j] - shift;
    const double room = r2 - used;
    if (room < 0) return;
    const double half = std::sqrt(room / d[j]);
    for (long v = static_cast<long>(std::ceil(mid - half)); v <= static_cast<long>(std::floor(mid + half)); ++v) {
      k[j] = v;
      const double t = v - mid;
      if (j == 0)
        visit(k);
      else
        rec(j - 1, used + d[j] * t * t);
    }
  };
  rec(l - 1, 0);
}

double gaussian_tail(int rank, double covolume, double diam, double a, double R) {
  const double unit_ball = std::pow(kPi, rank / 2.0) / std::tgamma(rank / 2.0 + 1);
  double sum = 0;
  for (int m = 0;; ++m) {
    const double r = R + m;
    const double term = unit_ball * std::pow(r + 1 + diam, rank) / covolume * std::exp(-a * r * r);
    sum += term;
    if (m > 4 && term < 1e-20 * sum) break;
    if (m > 100000) break;
  }
  return sum;
}

CosetIndex::CosetIndex(const RootSystem& rs, long n) : rs_(&rs), n_(n) {
  if (n <= 0) throw std::invalid_argument("coset index needs a positive level");
  const int l = rs.rank();
  std::vector<std::vector<long>> rows(l, std::vector<long>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      rows[i][j] = n * rs.form(rs.simple_coroot(i), rs.simple_coroot(j)).get_num().get_si();
  hnf_ = liealg::hermite_normal_form(rows);
  size_ = 1;
  for (int i = 0; i < l; ++i) size_ *= static_cast<std::size_t>(hnf_[i][i]);
}

std::size_t CosetIndex::index(std::vector<long> v) const {
  const std::size_t l = v.size();
  std::size_t idx = 0;
  for (std::size_t i = 0; i < l; ++i) {
    const long h = hnf_[i][i];
    long q = v[i] / h;
    if (v[i] - q * h < 0) --q;
    if (q != 0)
      for (std::size_t j = i; j < l; ++j) v[j] -= q * hnf_[i][j];
    idx = idx * static_cast<std::size_t>(h) + static_cast<std::size_t>(v[i]);
  }
  return idx;
}

std::vector<long> CosetIndex::representative_coords(std::size_t idx) const {
  const int l = rs_->rank();
  std::vector<long> c(l);
  for (int i = l - 1; i >= 0; --i) {
    const auto h = static_cast<std::size_t>(hnf_[i][i]);
    c[i] = static_cast<long>(idx % h);
    idx /= h;
  }
  return c;
}

RVec CosetIndex::representative(std::size_t idx) const { return rs_->from_weight_coords(representative_coords(idx)); }

Evaluator::Evaluator(const RootSystem& rs, double rel_tol) : rs_(&rs), rel_tol_(rel_tol) {
  const int l = rs.rank();
  gram_.assign(l, DVec(l));
  coroot_gram_.assign(l, DVec(l));
  weight_gram_.assign(l, DVec(l));
  for (int i = 0; i < l; ++i) {
    weight_basis_.push_back(to_double(rs.fundamental_weight(i)));
    for (int j = 0; j < l; ++j) {
      gram_[i][j] = rs.gram()[i][j].get_d();
      coroot_gram_[i][j] = rs.form(rs.simple_coroot(i), rs.simple_coroot(j)).get_d();
      weight_gram_[i][j] = rs.form(rs.fundamental_weight(i), rs.fundamental_weight(j)).get_d();
    }
  }
  coroot_covol_ = std::sqrt(cholesky_det(coroot_gram_));
  weight_covol_ = std::sqrt(cholesky_det(weight_gram_));
  coroot_diam_ = diameter(coroot_gram_);
  weight_diam_ = diameter(weight_gram_);
}

DVec Evaluator::to_double(const RVec& v) const {
  DVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].get_d();
  return r;
}

CVec Evaluator::to_complex(const RVec& v) const {
  CVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].get_d();
  return r;
}

Complex Evaluator::form(const CVec& a, const CVec& b) const {
  Complex s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * gram_[i][j] * b[j];
  return s;
}

Complex Evaluator::form(const DVec& a, const CVec& b) const {
  Complex s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * gram_[i][j] * b[j];
  return s;
}

double Evaluator::form(const DVec& a, const DVec& b) const {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * gram_[i][j] * b[j];
  return s;
}

Value Evaluator::theta(const RVec& lambda_bar, long n, const Complex& tau, const CVec& z) const {
  require_upper_half_plane(tau);
  if (n <= 0) throw std::invalid_argument("theta functions need a positive level");
  const int l = rs_->rank();
  const double it = tau.imag();
  DVec y(l), c(l);
  for (int i = 0; i < l; ++i) {
    y[i] = z[i].imag();
    c[i] = -static_cast<double>(n) * y[i] / it;
  }
  const double a = kPi * it / n;
  const double K = std::exp(kPi * n * form(y, y) / it);
  const double covol = std::pow(static_cast<double>(n), l) * coroot_covol_;
  const double diam = n * coroot_diam_;
  const double tol = rel_tol_ * K;
  const double R = tail_radius(l, covol, diam, a, K, tol);

  const DVec lam = to_double(lambda_bar);
  std::vector<DVec> g(l, DVec(l));
  DVec kc(l), step(l);
  for (int i = 0; i < l; ++i) {
    step[i] = n * 2.0 / gram_[i][i];
    kc[i] = (c[i] - lam[i]) / step[i];
    for (int j = 0; j < l; ++j) g[i][j] = static_cast<double>(n) * n * coroot_gram_[i][j];
  }
  CVec Gz(l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) Gz[i] += gram_[i][j] * z[j];
  Complex sum = 0;
  DVec mu(l);
  enumerate_ellipsoid(g, kc, R * R, [&](const std::vector<long>& k) {
    for (int i = 0; i < l; ++i) mu[i] = lam[i] + step[i] * k[i];
    Complex muz = 0;
    for (int i = 0; i < l; ++i) muz += mu[i] * Gz[i];
    const double m2 = form(mu, mu);
    sum += std::exp(2 * kPi * kI * muz + kPi * kI * tau * (m2 / n));
  });
  return {sum, K * gaussian_tail(l, covol, diam, a, R)};
}

std::vector<Value> Evaluator::theta_all(const CosetIndex& cosets, const Complex& tau, const CVec& z) const {
  require_upper_half_plane(tau);
  const int l = rs_->rank();
  const long n = cosets.n();
  const double it = tau.imag();
  DVec y(l), c(l);
  for (int i = 0; i < l; ++i) {
    y[i] = z[i].imag();
    c[i] = -static_cast<double>(n) * y[i] / it;
  }
  const double a = kPi * it / n;
  const double K = std::exp(kPi * n * form(y, y) / it);
  const double R = tail_radius(l, weight_covol_, weight_diam_, a, K, rel_tol_ * K);
  // center in fundamental-weight coordinates: (c|alpha_i^vee)
  DVec kc(l);
  for (int i = 0; i < l; ++i) {
    double s = 0;
    for (int j = 0; j < l; ++j) s += gram_[i][j] * c[j];
    kc[i] = 2 * s / gram_[i][i];
  }
  CVec Wz(l);  // (omega_i|z)
  for (int i = 0; i < l; ++i) Wz[i] = form(weight_basis_[i], z);
  std::vector<Complex> sums(cosets.size());
  enumerate_ellipsoid(weight_gram_, kc, R * R, [&](const std::vector<long>& k) {
    Complex muz = 0;
    double m2 = 0;
    for (int i = 0; i < l; ++i) {
      if (k[i] == 0) continue;
      muz += static_cast<double>(k[i]) * Wz[i];
      for (int j = 0; j < l; ++j) m2 += k[i] * weight_gram_[i][j] * k[j];
    }
    sums[cosets.index(k)] += std::exp(2 * kPi * kI * muz + kPi * kI * tau * (m2 / n));
  });
  const double tail = K * gaussian_tail(l, weight_covol_, weight_diam_, a, R);
  std::vector<Value> out(sums.size());
  for (std::size_t i = 0; i < sums.size(); ++i) out[i] = {sums[i], tail};
  return out;
}

Value Evaluator::eta(const Complex& tau) const {
  require_upper_half_plane(tau);
  const Complex q = std::exp(2 * kPi * kI * tau);
  const double aq = std::abs(q);
  Complex sum = 1;
  long k = 1;
  for (;; ++k) {
    const double e = k * (3.0 * k - 1) / 2;
    if (std::pow(aq, e) < 1e-18) break;
    const Complex s = k % 2 == 0 ? 1.0 : -1.0;
    sum += s * (std::exp(2 * kPi * kI * tau * e) + std::exp(2 * kPi * kI * tau * (k * (3.0 * k + 1) / 2)));
  }
  const double lead = std::abs(std::exp(2 * kPi * kI * tau / 24.0));
  const double tail = 2 * std::pow(aq, k * (3.0 * k - 1) / 2) / (1 - aq) * lead;
  return {std::exp(2 * kPi * kI * tau / 24.0) * sum, tail};
}

Value Evaluator::jacobi(ThetaKind kind, const Complex& tau, const Complex& z) const {
  require_upper_half_plane(tau);
  const double s = (kind == ThetaKind::T10 || kind == ThetaKind::T11) ? 0.5 : 0.0;
  const bool alternating = kind == ThetaKind::T01 || kind == ThetaKind::T11;
  const double it = tau.imag();
  const double c = -z.imag() / it;
  const double a = kPi * it;
  const double K = std::exp(kPi * z.imag() * z.imag() / it);
  const double R = tail_radius(1, 1, 1, a, K, rel_tol_ * K);
  Complex sum = 0;
  for (long j = static_cast<long>(std::floor(c - s - R)); j <= static_cast<long>(std::ceil(c - s + R)); ++j) {
    const double m = j + s;
    const double sign = alternating && (j % 2 != 0) ? -1.0 : 1.0;
    sum += sign * std::exp(kPi * kI * tau * (m * m) + 2 * kPi * kI * m * z);
  }
  Value v{sum, K * gaussian_tail(1, 1, 1, a, R)};
  if (kind == ThetaKind::T11) v = kI * v;
  return v;
}

SliceEvaluator::SliceEvaluator(const RootSystem& rs, const std::vector<WeylElement>& W, const NilpotentSlice& slice,
                               double rel_tol)
    : ev_(rs, rel_tol), W_(&W), slice_(&slice) {
  const int l = rs.rank();
  for (const auto& w : W) {
    std::vector<int> m(l * l);
    for (int j = 0; j < l; ++j) {
      const RVec wc = rs.weight_coords(w.apply(rs.fundamental_weight(j)));
      for (int i = 0; i < l; ++i) m[i * l + j] = static_cast<int>(wc[i].get_num().get_si());
    }
    weight_action_.push_back(std::move(m));
  }
  pairs_ = half_pairs();
}

std::vector<std::pair<int, int>> SliceEvaluator::half_pairs() const {
  const RootSystem& rs = ev_.root_system();
  std::vector<std::pair<int, int>> out;
  if (slice_->delta_half.empty()) return out;
  if (slice_->kind != liealg::SliceKind::Minimal)
    throw std::invalid_argument("the square root over Delta^{1/2} is only fixed for the minimal slice");
  const RVec& theta = rs.highest_root();
  for (int idx : slice_->delta_half) {
    const RVec& a = rs.roots()[idx];
    if (a > theta - a) continue;
    out.emplace_back(idx, rs.root_index(theta - a));
  }
  return out;
}

double SliceEvaluator::lambda_x(const RVec& lambda_bar) const {
  return ev_.root_system().form(lambda_bar, slice_->x).get_d();
}

namespace {

struct FArgs {
  CVec arg;
  Complex prefactor;
};

// f^{variant}_{lambda,w}(tau, z) = prefactor Theta_lambda(tau, w^{-1} arg).
FArgs f_arguments(const Evaluator& ev, const NilpotentSlice& slice, Variant v, long n, const Complex& tau,
                  const CVec& z) {
  const CVec x = ev.to_complex(slice.x);
  const double x2 = ev.root_system().norm2(slice.x).get_d();
  const Complex q_x = std::exp(kPi * kI * tau * (n * x2));
  switch (v) {
    case Variant::Plain:
      return {axpy(z, -tau, x), q_x};
    case Variant::Minus:
      return {axpy(axpy(z, 1.0, x), -tau, x), q_x};
    case Variant::Star:
      return {axpy(z, 1.0, x), 1.0};
  }
  throw std::logic_error("unknown variant");
}

}  // namespace

Value SliceEvaluator::f(Variant v, const RVec& lambda_bar, long n, const WeylElement& w, const Complex& tau,
                        const CVec& z) const {
  const FArgs fa = f_arguments(ev_, *slice_, v, n, tau, z);
  return fa.prefactor * ev_.theta(lambda_bar, n, tau, apply_matrix(w, fa.arg, true));
}

std::vector<Value> SliceEvaluator::f_all(Variant v, const CosetIndex& cosets, const WeylElement& w,
                                         const Complex& tau, const CVec& z) const {
  const FArgs fa = f_arguments(ev_, *slice_, v, cosets.n(), tau, z);
  const auto T = ev_.theta_all(cosets, tau, fa.arg);
  const int l = ev_.root_system().rank();
  // Theta_mu(tau, w^{-1} arg) = Theta_{w mu}(tau, arg)
  std::size_t wi = 0;
  while (wi < W_->size() && !((*W_)[wi] == w)) ++wi;
  if (wi == W_->size()) throw std::invalid_argument("Weyl element not in the group");
  const auto& m = weight_action_[wi];
  std::vector<Value> out(cosets.size());
  std::vector<long> wk(l);
  for (std::size_t idx = 0; idx < cosets.size(); ++idx) {
    const auto k = cosets.representative_coords(idx);
    for (int i = 0; i < l; ++i) {
      wk[i] = 0;
      for (int j = 0; j < l; ++j) wk[i] += m[i * l + j] * k[j];
    }
    out[idx] = fa.prefactor * T[cosets.index(wk)];
  }
  return out;
}

namespace {

std::vector<double> weyl_weights(const RootSystem& rs, const std::vector<WeylElement>& W,
                                 const NilpotentSlice& slice, const RVec& alpha) {
  const Rational bx = rs.form(slice.beta, slice.x);
  const RVec bv = rs.coroot(slice.beta);
  std::vector<double> c;
  c.reserve(W.size());
  for (const auto& w : W) c.push_back(Rational(w.sign() * bx * rs.form(w.apply(alpha), bv) / 4).get_d());
  return c;
}

}  // namespace

Value SliceEvaluator::numerator(Variant v, const RVec& lambda_bar, long n, const RVec& alpha, const Complex& tau,
                                const CVec& z) const {
  const auto c = weyl_weights(ev_.root_system(), *W_, *slice_, alpha);
  Value sum{0, 0};
  for (std::size_t i = 0; i < W_->size(); ++i) {
    if (c[i] == 0) continue;
    sum = sum + Complex(c[i]) * f(v, lambda_bar, n, (*W_)[i], tau, z);
  }
  return sum;
}

std::vector<Value> SliceEvaluator::numerator_all(Variant v, const CosetIndex& cosets, const RVec& alpha,
                                                 const Complex& tau, const CVec& z) const {
  const auto c = weyl_weights(ev_.root_system(), *W_, *slice_, alpha);
  const FArgs fa = f_arguments(ev_, *slice_, v, cosets.n(), tau, z);
  const auto T = ev_.theta_all(cosets, tau, fa.arg);
  const int l = ev_.root_system().rank();
  std::vector<Value> out(cosets.size(), Value{0, 0});
  std::vector<long> wk(l);
  for (std::size_t idx = 0; idx < cosets.size(); ++idx) {
    const auto k = cosets.representative_coords(idx);
    Complex s = 0;
    double tail = 0;
    for (std::size_t wi = 0; wi < W_->size(); ++wi) {
      if (c[wi] == 0) continue;
      const auto& m = weight_action_[wi];
      for (int i = 0; i < l; ++i) {
        wk[i] = 0;
        for (int j = 0; j < l; ++j) wk[i] += m[i * l + j] * k[j];
      }
      const Value& t = T[cosets.index(wk)];
      s += c[wi] * t.v;
      tail += std::abs(c[wi]) * t.tail;
    }
    out[idx] = fa.prefactor * Value{s, tail};
  }
  return out;
}

Value SliceEvaluator::denominator(Variant v, const Complex& tau, const CVec& z) const {
  const RootSystem& rs = ev_.root_system();
  const long E = theta::eta_exponent(*slice_);
  const Value eta = ev_.eta(tau);
  Value r{1, 0};
  for (long i = 0; i < std::labs(E); ++i) r = r * eta;
  if (E < 0) r = Value{1, 0} / r;
  auto root_at = [&](int idx) { return ev_.form(ev_.to_double(rs.roots()[idx]), z); };
  for (int idx : slice_->delta0_positive) r = r * ev_.jacobi(ThetaKind::T11, tau, root_at(idx));
  const ThetaKind kind = v == Variant::Plain ? ThetaKind::T01 : v == Variant::Minus ? ThetaKind::T00 : ThetaKind::T10;
  for (const auto& [a, b] : pairs_) r = r * ev_.jacobi(kind, tau, root_at(a));
  return r;
}

Value SliceEvaluator::psi(Variant v, const RVec& lambda_bar, long n, const RVec& alpha, const Complex& tau,
                          const CVec& z) const {
  return numerator(v, lambda_bar, n, alpha, tau, z) / denominator(v, tau, z);
}

Complex SliceEvaluator::quadratic_a(const CVec& z) const {
  const RootSystem& rs = ev_.root_system();
  Complex s = 0;
  for (int idx : slice_->delta0_positive) {
    const Complex a = ev_.form(ev_.to_double(rs.roots()[idx]), z);
    s += a * a;
  }
  for (int idx : slice_->delta_half) {
    const Complex a = ev_.form(ev_.to_double(rs.roots()[idx]), z);
    s += 0.5 * a * a;
  }
  return s;
}

Value SliceEvaluator::affine_numerator(long p, long u, const Complex& tau, const CVec& zprime,
                                       const Complex& t) const {
  const RootSystem& rs = ev_.root_system();
  // level-p integrable numerator with lambda^0 = 0 at (u tau, z', t/u)
  Value sum{0, 0};
  for (const auto& w : *W_)
    sum = sum + Complex(w.sign()) * ev_.theta(rs.rho(), p, Complex(u) * tau, apply_matrix(w, zprime, true));
  return e2pi(static_cast<double>(p) * t / static_cast<double>(u)) * sum;
}

Value SliceEvaluator::admissible_vacuum(Variant v, long p, long u, const Complex& tau, const CVec& z) const {
  const RootSystem& rs = ev_.root_system();
  liealg::principal_admissible_vacuum(rs, p, u);
  const CVec x = this->x();
  const double x2 = rs.norm2(slice_->x).get_d();
  Value num;
  switch (v) {
    case Variant::Plain:
      num = affine_numerator(p, u, tau, axpy(z, -tau, x), tau * x2 / 2.0);
      break;
    case Variant::Minus:
      num = affine_numerator(p, u, tau, axpy(axpy(z, 1.0, x), -tau, x), tau * x2 / 2.0);
      break;
    case Variant::Star:
      num = affine_numerator(p, u, tau, axpy(z, 1.0, x), 0.0);
      break;
  }
  return num / denominator(v, tau, z);
}

Complex series_value(const QJetSeries& s, const Complex& tau, const Complex& zscale) {
  const Complex u = 2 * kPi * kI * zscale;
  Complex total = 0;
  for (const auto& [e, jet] : s.terms()) {
    Complex j = 0, upow = 1;
    for (int k = 0; k <= jet.order(); ++k) {
      j += to_complex(jet[k]) * upow;
      upow *= u;
    }
    total += j * e2pi(tau * e.get_d());
  }
  return total;
}

}  // namespace qhr::modular
