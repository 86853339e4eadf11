#include "qhr/modular/transforms.hpp"

#include "qhr/liealg/lattice.hpp"

#include <cmath>
#include <numbers>

namespace qhr::modular {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0, 1);

// e^{2 pi i r}, reducing r mod 1 exactly first.
Complex phase(const Rational& r) {
  const Rational f = r - floor_of(r);
  return e2pi(f.get_d());
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

CVec scaled(const CVec& v, const Complex& s) {
  CVec r = v;
  for (auto& c : r) c *= s;
  return r;
}

Complex i_power(long k) {
  static const Complex p[4] = {1.0, kI, -1.0, -kI};
  return p[((k % 4) + 4) % 4];
}

// a(mu, nu) = e^{-2 pi i (mu|nu)/n} on residues of P / n Q^vee, from an exact
// integer form in fundamental-weight coordinates.
class PairingTable {
 public:
  PairingTable(const RootSystem& rs, const CosetIndex& cosets) : cosets_(&cosets) {
    const int l = rs.rank();
    Integer den = 1;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) {
        const Rational g = rs.form(rs.fundamental_weight(i), rs.fundamental_weight(j));
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), g.get_den_mpz_t());
      }
    den_ = den.get_si();
    gram_.assign(l, std::vector<long>(l));
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) {
        const Rational g = rs.form(rs.fundamental_weight(i), rs.fundamental_weight(j)) * Rational(den);
        gram_[i][j] = g.get_num().get_si();
      }
    modulus_ = cosets.n() * den_;
    roots_.resize(modulus_);
    for (long r = 0; r < modulus_; ++r) roots_[r] = phase(-Rational(r) / Rational(modulus_));
    for (std::size_t idx = 0; idx < cosets.size(); ++idx) coords_.push_back(cosets.representative_coords(idx));
  }

  Complex a(const std::vector<long>& lam, std::size_t idx) const { return a(lam, coords_[idx]); }
  Complex a(std::size_t i, std::size_t j) const { return a(coords_[i], coords_[j]); }
  Complex a(const std::vector<long>& lam, const std::vector<long>& mu) const {
    long s = 0;
    for (std::size_t i = 0; i < lam.size(); ++i) {
      if (lam[i] == 0) continue;
      for (std::size_t j = 0; j < mu.size(); ++j) s += lam[i] * gram_[i][j] * mu[j];
    }
    s %= modulus_;
    if (s < 0) s += modulus_;
    return roots_[s];
  }
  std::size_t size() const { return cosets_->size(); }

 private:
  const CosetIndex* cosets_;
  long den_ = 1, modulus_ = 1;
  std::vector<std::vector<long>> gram_;
  std::vector<std::vector<long>> coords_;
  std::vector<Complex> roots_;
};

std::vector<long> integral_weight_coords(const RootSystem& rs, const RVec& lambda_bar) {
  const RVec wc = rs.weight_coords(lambda_bar);
  std::vector<long> out;
  for (const auto& c : wc) {
    if (c.get_den() != 1) throw std::invalid_argument("lambda_bar must be an integral weight");
    out.push_back(c.get_num().get_si());
  }
  return out;
}

Value pair_sum(const PairingTable& A, const std::vector<long>& lam, const std::vector<Value>& vals) {
  Complex s = 0;
  double tail = 0;
  for (std::size_t idx = 0; idx < vals.size(); ++idx) {
    s += A.a(lam, idx) * vals[idx].v;
    tail += vals[idx].tail;
  }
  return {s, tail};
}

Complex sqrt_cosets(const CosetIndex& c) { return 1.0 / std::sqrt(static_cast<double>(c.size())); }

// (-i tau)^{l/2}, principal branch.
Complex weight_factor(const Complex& tau, int l) { return std::pow(-kI * tau, l / 2.0); }

Complex theta_phi(const Evaluator& ev, const CosetIndex& c, const Complex& tau, const CVec& z) {
  const int l = ev.root_system().rank();
  return weight_factor(tau, l) * std::exp(kPi * kI * static_cast<double>(c.n()) * ev.form(z, z) / tau) *
         sqrt_cosets(c);
}

struct SPoint {
  Complex tau;
  CVec z;
};

SPoint s_image(const EvalPoint& p) { return {-1.0 / p.tau, scaled(p.z, 1.0 / p.tau)}; }

}  // namespace

TransformReport compare(std::string identity, const EvalPoint& point, const Value& left, const Value& right) {
  TransformReport r;
  r.identity = std::move(identity);
  r.point = point;
  r.left = left.v;
  r.right = right.v;
  r.abs_deviation = std::abs(left.v - right.v);
  const double scale = std::max({1.0, std::abs(left.v), std::abs(right.v)});
  r.rel_deviation = r.abs_deviation / scale;
  r.tail_bound = (left.tail + right.tail) / scale;
  r.pass = std::isfinite(r.tail_bound) && std::isfinite(r.rel_deviation) &&
           r.rel_deviation <= point.eps + r.tail_bound;
  return r;
}

nlohmann::json to_json(const TransformReport& r) {
  auto cx = [](const Complex& c) { return nlohmann::json::array({c.real(), c.imag()}); };
  nlohmann::json z = nlohmann::json::array();
  for (const auto& c : r.point.z) z.push_back(cx(c));
  return {{"identity", r.identity},
          {"point", {{"tau", cx(r.point.tau)}, {"z", z}, {"t", cx(r.point.t)}, {"eps", r.point.eps}}},
          {"left", cx(r.left)},
          {"right", cx(r.right)},
          {"abs_deviation", r.abs_deviation},
          {"rel_deviation", r.rel_deviation},
          {"tail_bound", r.tail_bound},
          {"verdict", r.pass ? "PASS" : "FAIL"}};
}

std::vector<EvalPoint> sample_points(int count, std::uint64_t seed,
                                     const std::function<CVec(std::mt19937_64&)>& zgen, double eps) {
  std::mt19937_64 rng(seed);
  std::vector<EvalPoint> pts;
  for (int i = 0; i < count; ++i) {
    EvalPoint p;
    const double re = uniform(rng, -0.5, 0.5);
    const double im = uniform(rng, 0.6, 1.2);
    p.tau = {re, im};
    p.z = zgen(rng);
    p.eps = eps;
    pts.push_back(std::move(p));
  }
  return pts;
}

CVec random_hf(const RootSystem& rs, const NilpotentSlice& slice, std::mt19937_64& rng) {
  CVec z(rs.rank(), 0.0);
  if (!slice.hf_available) return z;
  for (const auto& b : slice.hf_basis) {
    const Complex c(uniform(rng, -0.3, 0.3), uniform(rng, -0.1, 0.1));
    for (int i = 0; i < rs.rank(); ++i) z[i] += c * b[i].get_d();
  }
  return z;
}

CVec random_h(const RootSystem& rs, std::mt19937_64& rng) {
  CVec z(rs.rank());
  for (auto& c : z) c = {uniform(rng, -0.3, 0.3), uniform(rng, -0.1, 0.1)};
  return z;
}

std::vector<TransformReport> verify_theta_transforms(const RootSystem& rs, const RVec& lambda_bar, long n,
                                                     const EvalPoint& point) {
  const Evaluator ev(rs);
  const CosetIndex cosets(rs, n);
  const PairingTable A(rs, cosets);
  const auto lam = integral_weight_coords(rs, lambda_bar);
  const SPoint s = s_image(point);
  std::vector<TransformReport> out;

  const auto T = ev.theta_all(cosets, point.tau, point.z);
  out.push_back(compare("theta S", point, ev.theta(lambda_bar, n, s.tau, s.z),
                        theta_phi(ev, cosets, point.tau, point.z) * pair_sum(A, lam, T)));

  const Rational ph = rs.norm2(lambda_bar) / (2 * n);
  out.push_back(compare("theta T", point, ev.theta(lambda_bar, n, point.tau + 1.0, point.z),
                        phase(ph) * ev.theta(lambda_bar, n, point.tau, point.z)));

  // S applied at (tau', z') and then at (tau, z) lands on (tau, -z)
  std::vector<Value> inner(cosets.size());
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    Complex acc = 0;
    double tail = 0;
    for (std::size_t j = 0; j < cosets.size(); ++j) {
      acc += A.a(i, j) * T[j].v;
      tail += T[j].tail;
    }
    inner[i] = {acc, tail};
  }
  const Complex phis = theta_phi(ev, cosets, s.tau, s.z) * theta_phi(ev, cosets, point.tau, point.z);
  out.push_back(compare("theta S^2", point, ev.theta(lambda_bar, n, point.tau, scaled(point.z, -1.0)),
                        phis * pair_sum(A, lam, inner)));
  return out;
}

std::vector<TransformReport> verify_f_transforms(const SliceEvaluator& se, Variant variant, const RVec& lambda_bar,
                                                 long n, const WeylElement& w, const EvalPoint& point) {
  const Evaluator& ev = se.base();
  const RootSystem& rs = ev.root_system();
  const CosetIndex cosets(rs, n);
  const PairingTable A(rs, cosets);
  const auto lam = integral_weight_coords(rs, lambda_bar);
  const SPoint s = s_image(point);
  const Rational lx = rs.form(lambda_bar, se.slice().x);
  const Rational x2 = rs.norm2(se.slice().x);
  const Rational l2n = rs.norm2(lambda_bar) / (2 * n);
  const Complex phi = theta_phi(ev, cosets, point.tau, point.z);
  const std::string name = "f" + std::string(variant == Variant::Plain ? "" : variant == Variant::Minus ? "-" : "*");

  Variant s_target = Variant::Star, t_target = Variant::Minus;
  Rational s_phase = 0, t_phase = 0;
  switch (variant) {
    case Variant::Plain:
      s_target = Variant::Star;
      t_target = Variant::Minus;
      t_phase = -2 * lx + n * x2 / 2 + l2n;
      break;
    case Variant::Minus:
      s_target = Variant::Minus;
      s_phase = 2 * lx - n * x2;
      t_target = Variant::Plain;
      t_phase = n * x2 / 2 + l2n;
      break;
    case Variant::Star:
      s_target = Variant::Plain;
      s_phase = 2 * lx;
      t_target = Variant::Star;
      t_phase = l2n;
      break;
  }
  std::vector<TransformReport> out;
  const auto F = se.f_all(s_target, cosets, w, point.tau, point.z);
  out.push_back(compare(name + " S", point, se.f(variant, lambda_bar, n, w, s.tau, s.z),
                        (phi * phase(s_phase)) * pair_sum(A, lam, F)));
  out.push_back(compare(name + " T", point, se.f(variant, lambda_bar, n, w, point.tau + 1.0, point.z),
                        phase(t_phase) * se.f(t_target, lambda_bar, n, w, point.tau, point.z)));
  return out;
}

std::vector<TransformReport> verify_denominator_transforms(const SliceEvaluator& se, const EvalPoint& point) {
  const RootSystem& rs = se.base().root_system();
  const NilpotentSlice& sl = se.slice();
  const SPoint s = s_image(point);
  const Complex pre = i_power(-static_cast<long>(sl.delta0_positive.size())) * weight_factor(point.tau, rs.rank()) *
                      std::exp(kPi * kI * se.quadratic_a(point.z) / point.tau);
  std::vector<TransformReport> out;
  const std::pair<Variant, Variant> s_pairs[] = {
      {Variant::Plain, Variant::Star}, {Variant::Minus, Variant::Minus}, {Variant::Star, Variant::Plain}};
  for (const auto& [from, to] : s_pairs)
    out.push_back(compare("R" + std::string(from == Variant::Plain ? "" : from == Variant::Minus ? "-" : "*") + " S",
                          point, se.denominator(from, s.tau, s.z), pre * se.denominator(to, point.tau, point.z)));
  const Rational t_pm = make_rational(2 * sl.dim_g0() - sl.dim_g_half(), 48);
  const Rational t_star = make_rational(sl.dim_gf(), 24);
  out.push_back(compare("R T", point, se.denominator(Variant::Plain, point.tau + 1.0, point.z),
                        phase(t_pm) * se.denominator(Variant::Minus, point.tau, point.z)));
  out.push_back(compare("R- T", point, se.denominator(Variant::Minus, point.tau + 1.0, point.z),
                        phase(t_pm) * se.denominator(Variant::Plain, point.tau, point.z)));
  out.push_back(compare("R* T", point, se.denominator(Variant::Star, point.tau + 1.0, point.z),
                        phase(t_star) * se.denominator(Variant::Star, point.tau, point.z)));
  return out;
}

std::string to_string(Which w) {
  switch (w) {
    case Which::SPlain:
      return "S-plain";
    case Which::SMinus:
      return "S-minus";
    case Which::SStar:
      return "S-star";
    case Which::TPlain:
      return "T-plain";
    case Which::TMinus:
      return "T-minus";
    case Which::TStar:
      return "T-star";
  }
  return "?";
}

Which parse_which(const std::string& s) {
  for (Which w : {Which::SPlain, Which::SMinus, Which::SStar, Which::TPlain, Which::TMinus, Which::TStar})
    if (to_string(w) == s) return w;
  throw std::invalid_argument("unknown identity '" + s + "'; expected S-plain, S-minus, S-star, T-plain, T-minus or T-star");
}

namespace {

Complex phi1(const SliceEvaluator& se, const CosetIndex& cosets, const Complex& tau, const CVec& z) {
  const Evaluator& ev = se.base();
  const Complex e = static_cast<double>(cosets.n()) * ev.form(z, z) - se.quadratic_a(z);
  return i_power(static_cast<long>(se.slice().delta0_positive.size())) * sqrt_cosets(cosets) *
         std::exp(kPi * kI * e / tau);
}

Rational a1_exponent(const NilpotentSlice& sl) { return -make_rational(2 * sl.dim_g0() - sl.dim_g_half(), 48); }

}  // namespace

TransformReport verify_psi_transform(const SliceEvaluator& se, const RVec& lambda_bar, long n, const RVec& alpha,
                                     Which which, const EvalPoint& point) {
  const RootSystem& rs = se.base().root_system();
  const NilpotentSlice& sl = se.slice();
  const Rational lx = rs.form(lambda_bar, sl.x);
  const Rational x2 = rs.norm2(sl.x);
  const std::string name = "psi " + to_string(which);
  if (which == Which::SPlain || which == Which::SMinus || which == Which::SStar) {
    const CosetIndex cosets(rs, n);
    const PairingTable A(rs, cosets);
    const auto lam = integral_weight_coords(rs, lambda_bar);
    const SPoint s = s_image(point);
    Variant from = Variant::Plain, to = Variant::Star;
    Rational ph = 0;
    if (which == Which::SMinus) {
      from = to = Variant::Minus;
      ph = 2 * lx - n * x2;
    } else if (which == Which::SStar) {
      from = Variant::Star;
      to = Variant::Plain;
      ph = 2 * lx;
    }
    const auto B = se.numerator_all(to, cosets, alpha, point.tau, point.z);
    const Value rhs = pair_sum(A, lam, B) / se.denominator(to, point.tau, point.z);
    return compare(name, point, se.psi(from, lambda_bar, n, alpha, s.tau, s.z),
                   (phi1(se, cosets, point.tau, point.z) * phase(ph)) * rhs);
  }
  const Complex tau1 = point.tau + 1.0;
  const Rational lmx = rs.norm2(lambda_bar - Rational(n) * sl.x) / (2 * n);
  switch (which) {
    case Which::TPlain:
      return compare(name, point, se.psi(Variant::Plain, lambda_bar, n, alpha, tau1, point.z),
                     phase(lmx - lx + a1_exponent(sl)) *
                         se.psi(Variant::Minus, lambda_bar, n, alpha, point.tau, point.z));
    case Which::TMinus:
      return compare(name, point, se.psi(Variant::Minus, lambda_bar, n, alpha, tau1, point.z),
                     phase(lmx + lx + a1_exponent(sl)) *
                         se.psi(Variant::Plain, lambda_bar, n, alpha, point.tau, point.z));
    default:
      return compare(name, point, se.psi(Variant::Star, lambda_bar, n, alpha, tau1, point.z),
                     phase(rs.norm2(lambda_bar) / (2 * n) - make_rational(sl.dim_gf(), 24)) *
                         se.psi(Variant::Star, lambda_bar, n, alpha, point.tau, point.z));
  }
}

TransformReport verify_psi_double_s(const SliceEvaluator& se, const RVec& lambda_bar, long n, const RVec& alpha,
                                    const EvalPoint& point) {
  const RootSystem& rs = se.base().root_system();
  const CosetIndex cosets(rs, n);
  const PairingTable A(rs, cosets);
  const auto lam = integral_weight_coords(rs, lambda_bar);
  const SPoint s = s_image(point);
  const auto B = se.numerator_all(Variant::Plain, cosets, alpha, point.tau, point.z);
  const Value R = se.denominator(Variant::Plain, point.tau, point.z);
  // Psi^*_mu(tau', z') = phi1(tau, z) e^{4 pi i mu(x)} sum_nu a(mu, nu) Psi_nu(tau, z)
  std::vector<Value> star(cosets.size());
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    Complex acc = 0;
    double tail = 0;
    for (std::size_t j = 0; j < cosets.size(); ++j) {
      acc += A.a(i, j) * B[j].v;
      tail += B[j].tail;
    }
    const Rational mx = rs.form(cosets.representative(i), se.slice().x);
    star[i] = phase(2 * mx) * Value{acc, tail};
  }
  const Complex phis = phi1(se, cosets, s.tau, s.z) * phi1(se, cosets, point.tau, point.z);
  return compare("psi S^2", point, se.psi(Variant::Plain, lambda_bar, n, alpha, point.tau, scaled(point.z, -1.0)),
                 phis * (pair_sum(A, lam, star) / R));
}

std::vector<TransformReport> verify_vacuum_t_transforms(const SliceEvaluator& se, long p, long u,
                                                        const EvalPoint& point) {
  const RootSystem& rs = se.base().root_system();
  const NilpotentSlice& sl = se.slice();
  const Rational kappa = make_rational(p, u);
  const RVec& rho = rs.rho();
  const Rational rx = rs.form(rho, sl.x);
  const Rational shifted = rs.norm2(rho - kappa * sl.x) / (2 * kappa);
  const Complex tau1 = point.tau + 1.0;
  std::vector<TransformReport> out;
  out.push_back(compare("ch T", point, se.admissible_vacuum(Variant::Plain, p, u, tau1, point.z),
                        phase(a1_exponent(sl) + shifted - rx) *
                            se.admissible_vacuum(Variant::Minus, p, u, point.tau, point.z)));
  out.push_back(compare("ch- T", point, se.admissible_vacuum(Variant::Minus, p, u, tau1, point.z),
                        phase(a1_exponent(sl) + shifted + rx) *
                            se.admissible_vacuum(Variant::Plain, p, u, point.tau, point.z)));
  out.push_back(compare("ch* T", point, se.admissible_vacuum(Variant::Star, p, u, tau1, point.z),
                        phase(rs.norm2(rho) / (2 * kappa) - make_rational(sl.dim_gf(), 24)) *
                            se.admissible_vacuum(Variant::Star, p, u, point.tau, point.z)));
  return out;
}

}  // namespace qhr::modular
