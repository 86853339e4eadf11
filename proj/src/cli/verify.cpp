#include "qhr/cli/verify.hpp"

#include "qhr/characters/numerators.hpp"
#include "qhr/liealg/lattice.hpp"

#include <chrono>
#include <sstream>

namespace qhr::cli {

using liealg::LieAlgebraError;
using modular::EvalPoint;
using modular::TransformReport;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

RVec direction(const RootSystem& rs, const NilpotentSlice& slice, int seed) {
  if (!slice.hf_available || slice.hf_basis.empty()) return {};
  return liealg::generic_direction(rs, slice, seed);
}

RVec chain_root(const RootSystem& rs, long k) {
  if (rs.type().series == 'A' && rs.rank() == 1) return rs.simple_root(0);
  const char t = rs.type().series;
  if (t != 'D' && t != 'E')
    throw LieAlgebraError("alpha^(j) is defined for A1, D_n and E types only; got " + rs.name());
  if (k >= 0 || -k > liealg::deligne_b(rs))
    throw LieAlgebraError("level k must satisfy -b <= k <= -1 (b = " + std::to_string(liealg::deligne_b(rs)) +
                          "), got " + std::to_string(k));
  return liealg::alpha_j(rs, static_cast<int>(-k));
}

long shifted_level(const RootSystem& rs, long k) {
  const long n = k + rs.dual_coxeter_number();
  if (n <= 0) throw LieAlgebraError("k + h^vee must be positive, got " + std::to_string(n));
  return n;
}

void require_cosets(const RootSystem& rs, long n, std::size_t cap) {
  const Integer count = liealg::weight_coset_count(rs, n);
  if (count > Integer(static_cast<unsigned long>(cap)))
    throw liealg::LatticeCapExceeded("|P/nQ^vee| = " + count.get_str() + " exceeds the lattice cap " +
                                     std::to_string(cap));
}

CheckResult summarize(std::string name, const std::vector<TransformReport>& reports, Clock::time_point t0) {
  CheckResult r;
  r.name = std::move(name);
  r.pass = !reports.empty();
  double dev = 0, tail = 0;
  for (const auto& t : reports) {
    r.pass = r.pass && t.pass;
    dev = std::max(dev, t.rel_deviation);
    tail = std::max(tail, t.tail_bound);
    r.reports.push_back(modular::to_json(t));
  }
  std::ostringstream os;
  os << reports.size() << " identities, max deviation " << dev << ", max tail bound " << tail;
  r.detail = os.str();
  r.seconds = since(t0);
  return r;
}

std::vector<EvalPoint> hf_points(const RootSystem& rs, const NilpotentSlice& slice, const VerifyOptions& o,
                                 std::uint64_t seed) {
  return modular::sample_points(o.points, seed,
                                [&](std::mt19937_64& g) { return modular::random_hf(rs, slice, g); }, o.eps);
}

std::string exact_detail(const Rational& N, int U, std::size_t terms) {
  return "exact equality to q^" + to_string(N) + ", jet order " + std::to_string(U) + ", " + std::to_string(terms) +
         " terms";
}

}  // namespace

NilpotentSlice parse_nilpotent(const RootSystem& rs, const std::string& selector) {
  if (selector == "minimal") return liealg::minimal_slice(rs);
  if (selector == "principal") return liealg::principal_slice(rs);
  std::vector<int> labels;
  std::stringstream ss(selector);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item != "0" && item != "1" && item != "2")
      throw LieAlgebraError("nilpotent selector must be minimal, principal or Dynkin labels in {0,1,2} like 2,0,2,2");
    labels.push_back(std::stoi(item));
  }
  if (static_cast<int>(labels.size()) != rs.rank())
    throw LieAlgebraError("expected " + std::to_string(rs.rank()) + " Dynkin labels, got " +
                          std::to_string(labels.size()));
  return liealg::dynkin_slice(rs, labels);
}

CheckResult verify_theorem1(const RootSystem& rs, long k, const VerifyOptions& o) {
  const auto t0 = Clock::now();
  const auto W = liealg::weyl_group(rs, o.weyl_cap);
  const auto slice = liealg::minimal_slice(rs);
  const RVec alpha = chain_root(rs, k);
  const long n = shifted_level(rs, k);
  const RVec z0 = direction(rs, slice, o.seed_direction);
  const int U = z0.empty() ? 0 : o.U;
  const liealg::AffineWeight L{rs.rho(), Rational(n), Rational(0)};
  const auto a = characters::numerator_A_specialized(rs, W, slice, L, alpha, z0, o.N, U);
  const auto b = characters::reduced_weyl_theta_sum(rs, W, slice, rs.rho(), n, alpha, z0, o.N, U);
  CheckResult r;
  r.name = "theorem1 " + rs.name() + " k=" + std::to_string(k);
  r.pass = series_equal(a, b, o.N, U) && !a.is_zero();
  r.detail = exact_detail(o.N, U, a.terms().size());
  r.seconds = since(t0);
  return r;
}

CheckResult verify_remark4(const RootSystem& rs, const VerifyOptions& o, bool literal_shift) {
  const auto t0 = Clock::now();
  const auto W = liealg::weyl_group(rs, o.weyl_cap);
  const auto id = characters::minimal_denominator_identity(rs, W, o.N, o.U, literal_shift);
  CheckResult r;
  r.name = "remark4 " + rs.name() + " k=" + std::to_string(-liealg::deligne_b(rs));
  r.pass = id.equal;
  r.detail = exact_detail(o.N, o.U, id.denominator.terms().size());
  r.seconds = since(t0);
  return r;
}

CheckResult verify_wmin_trivial(const RootSystem& rs, long k, const VerifyOptions& o) {
  const auto t0 = Clock::now();
  const auto W = liealg::weyl_group(rs, o.weyl_cap);
  const auto c = characters::wmin_character(rs, W, k, o.N);
  CheckResult r;
  r.name = "wmin " + rs.name() + " k=" + std::to_string(k) + " is 1";
  r.pass = series_equal(c.limit, QJetSeries::constant(Gaussian(1), 0, o.N), o.N, 0);
  r.detail = "exact to q^" + to_string(o.N) + "; c = " + to_string(*c.central_charge);
  r.seconds = since(t0);
  return r;
}

CheckResult verify_theta(const RootSystem& rs, long n, const VerifyOptions& o) {
  const auto t0 = Clock::now();
  require_cosets(rs, n, o.lattice_cap);
  const auto pts = modular::sample_points(o.points, 1, [&](std::mt19937_64& g) { return modular::random_h(rs, g); },
                                          o.eps);
  std::vector<TransformReport> all;
  for (const RVec& lam : {zeros(rs.rank()), rs.rho(), rs.fundamental_weight(0)})
    for (const auto& p : pts)
      for (auto& t : modular::verify_theta_transforms(rs, lam, n, p)) all.push_back(std::move(t));
  return summarize("theta " + rs.name() + " n=" + std::to_string(n), all, t0);
}

CheckResult verify_f(const RootSystem& rs, const NilpotentSlice& slice, long n, const VerifyOptions& o) {
  const auto t0 = Clock::now();
  require_cosets(rs, n, o.lattice_cap);
  const auto W = liealg::weyl_group(rs, o.weyl_cap);
  const modular::SliceEvaluator se(rs, W, slice);
  const auto pts = hf_points(rs, slice, o, 2);
  std::vector<TransformReport> all;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (auto v : {theta::Variant::Plain, theta::Variant::Minus, theta::Variant::Star})
      for (auto& t : modular::verify_f_transforms(se, v, rs.rho(), n, W[(53 * i + 7) % W.size()], pts[i]))
        all.push_back(std::move(t));
  return summarize("f " + rs.name() + " n=" + std::to_string(n), all, t0);
}

CheckResult verify_denominator(const RootSystem& rs, const NilpotentSlice& slice, const VerifyOptions& o) {
  const auto t0 = Clock::now();
  const auto W = liealg::weyl_group(rs, o.weyl_cap);
  const modular::SliceEvaluator se(rs, W, slice);
  std::vector<TransformReport> all;
  for (const auto& p : hf_points(rs, slice, o, 3))
    for (auto& t : modular::verify_denominator_transforms(se, p)) all.push_back(std::move(t));
  return summarize("denominator " + rs.name(), all, t0);
}

CheckResult verify_theorem2(const RootSystem& rs, long k, const std::string& which, const VerifyOptions& o) {
  const auto t0 = Clock::now();
  const RVec alpha = chain_root(rs, k);
  const long n = shifted_level(rs, k);
  require_cosets(rs, n, o.lattice_cap);
  const auto W = liealg::weyl_group(rs, o.weyl_cap);
  const auto slice = liealg::minimal_slice(rs);
  const modular::SliceEvaluator se(rs, W, slice);
  std::vector<modular::Which> ids;
  if (which == "all")
    ids = {modular::Which::SPlain, modular::Which::SMinus, modular::Which::SStar,
           modular::Which::TPlain, modular::Which::TMinus, modular::Which::TStar};
  else
    ids = {modular::parse_which(which)};
  auto pts = hf_points(rs, slice, o, 4);
  const RVec z0 = direction(rs, slice, o.seed_direction);
  if (!z0.empty()) {
    EvalPoint ex{modular::Complex(0.1, 0.8), se.base().to_complex(z0)};
    for (auto& c : ex.z) c *= 0.3;
    ex.eps = o.eps;
    pts.insert(pts.begin(), ex);
  }
  std::vector<TransformReport> all;
  for (const auto& p : pts) {
    for (auto w : ids) all.push_back(modular::verify_psi_transform(se, rs.rho(), n, alpha, w, p));
    if (which == "all") all.push_back(modular::verify_psi_double_s(se, rs.rho(), n, alpha, p));
  }
  return summarize("theorem2 " + rs.name() + " k=" + std::to_string(k) + " " + which, all, t0);
}

CheckResult verify_theorem4b(const RootSystem& rs, const NilpotentSlice& slice, long p, long u,
                             const VerifyOptions& o) {
  const auto t0 = Clock::now();
  const auto W = liealg::weyl_group(rs, o.weyl_cap);
  const modular::SliceEvaluator se(rs, W, slice);
  std::vector<TransformReport> all;
  for (const auto& pt : hf_points(rs, slice, o, 5))
    for (auto& t : modular::verify_vacuum_t_transforms(se, p, u, pt)) all.push_back(std::move(t));
  return summarize("theorem4b " + rs.name() + " p=" + std::to_string(p) + " u=" + std::to_string(u), all, t0);
}

}  // namespace qhr::cli
