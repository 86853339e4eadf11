#pragma once

// Floating-point evaluation of the theta-type functions directly from their
// defining sums, with rigorous bounds on the discarded lattice tails.

#include "qhr/liealg/root_system.hpp"
#include "qhr/liealg/slice.hpp"
#include "qhr/liealg/weyl.hpp"
#include "qhr/series/qseries.hpp"
#include "qhr/theta/theta.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace qhr::modular {

using liealg::NilpotentSlice;
using liealg::RootSystem;
using liealg::WeylElement;
using theta::ThetaKind;
using theta::Variant;

using Complex = std::complex<double>;
/// Complex vector in simple-root coordinates.
using CVec = std::vector<Complex>;
using DVec = std::vector<double>;

/// A value together with a bound on |exact - value| from truncation.
struct Value {
  Complex v;
  double tail = 0;
};

using qhr::operator+;
using qhr::operator-;
using qhr::operator*;

Value operator+(const Value& a, const Value& b);
Value operator-(const Value& a, const Value& b);
Value operator*(const Value& a, const Value& b);
Value operator*(const Complex& s, const Value& a);
Value operator/(const Value& a, const Value& b);

/// e^{2 pi i x}
Complex e2pi(const Complex& x);

class InvalidPoint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Enumerates integer k with (k - c)^T G (k - c) <= r2 for a positive definite G.
void enumerate_ellipsoid(const std::vector<DVec>& gram, const DVec& center, double r2,
                         const std::function<void(const std::vector<long>&)>& visit);

/// Upper bound for sum over v in (L + s), |v| > R of exp(-a |v|^2), for a lattice
/// of rank l with the given covolume and fundamental-cell diameter.
double gaussian_tail(int rank, double covolume, double diameter, double a, double R);

/// Residues of P modulo n Q^vee, indexed through the Hermite normal form.
class CosetIndex {
 public:
  CosetIndex(const RootSystem& rs, long n);
  long n() const { return n_; }
  std::size_t size() const { return size_; }
  /// Index of the weight with the given fundamental-weight coordinates.
  std::size_t index(std::vector<long> coords) const;
  /// A representative in simple-root coordinates.
  RVec representative(std::size_t idx) const;
  /// Fundamental-weight coordinates of the representative.
  std::vector<long> representative_coords(std::size_t idx) const;

 private:
  const RootSystem* rs_;
  long n_;
  std::size_t size_;
  std::vector<std::vector<long>> hnf_;
};

class Evaluator {
 public:
  explicit Evaluator(const RootSystem& rs, double rel_tol = 1e-14);

  const RootSystem& root_system() const { return *rs_; }
  DVec to_double(const RVec& v) const;
  CVec to_complex(const RVec& v) const;
  /// Bilinear form, no complex conjugation.
  Complex form(const CVec& a, const CVec& b) const;
  Complex form(const DVec& a, const CVec& b) const;
  double form(const DVec& a, const DVec& b) const;

  /// Theta_lambda(tau, z) = sum_{gamma in Q^vee} e^{2 pi i (lambda+n gamma|z)} q^{|lambda+n gamma|^2/2n}.
  Value theta(const RVec& lambda_bar, long n, const Complex& tau, const CVec& z) const;
  /// Theta_mu(tau, z) for every residue mu in P / n Q^vee, from one pass over P.
  std::vector<Value> theta_all(const CosetIndex& cosets, const Complex& tau, const CVec& z) const;

  Value eta(const Complex& tau) const;
  /// Jacobi theta_ab(tau, z) from its defining sum.
  Value jacobi(ThetaKind kind, const Complex& tau, const Complex& z) const;

 private:
  const RootSystem* rs_;
  double rel_tol_;
  std::vector<DVec> gram_;
  std::vector<DVec> coroot_gram_, weight_gram_;
  std::vector<DVec> weight_basis_;  // fundamental weights in root coordinates
  double coroot_covol_, coroot_diam_, weight_covol_, weight_diam_;
};

/// The objects attached to one nilpotent slice: f-functions, numerators, W-denominators and their quotients.
class SliceEvaluator {
 public:
  SliceEvaluator(const RootSystem& rs, const std::vector<WeylElement>& W, const NilpotentSlice& slice,
                 double rel_tol = 1e-14);

  const Evaluator& base() const { return ev_; }
  const NilpotentSlice& slice() const { return *slice_; }
  const std::vector<WeylElement>& weyl() const { return *W_; }
  CVec x() const { return ev_.to_complex(slice_->x); }
  /// lambda(x) = (lambda_bar|x).
  double lambda_x(const RVec& lambda_bar) const;

  /// f_{lambda,w}, f^-_{lambda,w}, f^*_{lambda,w} at (tau, z).
  Value f(Variant v, const RVec& lambda_bar, long n, const WeylElement& w, const Complex& tau, const CVec& z) const;
  /// The same for every residue mu in P / n Q^vee at once.
  std::vector<Value> f_all(Variant v, const CosetIndex& cosets, const WeylElement& w, const Complex& tau,
                           const CVec& z) const;

  /// (1/4) beta(x) sum_w eps(w) (w alpha|beta^vee) f^{variant}_{lambda,w}.
  Value numerator(Variant v, const RVec& lambda_bar, long n, const RVec& alpha, const Complex& tau,
                  const CVec& z) const;
  std::vector<Value> numerator_all(Variant v, const CosetIndex& cosets, const RVec& alpha, const Complex& tau,
                                   const CVec& z) const;

  /// Normalized W-denominator and its variants: theta_01 is replaced by theta_00 (minus) or theta_10 (star).
  Value denominator(Variant v, const Complex& tau, const CVec& z) const;
  Value psi(Variant v, const RVec& lambda_bar, long n, const RVec& alpha, const Complex& tau, const CVec& z) const;

  /// A(z) = (1/2) sum over Delta^0 and Delta^{1/2} of alpha(z)^2.
  Complex quadratic_a(const CVec& z) const;

  /// Euler-Poincare character of the vacuum module at k + h^vee = p/u and its minus/star
  /// versions, from the specialized affine numerator divided by the W-denominator.
  Value admissible_vacuum(Variant v, long p, long u, const Complex& tau, const CVec& z) const;

 private:
  std::vector<std::pair<int, int>> half_pairs() const;
  Value affine_numerator(long p, long u, const Complex& tau, const CVec& zprime, const Complex& t) const;

  Evaluator ev_;
  const std::vector<WeylElement>* W_;
  const NilpotentSlice* slice_;
  std::vector<std::vector<int>> weight_action_;  // w in fundamental-weight coordinates, row-major
  std::vector<std::pair<int, int>> pairs_;
};

/// Value of an exact series at tau along z = s z0, i.e. u = 2 pi i s.
Complex series_value(const QJetSeries& s, const Complex& tau, const Complex& zscale = 0);

}  // namespace qhr::modular
