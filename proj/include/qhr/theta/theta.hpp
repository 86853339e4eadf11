#pragma once

// Theta-type objects as exact series in q with jets along z = (u / 2 pi i) z0.
// With that substitution e^{2 pi i (mu|z)} becomes exp(u (mu|z0)).

#include "qhr/liealg/root_system.hpp"
#include "qhr/liealg/slice.hpp"
#include "qhr/liealg/weyl.hpp"
#include "qhr/series/qseries.hpp"

#include <functional>

namespace qhr::theta {

using liealg::NilpotentSlice;
using liealg::RootSystem;
using liealg::WeylElement;

/// Sum over mu = lambda_bar + n gamma (gamma in Q^vee) of
///   exp(2 pi i (mu|phase)) exp(u (mu|direction)) q^{|mu|^2/2n + (mu|tau_shift) + q_offset}.
/// Empty vectors stand for zero.
struct ThetaArgs {
  RVec direction;
  RVec tau_shift;
  RVec phase;
  Rational q_offset;
};

/// Calls visit(mu, exponent) for every lattice point whose exponent is <= cutoff.
void for_each_theta_point(const RootSystem& rs, const RVec& lambda_bar, const Rational& n, const RVec& tau_shift,
                          const Rational& q_offset, const Rational& cutoff,
                          const std::function<void(const RVec& mu, const Rational& exponent)>& visit);

/// Adds weight * (theta sum described by args) to acc.
void accumulate_theta(const RootSystem& rs, const RVec& lambda_bar, const Rational& n, const ThetaArgs& args,
                      const Gaussian& weight, SeriesAccumulator& acc, const Rational& cutoff);

/// Theta_lambda(tau, z) along z0.
QJetSeries theta_lambda(const RootSystem& rs, const RVec& lambda_bar, long n, const RVec& z0, const Rational& N,
                        int U);

enum class Variant { Plain, Minus, Star };
std::string to_string(Variant v);

/// Arguments realizing f_{lambda,w}(tau, z + a x + b tau x) = q^{n|x|^2/2} Theta_lambda(tau, w^{-1}(z + a x + (b-1) tau x)).
/// f^- is (a,b) = (1,0); f^* is (1,1) times q^{-n|x|^2/2}.
ThetaArgs f_args(const RootSystem& rs, const Rational& n, const WeylElement& w, const RVec& x, const RVec& z0, int a,
                 int b);
ThetaArgs f_args(const RootSystem& rs, Variant variant, const Rational& n, const WeylElement& w, const RVec& x,
                 const RVec& z0);

QJetSeries f_function(const RootSystem& rs, Variant variant, const RVec& lambda_bar, long n, const WeylElement& w,
                      const RVec& x, const RVec& z0, const Rational& N, int U);
/// f_{lambda,w}(tau, z + a x + b tau x), including the q^{n|x|^2/2} of the definition.
QJetSeries f_shifted(const RootSystem& rs, const RVec& lambda_bar, long n, const WeylElement& w, const RVec& x,
                     const RVec& z0, int a, int b, const Rational& N, int U);

/// eta(tau) = q^{1/24} prod (1 - q^n), via the pentagonal expansion.
QJetSeries dedekind_eta(const Rational& N, int U = 0);
/// eta(s tau) for a positive rational s.
QJetSeries dedekind_eta_scaled(const Rational& s, const Rational& N, int U = 0);

enum class ThetaKind { T00, T01, T10, T11 };

/// Jacobi theta_ab(tau, zcoef * u / 2 pi i):
///   theta_00 = sum q^{j^2/2} y^j,  theta_01 = sum (-1)^j q^{j^2/2} y^j,
///   theta_10 = sum q^{(j+1/2)^2/2} y^{j+1/2},  theta_11 = i sum (-1)^j q^{(j+1/2)^2/2} y^{j+1/2}.
QJetSeries jacobi_theta(ThetaKind kind, const Rational& zcoef, const Rational& N, int U);
/// theta_11 from -i q^{1/12} e^{-pi i z} eta(tau) prod (1 - y^{-1} q^n)(1 - y q^{n-1}).
QJetSeries jacobi_theta11_product(const Rational& zcoef, const Rational& N, int U);
/// Lowest q-exponent of theta_ab.
Rational jacobi_theta_lead(ThetaKind kind);

/// Exponent of eta in the W-denominator: 3l/2 - dim g^f / 2.
long eta_exponent(const NilpotentSlice& slice);

/// Lowest q-exponent of the W-denominator of the given variant.
Rational w_denominator_lead(const NilpotentSlice& slice, Variant variant);

/// Normalized W-denominator and its minus/star variants along z0, with absolute cutoff N.
QJetSeries w_denominator(const RootSystem& rs, const NilpotentSlice& slice, Variant variant, const RVec& z0,
                         const Rational& N, int U);

/// Square root of the theta_01/theta_00/theta_10 product over Delta^{1/2}, built
/// by pairing alpha with theta - alpha (minimal slices only).
QJetSeries half_product_by_pairing(const RootSystem& rs, const NilpotentSlice& slice, ThetaKind kind, const RVec& z0,
                                   const Rational& N, int U);

}  // namespace qhr::theta
