#pragma once

// Weyl-alternating numerators restricted to a nilpotent slice and their
// quotients by the W-algebra denominator.

#include "qhr/liealg/affine.hpp"
#include "qhr/theta/theta.hpp"

#include <optional>

namespace qhr::characters {

using liealg::AffineWeight;
using liealg::NilpotentSlice;
using liealg::RootSystem;
using liealg::WeylElement;
using theta::Variant;

struct CharacterResult {
  /// Quotient after cancelling u^m, with its remaining jets.
  QJetSeries series;
  /// Its u^0 part: the value at z = 0.
  QJetSeries limit;
  int u_cancelled = 0;
  std::optional<Rational> central_charge;
  bool central_charge_external = false;
  std::string label;
};

/// A^[alpha]_Lambda(tau, -tau x + z, tau|x|^2/2) evaluated term by term from the
/// affine action w t_gamma on Lambda. Requires a positive integer level.
QJetSeries numerator_A_specialized(const RootSystem& rs, const std::vector<WeylElement>& W,
                                   const NilpotentSlice& slice, const AffineWeight& Lambda, const RVec& alpha,
                                   const RVec& z0, const Rational& N, int U);

/// (1/4) beta(x) sum_w eps(w) (w alpha|beta^vee) sum_gamma e^{2 pi i(mu|w^{-1} z)} q^{|mu - n w^{-1} x|^2/2n}.
/// beta defaults to the slice's choice.
QJetSeries reduced_weyl_theta_sum(const RootSystem& rs, const std::vector<WeylElement>& W, const NilpotentSlice& slice,
                        const RVec& lambda_bar, long n, const RVec& alpha, const RVec& z0, const Rational& N, int U,
                        const std::optional<RVec>& beta = std::nullopt);

/// B^[alpha]_lambda and its minus/star variants: the f-function sums.
QJetSeries numerator_B(const RootSystem& rs, const std::vector<WeylElement>& W, const NilpotentSlice& slice,
                       Variant variant, const RVec& lambda_bar, long n, const RVec& alpha, const RVec& z0,
                       const Rational& N, int U);

/// Psi = B / R for the given variant. U is the jet order kept after cancelling
/// the common power of u; both sides are built with enough extra jets.
CharacterResult psi(const RootSystem& rs, const std::vector<WeylElement>& W, const NilpotentSlice& slice,
                    Variant variant, const RVec& lambda_bar, long n, const RVec& alpha, const RVec& z0,
                    const Rational& N, int U);

/// i^{|Delta^0_+|}, the constant relating Psi to a character: ch = i^{|Delta^0_+|} Psi.
Gaussian denominator_phase(const NilpotentSlice& slice);

/// Character of W^min_k for the Deligne-series algebras at negative integer k >= -b.
CharacterResult wmin_character(const RootSystem& rs, const std::vector<WeylElement>& W, long k, const Rational& N,
                               int U = 0, const std::optional<RVec>& z0 = std::nullopt);

/// Central charge of W^min_k: k dim g/(k + h^vee) - 6k + h^vee - 4.
Rational wmin_central_charge(const RootSystem& rs, const Rational& k);

struct DenominatorIdentity {
  bool equal = false;
  QJetSeries denominator;
  QJetSeries weyl_sum;
};

/// Compares the minimal W-denominator with i^{|Delta^0_+|} times the alternating sum at
/// level h^vee - b, alpha = alpha^(b). The lattice shift is w^{-1}(theta)/2, or w(theta)/2
/// when literal_shift is set.
DenominatorIdentity minimal_denominator_identity(const RootSystem& rs, const std::vector<WeylElement>& W,
                                                 const Rational& N, int U, bool literal_shift = false,
                                                 const std::optional<RVec>& z0 = std::nullopt);

}  // namespace qhr::characters
