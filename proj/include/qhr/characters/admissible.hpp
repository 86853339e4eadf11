#pragma once

// Characters at principal admissible levels k + h^vee = p/u, all at z = 0.

#include "qhr/characters/numerators.hpp"

namespace qhr::characters {

/// ch_{L(Lambda0)}(u tau, -tau x, tau|x|^2/2u) for a dominant integral Lambda0 with
/// finite part lambda0 and level m, by the Weyl-Kac formula. Zeros of the
/// specialized denominator are resolved with jets along rho^vee.
QJetSeries integrable_character_specialized(const RootSystem& rs, const std::vector<WeylElement>& W,
                                            const RVec& lambda0, long m, long u, const RVec& x, const Rational& N);

/// ch_{(p-h^vee)Lambda_0}(tau) at z = 0 from the dimension-weighted lattice sum over pQ^vee.
QJetSeries vacuum_character_dimension_sum(const RootSystem& rs, long p, const Rational& N);

/// QHR character of L(Lambda0 - (u-1)(k+h^vee)Lambda_0) as the product
/// q^a (eta(u tau)/eta(tau))^l A B C D at z = 0.
CharacterResult qhr_admissible_character(const RootSystem& rs, const std::vector<WeylElement>& W,
                                         const NilpotentSlice& slice, long p, long u, const RVec& lambda0,
                                         const Rational& N);

/// Exponent a of the product formula.
Rational qhr_prefactor_exponent(const RootSystem& rs, const NilpotentSlice& slice, long u);

/// Principal QHR character at u = h from the product over positive affine coroots.
CharacterResult principal_qhr_character(const RootSystem& rs, long p, const RVec& lambda0, const Rational& N);
/// The same product with k + h^vee = p/u for arbitrary u and no check on (p, u).
/// It is the principal QHR character only for u = h.
CharacterResult principal_product_formula(const RootSystem& rs, long p, long u, const RVec& lambda0,
                                         const Rational& N);

/// (eta(u tau)/eta(tau))^{dim g}, the vacuum character at the boundary level h^vee(1-u)/u.
CharacterResult boundary_affine_character(const RootSystem& rs, long u, const Rational& N);

/// Boundary-level QHR character as the eta quotient times prod_j theta_11(u tau, -j tau)^{dim g_j}.
/// The overall phase is (-i)^{|Delta_+|} i^{|Delta^0_+|}, which makes the series real; literal_phase
/// keeps (-i)^{|Delta_+|} alone.
CharacterResult boundary_qhr_character(const RootSystem& rs, const NilpotentSlice& slice, long u,
                                       const Rational& N, bool literal_phase = false);

/// The same character written as a finite product of (1 - q^{un-j})(1 - q^{un-(u-j)}).
CharacterResult boundary_qhr_character_product(const RootSystem& rs, const NilpotentSlice& slice, long u,
                                               const Rational& N, bool literal_phase = false);

/// Vacuum character of V_k at k + h^vee = p/u: ch_{(p-h^vee)Lambda_0}(u tau) (eta(u tau)/eta(tau))^{dim g}.
CharacterResult admissible_vacuum_character(const RootSystem& rs, long p, long u, const Rational& N);

/// True iff the QHR of L(k Lambda_0) vanishes: u <= theta(x).
bool vanishing_predicate(const NilpotentSlice& slice, long u);

/// k dim g / (k + h^vee).
Rational affine_central_charge(const RootSystem& rs, const Rational& k);
/// dim g_0 - dim g_{1/2}/2 - (12u/p)|rho - (p/u) x|^2.
Rational qhr_central_charge(const RootSystem& rs, const NilpotentSlice& slice, long p, long u);
/// dim g_0 - dim g_{1/2}/2 - (12u/h^vee)|rho - (h^vee/u) x|^2 at the boundary level.
Rational boundary_qhr_central_charge(const RootSystem& rs, const NilpotentSlice& slice, long u);

}  // namespace qhr::characters
