#pragma once

#include "fock/entire.hpp"
#include "fock/potential.hpp"
#include "fock/weights.hpp"

#include <span>

// Pointwise evaluation of the iterated weighted derivative
//   D_phi f = -e^{phi} d(e^{-phi} f),      D_phi^{(j)} f = (-1)^j e^{phi} d^j(e^{-phi} f),
// the change-of-weight identity between two weights, the weighted shifts of
// the classical weight, and derivatives of f e^{-H} on a decomposed disk.
// All evaluations expand d^j(e^{-phi} f) by the Leibniz rule, with the
// exponential derivatives supplied by Bell polynomials of the weight jet.
// The result involves conj(z), so only point values are produced, never a
// closed-form function.

namespace fock {

/// D_phi^{(j)} f(lambda) from a precomputed jet f_jet[l] = d^l f(lambda),
/// l = 0..j.
cplx dbar_star_jet(std::span<const cplx> f_jet, const WeightModel& weight,
                   cplx lambda, int j);

/// D_phi^{(j)} f(lambda). For the classical weight and j = 1 this reduces to
/// alpha conj(lambda) f(lambda) - f'(lambda). Requires j <= weight.order().
cplx dbar_star(const EntireFunction& f, const WeightModel& weight, cplx lambda, int j);

/// D_{w2}^{(j)} f(lambda) assembled from D_{w1}-values: the cross terms are
/// Bell polynomials of the difference jet d^i(phi1 - phi2)(lambda), and the
/// exponential prefactors e^{phi1-phi2} e^{phi2-phi1} cancel identically.
cplx dbar_star_change_weight(const EntireFunction& f, const WeightModel& w1,
                             const WeightModel& w2, cplx lambda, int j);

/// The weighted shift of the classical weight alpha|z|^2:
/// f(z) -> e^{-alpha |w|^2 / 2 + alpha z conj(w)} f(z - w).
EntireFunction bargmann_shift(const EntireFunction& f, double alpha, cplx w);

/// d^k (f e^{-H})(center) on a decomposed disk:
/// sum_j (-1)^j C(k,j) D^{(j)} f(center) B_{k-j}[G jet] e^{-H(center)}.
cplx weighted_feh_derivative(const EntireFunction& f, const DiskDecomposition& dec,
                             int k);

/// Squared L2 norm of f over B(center, R) against e^{-phi}.
double weighted_l2_sq(const EntireFunction& f, const WeightModel& weight,
                      cplx center, double R, DiskRuleSpec spec = {});

} // namespace fock
