#pragma once

#include "fock/entire.hpp"
#include "fock/geometry.hpp"
#include "fock/interpolate.hpp"
#include "fock/potential.hpp"

#include <cstdint>
#include <utility>
#include <vector>

// Multiplicity reduction: every point carrying the top multiplicity n+1
// spawns a satellite at distance eps and drops to multiplicity n; the
// satellite carries a plain function value. The top-order derivative datum is
// recovered from the satellite value through the b coefficient, which solves
// a divided-difference equation for d^n(f e^{-H}) at the point.

namespace fock {

enum class DirectionRule {
    fixed_east, ///< satellite at lambda + eps
    radial,     ///< satellite away from the origin (east at the origin)
    seeded      ///< uniformly random direction from a seeded generator
};

struct ReductionPlan {
    MultiSet original;
    MultiSet reduced;
    double epsilon = 0.0;
    int n_top = 0; ///< multiplicity order replaced (sup m - 1)
    /// (index into original, satellite location) per top-multiplicity point.
    std::vector<std::pair<std::size_t, cplx>> pairs;
};

/// Build the reduced set. Requires sup m >= 2 and
/// 0 < eps < min(separation/2, 1/4). Total multiplicity mass is conserved
/// exactly and the reduced set stays separated.
ReductionPlan reduce_set(const MultiSet& set, double eps,
                         DirectionRule rule = DirectionRule::fixed_east,
                         std::uint64_t seed = 0);

/// The unique b solving the divided-difference equation for the data
/// (a_center[j] = D^{(j)} f(lambda), j < n; a_sat = f(lambda')), with
/// n = a_center.size(). The decomposition must be centered at lambda with
/// order >= n and lambda' inside its coefficient-series range.
cplx b_lambda(std::span<const cplx> a_center, cplx a_sat, cplx lambda_prime,
              const DiskDecomposition& dec);

struct LiftReport {
    InterpolationData lifted;  ///< data on the original set
    double norm_ratio = 0.0;   ///< ||a|| / ||a_tilde|| in the weighted norms
    double bound_const = 0.0;  ///< norm_ratio * eps^{n_top}
};

/// Transfer data on the reduced set to data on the original set: top-order
/// slots are filled by b_lambda, everything else is copied.
LiftReport lift_sequence(const ReductionPlan& plan, const InterpolationData& tilde,
                         std::shared_ptr<const WeightModel> weight,
                         RieszOptions opts = {});

struct TaylorResidualReport {
    double residual = 0.0;   ///< |F(lambda') - degree-n Taylor value|
    double bound_rhs = 0.0;  ///< eps^{n+1} * integral of |F| over B(lambda, 1)
};

/// Taylor remainder of F = f e^{-H} at the satellite: the degree-n Taylor
/// value is assembled from the weighted-derivative identity for
/// d^k (f e^{-H}). The decomposition should cover B(center, 1) with margin
/// (radius 2 recommended) so the H series is reliable there.
TaylorResidualReport taylor_residual(const EntireFunction& f, const DiskDecomposition& dec,
                                     cplx lambda_prime, int n, DiskRuleSpec spec = {});

struct PerturbationReport {
    double lhs = 0.0;         ///< |D^{(n)} f(lambda)|^2 e^{-phi(lambda)}
    double sample_term = 0.0; ///< |f(lambda')|^2 e^{-phi(lambda')} + lower orders
    double eps_term = 0.0;    ///< eps * ||f||^2 on B(lambda, 1)
    double c_emp = 0.0;       ///< smallest C with lhs <= C*sample_term + eps_term
};

/// Both sides of the perturbation inequality bounding the top weighted
/// derivative by the satellite value, the lower-order derivatives and an
/// eps-small norm term.
PerturbationReport perturbation_inequality_check(const EntireFunction& f,
                                                 const WeightModel& weight,
                                                 cplx lambda, cplx lambda_prime,
                                                 double eps, int n,
                                                 DiskRuleSpec spec = {});

struct CorrectionReport {
    double data_norm = 0.0;      ///< ||a_tilde|| on the reduced set
    double residual_norm = 0.0;  ///< satellite residual norm after one round
    double factor = 0.0;         ///< residual_norm / data_norm
    GlobalSolveReport solve;
};

/// One corrective round of the lift-and-interpolate iteration: lift the data,
/// solve least squares on the original set, and measure the satellite
/// residual norm (the next iterate's data norm).
CorrectionReport correction_round(const ReductionPlan& plan, const InterpolationData& tilde,
                                  std::shared_ptr<const WeightModel> weight,
                                  int N, double R, GlobalSolveOptions opts = {});

} // namespace fock
