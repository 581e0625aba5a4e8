#pragma once

#include "fock/quadrature.hpp"

#include <complex>
#include <memory>
#include <span>
#include <vector>

// Weight models: the subharmonic function phi with exact pointwise data.
// Derivatives follow the Wirtinger convention d = (d_x - i d_y)/2 and the
// Laplacian is normalized as Delta = d dbar = (d_x^2 + d_y^2)/4, so the
// classical weight alpha|z|^2 has Laplacian identically alpha.

namespace fock {

class WeightModel {
public:
    virtual ~WeightModel() = default;

    /// phi(z).
    virtual double value(cplx z) const = 0;

    /// k-th holomorphic derivative d^k phi(z), 1 <= k <= order().
    virtual cplx holo_deriv(cplx z, int k) const = 0;

    /// Delta phi(z) = d dbar phi(z).
    virtual double laplacian(cplx z) const = 0;

    /// Lower/upper bounds m <= Delta phi <= M.
    virtual double lap_lower() const = 0;
    virtual double lap_upper() const = 0;

    /// Highest derivative order this model supports.
    virtual int order() const = 0;

    /// (d phi(z), d^2 phi(z), ..., d^n phi(z)).
    std::vector<cplx> jet(cplx z, int n) const;
};

/// phi(z) = alpha |z|^2. Requires alpha > 0.
std::shared_ptr<const WeightModel> classical_weight(double alpha);

/// phi(z) = alpha |z|^2 + beta cos(Re z). A compatible non-invariant test
/// weight; requires |beta|/4 < alpha so the Laplacian stays positive.
std::shared_ptr<const WeightModel> perturbed_weight(double alpha, double beta);

/// The disk average phi_tilde = phi * chi_R; value, derivatives and Laplacian
/// are averaged over B(z, R) by quadrature.
std::shared_ptr<const WeightModel> mollify(std::shared_ptr<const WeightModel> base,
                                           double R, DiskRuleSpec spec = {});

/// Per-order maxima of |d^j (phi - phi_tilde)| over the grid, j = 0..n
/// (j = 0 compares values).
std::vector<double> weight_gap_check(const WeightModel& base, const WeightModel& tilde,
                                     int n, std::span<const cplx> grid);

} // namespace fock
