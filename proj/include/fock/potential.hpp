#pragma once

#include "fock/weights.hpp"

#include <memory>
#include <vector>

// Riesz decomposition on disks: phi = h + G[Delta phi], where
//   G[Delta phi](z) = (2/pi) * integral over the disk of log|w-z| Delta phi(w)
// and h is harmonic. The harmonic part is written h = 2 Re H with H
// holomorphic, fixed by the gauge Im H(center) = 0, and the library works
// with G_c = H - H(center), which vanishes at the center.

namespace fock {

/// The logarithmic potential of Delta phi on a fixed disk. The log kernel is
/// handled by constant subtraction: the uniform-disk part has a closed form
/// and the remainder integrand log|w-z| (Delta phi(w) - Delta phi(z)) is
/// bounded.
class PotentialField {
public:
    PotentialField(std::shared_ptr<const WeightModel> weight, cplx center,
                   double radius, DiskRuleSpec spec = {});

    /// G[Delta phi](z); z must lie in the closed disk.
    double operator()(cplx z) const;

    cplx center() const { return center_; }
    double radius() const { return radius_; }

private:
    std::shared_ptr<const WeightModel> weight_;
    cplx center_;
    double radius_;
    DiskRule rule_;
    std::vector<double> node_x_, node_y_;
};

/// Integral of log|w-z| over B(center, radius) with unit density, in closed
/// form (valid for z anywhere in the plane).
double uniform_disk_log_integral(cplx z, cplx center, double radius);

/// Convenience wrapper: G[Delta phi](z) for a one-off evaluation.
double log_potential(std::shared_ptr<const WeightModel> weight, cplx center,
                     double radius, cplx z, DiskRuleSpec spec = {});

struct RieszOptions {
    DiskRuleSpec quad = {};
    int n_circle = 128;          ///< samples of h on the extraction circle
    int n_coeffs = 48;           ///< Taylor coefficients of H retained
    double residual_tol = 1e-5;  ///< max |2 Re H - h| allowed on the circle
};

class DiskDecomposition {
public:
    cplx center() const { return center_; }
    double radius() const { return radius_; }
    int order() const { return order_; }

    /// Taylor coefficient c_k of H about the center (c_0 is real by gauge).
    cplx h_coeff(int k) const;
    /// H(z) from the retained series; reliable for |z - center| < radius/2.
    cplx h_value(cplx z) const;

    /// d^k G_c(center) = k! c_k for k >= 1; 0 for k = 0.
    cplx g_lambda_deriv(int k) const;

    /// (d G[Delta phi](center), ..., d^n G[Delta phi](center)), via
    /// d^k G[Delta phi] = d^k phi - d^k G_c.
    std::vector<cplx> potential_jet(int n) const;

    /// G[Delta phi](z) by quadrature.
    double potential(cplx z) const { return field_(z); }
    /// h(z) = phi(z) - G[Delta phi](z).
    double harmonic(cplx z) const;

    double potential_at_center() const { return g_center_; }
    /// Max |2 Re H - h| on the extraction circle (truncation + quadrature).
    double fourier_residual() const { return residual_; }

    const WeightModel& weight() const { return *weight_; }
    std::shared_ptr<const WeightModel> weight_ptr() const { return weight_; }

    friend DiskDecomposition riesz_decompose(std::shared_ptr<const WeightModel>,
                                             cplx, double, int, RieszOptions);

private:
    DiskDecomposition(std::shared_ptr<const WeightModel> w, cplx center, double radius,
                      int order, PotentialField field);

    std::shared_ptr<const WeightModel> weight_;
    cplx center_;
    double radius_;
    int order_;
    PotentialField field_;
    std::vector<cplx> coeffs_;
    std::vector<cplx> phi_jet_;
    double g_center_ = 0.0;
    double residual_ = 0.0;
};

/// Decompose phi on B(center, radius); h is sampled on the circle of half
/// the disk radius and its Fourier coefficients give H. Throws
/// fock::numeric_error when the residual exceeds RieszOptions::residual_tol
/// (the harmonic part failed to be harmonic, i.e. quadrature is
/// under-resolved).
DiskDecomposition riesz_decompose(std::shared_ptr<const WeightModel> weight,
                                  cplx center, double radius, int order,
                                  RieszOptions opts = {});

struct PotentialBoundReport {
    std::vector<double> max_abs;    ///< per derivative order 0..n
    std::vector<double> spread;     ///< max/min ratio across probes per order
    bool flagged = false;           ///< non-finite value or spread beyond limit
};

/// Empirical bounds |d^k G[Delta phi]| at the probe centers, each probe using
/// its own disk radius.
PotentialBoundReport potential_bound_report(std::shared_ptr<const WeightModel> weight,
                                            std::span<const std::pair<cplx, double>> probes,
                                            int n, double growth_limit = 1e6,
                                            RieszOptions opts = {});

} // namespace fock
