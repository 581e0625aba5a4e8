#include "fock/potential.hpp"
#include "fock/bell.hpp"
#include "fock/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace fock {

namespace {
constexpr double kTwoOverPi = 2.0 / std::numbers::pi;
}

double uniform_disk_log_integral(cplx z, cplx center, double radius)
{
    const double d = std::abs(z - center);
    const double R = radius;
    if (d >= R) return std::numbers::pi * R * R * std::log(d);
    return std::numbers::pi * (R * R * std::log(R) - 0.5 * R * R + 0.5 * d * d);
}

PotentialField::PotentialField(std::shared_ptr<const WeightModel> weight, cplx center,
                               double radius, DiskRuleSpec spec)
    : weight_(std::move(weight)), center_(center), radius_(radius), rule_(radius, spec)
{
    if (!weight_) throw validation_error("PotentialField: null weight");
    rule_.absolute_nodes(center_, node_x_, node_y_);
}

double PotentialField::operator()(cplx z) const
{
    if (std::abs(z - center_) > radius_ * (1.0 + 1e-12))
        throw validation_error("log_potential: point outside the disk");

    const double lap_z = weight_->laplacian(z);
    double acc = 0.0;
    const auto& w = rule_.weights();
    for (std::size_t i = 0; i < w.size(); ++i) {
        const cplx node(node_x_[i], node_y_[i]);
        const double diff = weight_->laplacian(node) - lap_z;
        if (diff == 0.0) continue;
        const double d2 = std::norm(node - z);
        if (d2 < 1e-28) continue; // integrand -> 0 at the singular node
        acc += w[i] * 0.5 * std::log(d2) * diff;
    }
    const double value = kTwoOverPi * (lap_z * uniform_disk_log_integral(z, center_, radius_) + acc);
    if (!std::isfinite(value))
        throw numeric_error("log_potential: non-finite quadrature value");
    return value;
}

double log_potential(std::shared_ptr<const WeightModel> weight, cplx center,
                     double radius, cplx z, DiskRuleSpec spec)
{
    if (radius <= 0.0) throw validation_error("log_potential: radius must be positive");
    return PotentialField(std::move(weight), center, radius, spec)(z);
}

DiskDecomposition::DiskDecomposition(std::shared_ptr<const WeightModel> w, cplx center,
                                     double radius, int order, PotentialField field)
    : weight_(std::move(w)), center_(center), radius_(radius), order_(order),
      field_(std::move(field))
{
}

cplx DiskDecomposition::h_coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        throw validation_error("h_coeff: index out of range");
    return coeffs_[k];
}

cplx DiskDecomposition::h_value(cplx z) const
{
    const cplx dz = z - center_;
    cplx acc = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * dz + coeffs_[k];
    return acc;
}

cplx DiskDecomposition::g_lambda_deriv(int k) const
{
    if (k < 0 || k > order_)
        throw validation_error("g_lambda_deriv: order beyond decomposition");
    if (k == 0) return 0.0; // G_c(center) = 0 by construction
    return factorial(k) * coeffs_[static_cast<std::size_t>(k)];
}

std::vector<cplx> DiskDecomposition::potential_jet(int n) const
{
    if (n > order_) throw validation_error("potential_jet: order beyond decomposition");
    std::vector<cplx> jet(static_cast<std::size_t>(std::max(n, 0)));
    for (int k = 1; k <= n; ++k)
        jet[k - 1] = phi_jet_[k - 1] - factorial(k) * coeffs_[static_cast<std::size_t>(k)];
    return jet;
}

double DiskDecomposition::harmonic(cplx z) const
{
    return weight_->value(z) - field_(z);
}

DiskDecomposition riesz_decompose(std::shared_ptr<const WeightModel> weight,
                                  cplx center, double radius, int order,
                                  RieszOptions opts)
{
    if (radius <= 0.0) throw validation_error("riesz_decompose: radius must be positive");
    if (!weight) throw validation_error("riesz_decompose: null weight");
    if (order < 0 || order > weight->order())
        throw validation_error("riesz_decompose: order exceeds weight smoothness");

    const int n_keep = std::min(opts.n_coeffs, opts.n_circle / 2 - 2);
    if (order > n_keep)
        throw validation_error("riesz_decompose: order exceeds retained coefficients");

    PotentialField field(weight, center, radius, opts.quad);

    // Sample h = phi - G on the circle of half the disk radius and extract
    // Fourier coefficients; 2 Re H matches h with c_n = hat(h)_n / rho^n.
    const double rho = 0.5 * radius;
    const int nt = opts.n_circle;
    std::vector<double> h(static_cast<std::size_t>(nt));
    std::vector<cplx> ring(static_cast<std::size_t>(nt));
    for (int j = 0; j < nt; ++j) {
        const double th = 2.0 * std::numbers::pi * j / nt;
        ring[j] = center + rho * cplx(std::cos(th), std::sin(th));
        h[j] = weight->value(ring[j]) - field(ring[j]);
    }

    std::vector<cplx> coeffs(static_cast<std::size_t>(n_keep) + 1);
    for (int n = 0; n <= n_keep; ++n) {
        cplx acc = 0.0;
        for (int j = 0; j < nt; ++j) {
            const double th = 2.0 * std::numbers::pi * j * n / nt;
            acc += h[j] * cplx(std::cos(th), -std::sin(th));
        }
        acc /= static_cast<double>(nt);
        coeffs[n] = (n == 0) ? cplx(0.5 * acc.real(), 0.0) // gauge Im H(center) = 0
                             : acc / std::pow(rho, n);
    }

    double residual = 0.0;
    for (int j = 0; j < nt; ++j) {
        cplx H = 0.0;
        const cplx dz = ring[j] - center;
        for (std::size_t k = coeffs.size(); k-- > 0;) H = H * dz + coeffs[k];
        residual = std::max(residual, std::abs(2.0 * H.real() - h[j]));
    }
    if (residual > opts.residual_tol)
        throw numeric_error("riesz_decompose: harmonic part failed the conjugate "
                            "reconstruction (residual " + std::to_string(residual) +
                            "); increase quadrature resolution");

    DiskDecomposition dec(weight, center, radius, order, std::move(field));
    dec.coeffs_ = std::move(coeffs);
    dec.phi_jet_ = weight->jet(center, order);
    dec.g_center_ = dec.field_(center);
    dec.residual_ = residual;
    return dec;
}

PotentialBoundReport potential_bound_report(std::shared_ptr<const WeightModel> weight,
                                            std::span<const std::pair<cplx, double>> probes,
                                            int n, double growth_limit, RieszOptions opts)
{
    if (probes.empty()) throw validation_error("potential_bound_report: no probes");

    PotentialBoundReport rep;
    rep.max_abs.assign(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<double> min_abs(static_cast<std::size_t>(n) + 1,
                                std::numeric_limits<double>::infinity());

    for (const auto& [lambda, eps] : probes) {
        const DiskDecomposition dec = riesz_decompose(weight, lambda, eps, n, opts);
        std::vector<double> values(static_cast<std::size_t>(n) + 1);
        values[0] = std::abs(dec.potential_at_center());
        const auto jet = dec.potential_jet(n);
        for (int k = 1; k <= n; ++k) values[k] = std::abs(jet[k - 1]);
        for (int k = 0; k <= n; ++k) {
            if (!std::isfinite(values[k])) rep.flagged = true;
            rep.max_abs[k] = std::max(rep.max_abs[k], values[k]);
            min_abs[k] = std::min(min_abs[k], values[k]);
        }
    }
    rep.spread.resize(rep.max_abs.size());
    for (std::size_t k = 0; k < rep.max_abs.size(); ++k) {
        rep.spread[k] = rep.max_abs[k] / std::max(min_abs[k], 1e-300);
        if (min_abs[k] > 1e-12 && rep.spread[k] > growth_limit) rep.flagged = true;
    }
    return rep;
}

} // namespace fock
