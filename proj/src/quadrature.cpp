#include "fock/quadrature.hpp"
#include "fock/errors.hpp"
#include "fock/kernels.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

namespace fock {

GaussLegendre gauss_legendre(int n)
{
    if (n < 1) throw validation_error("gauss_legendre: n < 1");
    // Golub-Welsch: nodes are eigenvalues of the symmetric Jacobi matrix,
    // weights come from the first eigenvector components.
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double b = k / std::sqrt(4.0 * k * k - 1.0);
        J(k, k - 1) = b;
        J(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    GaussLegendre gl;
    gl.nodes.resize(n);
    gl.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        gl.nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        gl.weights[i] = 2.0 * v0 * v0;
    }
    return gl;
}

DiskRule::DiskRule(double radius, DiskRuleSpec spec) : radius_(radius)
{
    if (radius <= 0.0) throw validation_error("DiskRule: radius must be positive");
    if (spec.n_radial < 1 || spec.n_angular < 1)
        throw validation_error("DiskRule: resolution must be positive");

    const GaussLegendre gl = gauss_legendre(spec.n_radial);
    const double dtheta = 2.0 * std::numbers::pi / spec.n_angular;
    ox_.reserve(static_cast<std::size_t>(spec.n_radial) * spec.n_angular);
    oy_.reserve(ox_.capacity());
    wts_.reserve(ox_.capacity());
    for (int i = 0; i < spec.n_radial; ++i) {
        const double r = 0.5 * radius * (gl.nodes[i] + 1.0);
        const double wr = 0.5 * radius * gl.weights[i] * r * dtheta;
        for (int j = 0; j < spec.n_angular; ++j) {
            const double th = dtheta * j;
            ox_.push_back(r * std::cos(th));
            oy_.push_back(r * std::sin(th));
            wts_.push_back(wr);
        }
    }
}

double DiskRule::integrate(cplx center, const std::function<double(cplx)>& f) const
{
    std::vector<double> vals(wts_.size());
    for (std::size_t i = 0; i < wts_.size(); ++i)
        vals[i] = f(center + cplx(ox_[i], oy_[i]));
    const double result = kernels::dot(vals.data(), wts_.data(), wts_.size());
    if (!std::isfinite(result))
        throw numeric_error("disk quadrature produced a non-finite value");
    return result;
}

void DiskRule::absolute_nodes(cplx center, std::vector<double>& xs, std::vector<double>& ys) const
{
    xs.resize(ox_.size());
    ys.resize(oy_.size());
    for (std::size_t i = 0; i < ox_.size(); ++i) {
        xs[i] = ox_[i] + center.real();
        ys[i] = oy_[i] + center.imag();
    }
}

} // namespace fock
