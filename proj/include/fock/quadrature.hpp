#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

// Disk quadrature: Gauss-Legendre in radius, uniform in angle. Spectrally
// accurate for smooth integrands; the angular rule integrates e^{ik theta}
// exactly for |k| < n_theta.

namespace fock {

using cplx = std::complex<double>;

/// Gauss-Legendre nodes/weights on [-1, 1] (Golub-Welsch).
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLegendre gauss_legendre(int n);

struct DiskRuleSpec {
    int n_radial = 64;
    int n_angular = 64;
};

/// Tensor rule for integrals over B(center, radius); offsets are relative to
/// the center, weights include the polar Jacobian.
class DiskRule {
public:
    DiskRule(double radius, DiskRuleSpec spec = {});

    double radius() const { return radius_; }
    std::size_t size() const { return wts_.size(); }
    const std::vector<double>& offset_x() const { return ox_; }
    const std::vector<double>& offset_y() const { return oy_; }
    const std::vector<double>& weights() const { return wts_; }

    /// Sum of w_i * f(center + offset_i). Throws fock::numeric_error if the
    /// result is not finite.
    double integrate(cplx center, const std::function<double(cplx)>& f) const;

    /// Node coordinates shifted to a concrete center (split re/im arrays).
    void absolute_nodes(cplx center, std::vector<double>& xs, std::vector<double>& ys) const;

private:
    double radius_;
    std::vector<double> ox_, oy_, wts_;
};

} // namespace fock
