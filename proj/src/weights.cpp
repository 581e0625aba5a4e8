#include "fock/weights.hpp"
#include "fock/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fock {

std::vector<cplx> WeightModel::jet(cplx z, int n) const
{
    std::vector<cplx> out(static_cast<std::size_t>(std::max(n, 0)));
    for (int k = 1; k <= n; ++k) out[k - 1] = holo_deriv(z, k);
    return out;
}

namespace {

// Orders are unbounded for the closed-form weights; 64 is far beyond any
// multiplicity this library meets and keeps order() a plain int.
constexpr int kClosedFormOrder = 64;

class ClassicalWeight final : public WeightModel {
public:
    explicit ClassicalWeight(double alpha) : alpha_(alpha)
    {
        if (alpha <= 0.0) throw validation_error("classical_weight: alpha must be positive");
    }

    double value(cplx z) const override { return alpha_ * std::norm(z); }

    cplx holo_deriv(cplx z, int k) const override
    {
        if (k < 1) throw validation_error("holo_deriv: k must be >= 1");
        return k == 1 ? alpha_ * std::conj(z) : cplx(0.0);
    }

    double laplacian(cplx) const override { return alpha_; }
    double lap_lower() const override { return alpha_; }
    double lap_upper() const override { return alpha_; }
    int order() const override { return kClosedFormOrder; }

private:
    double alpha_;
};

// alpha |z|^2 + beta cos(u) with u = Re z = (z + conj z)/2. The holomorphic
// derivatives act on the first slot only: d^k [beta cos(u)] = beta 2^{-k}
// cos^{(k)}(u), and d dbar [beta cos(u)] = -(beta/4) cos(u).
class PerturbedWeight final : public WeightModel {
public:
    PerturbedWeight(double alpha, double beta) : alpha_(alpha), beta_(beta)
    {
        if (alpha <= 0.0) throw validation_error("perturbed_weight: alpha must be positive");
        if (std::abs(beta) / 4.0 >= alpha)
            throw validation_error("perturbed_weight: need |beta|/4 < alpha");
    }

    double value(cplx z) const override
    {
        return alpha_ * std::norm(z) + beta_ * std::cos(z.real());
    }

    cplx holo_deriv(cplx z, int k) const override
    {
        if (k < 1) throw validation_error("holo_deriv: k must be >= 1");
        const double u = z.real();
        const double scale = beta_ * std::pow(0.5, k);
        double trig = 0.0;
        switch (k % 4) {
            case 0: trig = std::cos(u); break;
            case 1: trig = -std::sin(u); break;
            case 2: trig = -std::cos(u); break;
            case 3: trig = std::sin(u); break;
        }
        cplx d = scale * trig;
        if (k == 1) d += alpha_ * std::conj(z);
        return d;
    }

    double laplacian(cplx z) const override
    {
        return alpha_ - 0.25 * beta_ * std::cos(z.real());
    }

    double lap_lower() const override { return alpha_ - std::abs(beta_) / 4.0; }
    double lap_upper() const override { return alpha_ + std::abs(beta_) / 4.0; }
    int order() const override { return kClosedFormOrder; }

private:
    double alpha_, beta_;
};

class MollifiedWeight final : public WeightModel {
public:
    MollifiedWeight(std::shared_ptr<const WeightModel> base, double R, DiskRuleSpec spec)
        : base_(std::move(base)), radius_(R), rule_(R, spec),
          inv_area_(1.0 / (std::numbers::pi * R * R))
    {
        if (!base_) throw validation_error("mollify: null base weight");
    }

    double value(cplx z) const override
    {
        return inv_area_ * rule_.integrate(z, [&](cplx w) { return base_->value(w); });
    }

    cplx holo_deriv(cplx z, int k) const override
    {
        if (k < 1 || k > order()) throw validation_error("holo_deriv: order out of range");
        const double re = inv_area_ *
            rule_.integrate(z, [&](cplx w) { return base_->holo_deriv(w, k).real(); });
        const double im = inv_area_ *
            rule_.integrate(z, [&](cplx w) { return base_->holo_deriv(w, k).imag(); });
        return {re, im};
    }

    double laplacian(cplx z) const override
    {
        return inv_area_ * rule_.integrate(z, [&](cplx w) { return base_->laplacian(w); });
    }

    double lap_lower() const override { return base_->lap_lower(); }
    double lap_upper() const override { return base_->lap_upper(); }
    int order() const override { return base_->order(); }

private:
    std::shared_ptr<const WeightModel> base_;
    double radius_;
    DiskRule rule_;
    double inv_area_;
};

} // namespace

std::shared_ptr<const WeightModel> classical_weight(double alpha)
{
    return std::make_shared<ClassicalWeight>(alpha);
}

std::shared_ptr<const WeightModel> perturbed_weight(double alpha, double beta)
{
    return std::make_shared<PerturbedWeight>(alpha, beta);
}

std::shared_ptr<const WeightModel> mollify(std::shared_ptr<const WeightModel> base,
                                           double R, DiskRuleSpec spec)
{
    if (R <= 0.0) throw validation_error("mollify: radius must be positive");
    return std::make_shared<MollifiedWeight>(std::move(base), R, spec);
}

std::vector<double> weight_gap_check(const WeightModel& base, const WeightModel& tilde,
                                     int n, std::span<const cplx> grid)
{
    if (n > std::min(base.order(), tilde.order()))
        throw validation_error("weight_gap_check: order exceeds weight smoothness");
    std::vector<double> maxima(static_cast<std::size_t>(n) + 1, 0.0);
    for (cplx z : grid) {
        maxima[0] = std::max(maxima[0], std::abs(base.value(z) - tilde.value(z)));
        for (int j = 1; j <= n; ++j)
            maxima[j] = std::max(maxima[j],
                                 std::abs(base.holo_deriv(z, j) - tilde.holo_deriv(z, j)));
    }
    return maxima;
}

} // namespace fock
