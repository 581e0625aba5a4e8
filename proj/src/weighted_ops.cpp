#include "fock/weighted_ops.hpp"
#include "fock/bell.hpp"
#include "fock/errors.hpp"
#include "fock/kernels.hpp"

#include <cmath>

namespace fock {

cplx dbar_star_jet(std::span<const cplx> f_jet, const WeightModel& weight,
                   cplx lambda, int j)
{
    if (j < 0) throw validation_error("dbar_star: negative order");
    if (j > weight.order())
        throw validation_error("dbar_star: order exceeds weight smoothness");
    if (static_cast<int>(f_jet.size()) < j + 1)
        throw validation_error("dbar_star: jet shorter than order+1");

    // d^j(f e^{-phi}) = sum_l C(j,l) d^l f * e^{-phi} B_{j-l}[-phi jet]
    std::vector<cplx> neg_jet = weight.jet(lambda, j);
    for (auto& x : neg_jet) x = -x;

    cplx acc = 0.0;
    for (int l = 0; l <= j; ++l)
        acc += binomial(j, l) * f_jet[l] * complete_bell(j - l, neg_jet);
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    return sign * acc;
}

cplx dbar_star(const EntireFunction& f, const WeightModel& weight, cplx lambda, int j)
{
    return dbar_star_jet(f.jet(lambda, j), weight, lambda, j);
}

cplx dbar_star_change_weight(const EntireFunction& f, const WeightModel& w1,
                             const WeightModel& w2, cplx lambda, int j)
{
    if (j < 0) throw validation_error("dbar_star_change_weight: negative order");
    if (j > w1.order() || j > w2.order())
        throw validation_error("dbar_star_change_weight: order exceeds weight smoothness");

    std::vector<cplx> diff_jet(static_cast<std::size_t>(j));
    for (int i = 1; i <= j; ++i)
        diff_jet[i - 1] = w1.holo_deriv(lambda, i) - w2.holo_deriv(lambda, i);

    const auto f_jet = f.jet(lambda, j);
    cplx acc = 0.0;
    for (int l = 0; l <= j; ++l) {
        const double sign = ((j - l) % 2 == 0) ? 1.0 : -1.0;
        acc += binomial(j, l) * sign * dbar_star_jet(f_jet, w1, lambda, l) *
               complete_bell(j - l, diff_jet);
    }
    return acc;
}

EntireFunction bargmann_shift(const EntireFunction& f, double alpha, cplx w)
{
    if (alpha <= 0.0) throw validation_error("bargmann_shift: alpha must be positive");
    if (f.is_zero()) return {};

    // p(z - w): rebase the polynomial with the binomial theorem.
    const auto& c = f.coeffs();
    std::vector<cplx> shifted(c.size(), 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
        cplx pw = 1.0;
        for (std::size_t i = 0; i <= k; ++i) {
            // coefficient of z^{k-i}: C(k,i) (-w)^i c_k
            shifted[k - i] += binomial(static_cast<int>(k), static_cast<int>(i)) * pw * c[k];
            pw *= -w;
        }
    }
    const cplx a = f.exp_a() - f.exp_b() * w - 0.5 * alpha * std::norm(w);
    const cplx b = f.exp_b() + alpha * std::conj(w);
    return EntireFunction(std::move(shifted), a, b);
}

cplx weighted_feh_derivative(const EntireFunction& f, const DiskDecomposition& dec, int k)
{
    if (k < 0) throw validation_error("weighted_feh_derivative: negative order");
    if (k > dec.order())
        throw validation_error("weighted_feh_derivative: order beyond decomposition");

    const cplx lambda = dec.center();
    const auto g_jet = dec.potential_jet(k);
    const auto f_jet = f.jet(lambda, k);
    const cplx e_mh = std::exp(-dec.h_coeff(0)); // e^{-H(center)}

    cplx acc = 0.0;
    for (int j = 0; j <= k; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        acc += sign * binomial(k, j) * dbar_star_jet(f_jet, dec.weight(), lambda, j) *
               complete_bell(k - j, g_jet);
    }
    return acc * e_mh;
}

double weighted_l2_sq(const EntireFunction& f, const WeightModel& weight,
                      cplx center, double R, DiskRuleSpec spec)
{
    DiskRule rule(R, spec);
    std::vector<double> xs, ys;
    rule.absolute_nodes(center, xs, ys);
    std::vector<cplx> values;
    f.eval_many(xs, ys, values);

    std::vector<double> integrand(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        integrand[i] = std::norm(values[i]) * std::exp(-weight.value(cplx(xs[i], ys[i])));
    const double result = kernels::dot(integrand.data(), rule.weights().data(), integrand.size());
    if (!std::isfinite(result)) throw numeric_error("weighted_l2_sq: non-finite quadrature");
    return result;
}

} // namespace fock
