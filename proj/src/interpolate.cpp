#include "fock/interpolate.hpp"
#include "fock/bell.hpp"
#include "fock/errors.hpp"
#include "fock/sampling.hpp"
#include "fock/weighted_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fock {

InterpolationData::InterpolationData(std::vector<PointData> points) : pts_(std::move(points))
{
    for (const auto& p : pts_) {
        if (p.values.empty())
            throw validation_error("InterpolationData: point without values");
        if (!std::isfinite(p.lambda.real()) || !std::isfinite(p.lambda.imag()))
            throw validation_error("InterpolationData: non-finite point");
    }
    for (std::size_t i = 0; i < pts_.size(); ++i)
        for (std::size_t j = i + 1; j < pts_.size(); ++j)
            if (pts_[i].lambda == pts_[j].lambda)
                throw validation_error("InterpolationData: duplicate point");
}

std::size_t InterpolationData::constraint_count() const
{
    std::size_t n = 0;
    for (const auto& p : pts_) n += p.values.size();
    return n;
}

double InterpolationData::weighted_norm_sq(const WeightModel& weight) const
{
    double acc = 0.0;
    for (const auto& p : pts_) {
        const double w = std::exp(-weight.value(p.lambda));
        for (cplx c : p.values) acc += std::norm(c) * w;
    }
    return acc;
}

MultiSet InterpolationData::as_multiset() const
{
    std::vector<cplx> pts;
    std::vector<int> ms;
    pts.reserve(pts_.size());
    ms.reserve(pts_.size());
    for (const auto& p : pts_) {
        pts.push_back(p.lambda);
        ms.push_back(static_cast<int>(p.values.size()));
    }
    return MultiSet(std::move(pts), std::move(ms));
}

std::vector<cplx> local_coeffs_closed(std::span<const cplx> values,
                                      const DiskDecomposition& dec)
{
    const int m = static_cast<int>(values.size());
    if (dec.order() < m - 1)
        throw validation_error("local_coeffs_closed: decomposition order shortfall");

    // The jet of (phi - G_c) at the center equals the jet of G[Delta phi].
    const auto jet = dec.potential_jet(m - 1);
    std::vector<cplx> k(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        cplx acc = 0.0;
        for (int l = 0; l <= j; ++l) {
            const double sign = (l % 2 == 0) ? 1.0 : -1.0;
            acc += sign * binomial(j, l) * values[l] * complete_bell(j - l, jet);
        }
        k[j] = acc;
    }
    return k;
}

std::vector<cplx> local_coeffs_recursive(std::span<const cplx> values,
                                         const DiskDecomposition& dec)
{
    const int m = static_cast<int>(values.size());
    if (dec.order() < m - 1)
        throw validation_error("local_coeffs_recursive: decomposition order shortfall");

    auto neg_jet = dec.potential_jet(m - 1); // jet of (G_c - phi)
    for (auto& x : neg_jet) x = -x;

    std::vector<cplx> k(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        cplx acc = sign * values[j];
        for (int l = 0; l < j; ++l)
            acc -= binomial(j, l) * k[l] * complete_bell(j - l, neg_jet);
        k[j] = acc;
    }
    return k;
}

LocalInterpolant::LocalInterpolant(std::vector<cplx> k, double eps, DiskDecomposition dec)
    : k_(std::move(k)), eps_(eps), dec_(std::move(dec))
{
}

cplx LocalInterpolant::eval(cplx z) const
{
    const cplx dz = z - dec_.center();
    cplx p = 0.0;
    cplx pw = 1.0;
    for (std::size_t j = 0; j < k_.size(); ++j) {
        p += k_[j] / factorial(static_cast<int>(j)) * pw;
        pw *= dz;
    }
    const cplx g = dec_.h_value(z) - dec_.h_coeff(0);
    return p * std::exp(g);
}

double LocalInterpolant::bound_ratio(std::span<const cplx> values) const
{
    double data_mass = 0.0;
    for (cplx c : values) data_mass += std::norm(c);
    data_mass *= std::exp(-dec_.weight().value(dec_.center()));
    if (data_mass == 0.0) return 0.0;

    double worst = 0.0;
    const int nr = 8, nt = 16;
    for (int i = 0; i <= nr; ++i) {
        const double r = eps_ * i / nr;
        for (int j = 0; j < (i == 0 ? 1 : nt); ++j) {
            const double th = 2.0 * std::numbers::pi * j / nt;
            const cplx z = dec_.center() + r * cplx(std::cos(th), std::sin(th));
            const double v = std::norm(eval(z)) * std::exp(-dec_.weight().value(z));
            worst = std::max(worst, v / data_mass);
        }
    }
    return worst;
}

LocalInterpolant build_local_interpolant(std::shared_ptr<const WeightModel> weight,
                                         cplx lambda, double eps,
                                         std::span<const cplx> values,
                                         LocalBuildOptions opts)
{
    if (eps <= 0.0) throw validation_error("build_local_interpolant: eps must be positive");
    if (values.empty()) throw validation_error("build_local_interpolant: empty data");
    const int m = static_cast<int>(values.size());
    if (m - 1 > weight->order())
        throw validation_error("build_local_interpolant: weight order shortfall");

    DiskDecomposition dec = riesz_decompose(std::move(weight), lambda, 2.0 * eps, m - 1, opts.riesz);
    auto k = local_coeffs_closed(values, dec);
    return LocalInterpolant(std::move(k), eps, std::move(dec));
}

VerifyReport verify_interpolant(const LocalInterpolant& f, const WeightModel& weight,
                                std::span<const cplx> values, int trunc_order)
{
    const auto& k = f.k_coeffs();
    const int m = static_cast<int>(k.size());
    const auto& dec = f.decomposition();

    VerifyReport rep;
    rep.conclusive = trunc_order >= m - 1;
    if (!rep.conclusive) {
        // Dropped jet entries contribute through B_{j}[G jet]; report scale.
        rep.truncation_bound = std::abs(dec.h_coeff(std::min(trunc_order + 1, dec.order())));
    }

    // Jet of e^{G_c} at the center: B_i applied to (1! c_1, ..., i! c_i),
    // entries beyond trunc_order dropped.
    std::vector<cplx> g_jet(static_cast<std::size_t>(std::max(m - 1, 0)), 0.0);
    for (int i = 1; i <= m - 1; ++i)
        if (i <= trunc_order) g_jet[i - 1] = factorial(i) * dec.h_coeff(i);
    std::vector<cplx> e_jet(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) e_jet[i] = complete_bell(i, g_jet);

    // Jet of f = p e^{G_c}; p^{(i)}(center) = k_i.
    std::vector<cplx> f_jet(static_cast<std::size_t>(m), 0.0);
    for (int l = 0; l < m; ++l)
        for (int i = 0; i <= l; ++i)
            if (i < m) f_jet[l] += binomial(l, i) * k[i] * e_jet[l - i];

    rep.residuals.resize(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const cplx got = dbar_star_jet(f_jet, weight, dec.center(), j);
        const cplx want = j < static_cast<int>(values.size()) ? values[j] : cplx(0.0);
        rep.residuals[j] = std::abs(got - want);
    }
    return rep;
}

GlobalSolveReport global_interpolate_ls(const InterpolationData& data,
                                        const WeightModel& weight, int N, double R,
                                        GlobalSolveOptions opts)
{
    if (N < 0) throw validation_error("global_interpolate_ls: negative degree");
    if (R <= 0.0) throw validation_error("global_interpolate_ls: radius must be positive");

    const MultiSet set = data.as_multiset();
    const Eigen::MatrixXcd E = evaluation_matrix(set, weight, N);
    const Eigen::MatrixXcd G = gram_matrix(weight, N, R, opts.quad);

    Eigen::VectorXcd y(E.rows());
    {
        Eigen::Index row = 0;
        for (const auto& p : data.points()) {
            const double s = std::exp(-0.5 * weight.value(p.lambda));
            for (cplx c : p.values) y(row++) = s * c;
        }
    }

    GlobalSolveReport rep;
    rep.overdetermined = data.constraint_count() > static_cast<std::size_t>(N) + 1;

    const Eigen::MatrixXcd M = E.adjoint() * E + opts.ridge * G;
    Eigen::LDLT<Eigen::MatrixXcd> ldlt(M);
    Eigen::VectorXcd x;
    if (ldlt.info() == Eigen::Success) x = ldlt.solve(E.adjoint() * y);
    if (ldlt.info() != Eigen::Success || !x.allFinite()) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
        const double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
        throw numeric_error("global_interpolate_ls: singular normal equations "
                            "(eigenvalue range [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "])");
    }

    const Eigen::VectorXcd r = E * x - y;
    rep.coeffs.assign(x.data(), x.data() + x.size());
    rep.residuals.resize(static_cast<std::size_t>(r.size()));
    for (Eigen::Index i = 0; i < r.size(); ++i) {
        rep.residuals[i] = std::abs(r(i));
        rep.max_residual = std::max(rep.max_residual, rep.residuals[i]);
    }
    rep.weighted_norm_sq = std::real(x.dot(G * x));
    return rep;
}

} // namespace fock
