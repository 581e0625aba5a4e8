#pragma once

#include "fock/entire.hpp"
#include "fock/geometry.hpp"
#include "fock/potential.hpp"

#include <vector>

// Constructive local interpolation: f_c(z) = p_c(z) e^{G_c(z)} with
// p_c(z) = sum_j (k_j / j!) (z - c)^j matches prescribed weighted-derivative
// values D^{(j)} f_c(c) = c_j. The coefficients come either from the closed
// form or from the forward recursion; the two are algebraically equivalent
// and serve as mutual cross-checks. A finite-dimensional least-squares solver
// over polynomials stands in for global interpolation.

namespace fock {

/// Prescribed data: values[j] targets D^{(j)} f(lambda) for j < values.size().
struct PointData {
    cplx lambda;
    std::vector<cplx> values;
};

class InterpolationData {
public:
    InterpolationData() = default;
    explicit InterpolationData(std::vector<PointData> points);

    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const PointData& operator[](std::size_t i) const { return pts_[i]; }
    const std::vector<PointData>& points() const { return pts_; }

    std::size_t constraint_count() const;

    /// sum over (lambda, j) of |c|^2 e^{-phi(lambda)}.
    double weighted_norm_sq(const WeightModel& weight) const;

    /// The underlying multiplicity set (m = number of values per point).
    MultiSet as_multiset() const;

private:
    std::vector<PointData> pts_;
};

/// Closed form: k_j = sum_{l<=j} (-1)^l C(j,l) c_l B_{j-l}[(phi - G_c) jet].
std::vector<cplx> local_coeffs_closed(std::span<const cplx> values,
                                      const DiskDecomposition& dec);

/// Recursion: k_j = (-1)^j c_j - sum_{l<j} C(j,l) k_l B_{j-l}[(G_c - phi) jet].
/// Independent route to the same coefficients.
std::vector<cplx> local_coeffs_recursive(std::span<const cplx> values,
                                         const DiskDecomposition& dec);

class LocalInterpolant {
public:
    LocalInterpolant(std::vector<cplx> k, double eps, DiskDecomposition dec);

    cplx center() const { return dec_.center(); }
    double eps() const { return eps_; }
    const std::vector<cplx>& k_coeffs() const { return k_; }
    const DiskDecomposition& decomposition() const { return dec_; }

    /// p_c(z) e^{G_c(z)}; meaningful for |z - center| <= eps.
    cplx eval(cplx z) const;

    /// max over a polar grid in B(center, eps) of
    /// |f(z)|^2 e^{-phi(z)} / (sum_l |c_l|^2 e^{-phi(center)}).
    double bound_ratio(std::span<const cplx> values) const;

private:
    std::vector<cplx> k_;
    double eps_;
    DiskDecomposition dec_;
};

struct LocalBuildOptions {
    RieszOptions riesz = {};
};

/// Construct the local interpolant for the given targets. The Riesz
/// decomposition is taken on B(lambda, 2 eps) so the series for G_c is solid
/// on the closed eps-disk.
LocalInterpolant build_local_interpolant(std::shared_ptr<const WeightModel> weight,
                                         cplx lambda, double eps,
                                         std::span<const cplx> values,
                                         LocalBuildOptions opts = {});

struct VerifyReport {
    std::vector<double> residuals; ///< |D^{(j)} f(center) - c_j| per j
    double truncation_bound = 0.0;
    bool conclusive = true;
};

/// Check the defining equations by evaluating the interpolant through the
/// weighted-derivative machinery. The exponential factor enters through its
/// Taylor jet truncated at trunc_order; with trunc_order >= m-1 the jet at
/// the center is exact and the truncation bound is zero.
VerifyReport verify_interpolant(const LocalInterpolant& f, const WeightModel& weight,
                                std::span<const cplx> values, int trunc_order = 20);

struct GlobalSolveReport {
    std::vector<cplx> coeffs;       ///< polynomial coefficients, degree <= N
    std::vector<double> residuals;  ///< weighted residual per constraint
    double weighted_norm_sq = 0.0;  ///< ||p||^2 against e^{-phi} on B(0, R)
    bool overdetermined = false;    ///< more constraints than dimensions
    double max_residual = 0.0;

    EntireFunction polynomial() const { return EntireFunction::polynomial(coeffs); }
};

struct GlobalSolveOptions {
    double ridge = 1e-10;
    DiskRuleSpec quad = {};
};

/// Least-squares interpolation over polynomials of degree <= N:
/// minimize sum |D^{(j)} p(lambda) - c|^2 e^{-phi(lambda)} + ridge ||p||^2.
GlobalSolveReport global_interpolate_ls(const InterpolationData& data,
                                        const WeightModel& weight, int N, double R,
                                        GlobalSolveOptions opts = {});

} // namespace fock
