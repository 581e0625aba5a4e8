#include "fock/reduction.hpp"
#include "fock/bell.hpp"
#include "fock/errors.hpp"
#include "fock/weighted_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <unordered_map>

namespace fock {

ReductionPlan reduce_set(const MultiSet& set, double eps, DirectionRule rule,
                         std::uint64_t seed)
{
    if (set.empty()) throw validation_error("reduce_set: empty set");
    if (set.n_max() < 2)
        throw validation_error("reduce_set: no point has multiplicity >= 2 (nothing to reduce)");
    const double rho = separation(set);
    const double cap = std::min(rho / 2.0, 0.25);
    if (!(eps > 0.0 && eps < cap))
        throw validation_error("reduce_set: eps must lie in (0, min(separation/2, 1/4))");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    auto direction = [&](cplx lambda) -> cplx {
        switch (rule) {
            case DirectionRule::fixed_east: return {1.0, 0.0};
            case DirectionRule::radial:
                return std::abs(lambda) > 0.0 ? lambda / std::abs(lambda) : cplx(1.0, 0.0);
            case DirectionRule::seeded: {
                const double th = angle(rng);
                return {std::cos(th), std::sin(th)};
            }
        }
        return {1.0, 0.0};
    };

    ReductionPlan plan;
    plan.original = set;
    plan.epsilon = eps;
    plan.n_top = set.n_max() - 1;

    std::vector<cplx> pts(set.points());
    std::vector<int> mults(set.mults());
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (set.mult(i) != set.n_max()) continue;
        mults[i] -= 1;
        const cplx sat = set.point(i) + eps * direction(set.point(i));
        plan.pairs.emplace_back(i, sat);
        pts.push_back(sat);
        mults.push_back(1);
    }
    plan.reduced = MultiSet(std::move(pts), std::move(mults));

    if (plan.reduced.total_mass() != set.total_mass())
        throw numeric_error("reduce_set: multiplicity mass not conserved");
    if (!(separation(plan.reduced) > 0.0))
        throw numeric_error("reduce_set: reduced set is not separated");
    return plan;
}

cplx b_lambda(std::span<const cplx> a_center, cplx a_sat, cplx lambda_prime,
              const DiskDecomposition& dec)
{
    const int n = static_cast<int>(a_center.size());
    if (n < 1) throw validation_error("b_lambda: need at least one lower-order value");
    if (dec.order() < n) throw validation_error("b_lambda: decomposition order shortfall");

    const cplx lambda = dec.center();
    const cplx dz = lambda_prime - lambda;
    const cplx e_mh = std::exp(-dec.h_coeff(0));          // e^{-H(lambda)}
    const cplx e_mh_sat = std::exp(-dec.h_value(lambda_prime));

    const auto g_jet = dec.potential_jet(n);
    std::vector<cplx> bell(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) bell[i] = complete_bell(i, g_jet);

    // Divided-difference block: a_sat e^{-H(l')} minus the degree-(n-1)
    // Taylor part of f e^{-H}, whose derivatives expand through the data.
    cplx taylor = 0.0;
    cplx pw = 1.0;
    for (int k = 0; k < n; ++k) {
        cplx dk = 0.0;
        for (int j = 0; j <= k; ++j) {
            const double sign = (j % 2 == 0) ? 1.0 : -1.0;
            dk += sign * binomial(k, j) / factorial(k) * a_center[j] * bell[k - j];
        }
        taylor += dk * e_mh * pw;
        pw *= dz;
    }
    const cplx lead = factorial(n) / std::pow(dz, n) * (a_sat * e_mh_sat - taylor);

    cplx low = 0.0;
    for (int j = 0; j < n; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        low += sign * binomial(n, j) * a_center[j] * bell[n - j] * e_mh;
    }

    const double sign_n = (n % 2 == 0) ? 1.0 : -1.0;
    return sign_n * (lead - low) / e_mh;
}

LiftReport lift_sequence(const ReductionPlan& plan, const InterpolationData& tilde,
                         std::shared_ptr<const WeightModel> weight, RieszOptions opts)
{
    const MultiSet& orig = plan.original;
    const int n = plan.n_top;

    // Index the reduced-set data by location (points are exact copies, so
    // equality lookup is safe).
    struct CplxHash {
        std::size_t operator()(const cplx& z) const
        {
            std::hash<double> h;
            return h(z.real()) ^ (h(z.imag()) << 1);
        }
    };
    std::unordered_map<cplx, const PointData*, CplxHash> index;
    for (const auto& p : tilde.points()) index[p.lambda] = &p;
    auto find_data = [&](cplx z) -> const PointData* {
        auto it = index.find(z);
        return it == index.end() ? nullptr : it->second;
    };

    std::unordered_map<std::size_t, cplx> satellites;
    for (const auto& [idx, sat] : plan.pairs) satellites[idx] = sat;

    std::vector<PointData> lifted;
    lifted.reserve(orig.size());
    for (std::size_t i = 0; i < orig.size(); ++i) {
        const PointData* src = find_data(orig.point(i));
        const bool is_top = satellites.count(i) > 0;
        const int m_here = orig.mult(i);
        const int m_tilde = is_top ? m_here - 1 : m_here;

        PointData out;
        out.lambda = orig.point(i);
        out.values.assign(static_cast<std::size_t>(m_here), cplx(0.0));
        if (src) {
            if (static_cast<int>(src->values.size()) != m_tilde)
                throw validation_error("lift_sequence: data multiplicity mismatch at a point");
            std::copy(src->values.begin(), src->values.end(), out.values.begin());
        }

        if (is_top) {
            const cplx sat = satellites[i];
            const PointData* sat_data = find_data(sat);
            if (sat_data && sat_data->values.size() != 1)
                throw validation_error("lift_sequence: satellite carries more than one value");
            const cplx a_sat = sat_data ? sat_data->values[0] : cplx(0.0);
            const auto dec = riesz_decompose(weight, orig.point(i), 1.0, n, opts);
            out.values[static_cast<std::size_t>(n)] =
                b_lambda(std::span<const cplx>(out.values.data(), static_cast<std::size_t>(n)),
                         a_sat, sat, dec);
        }
        lifted.push_back(std::move(out));
    }

    LiftReport rep;
    rep.lifted = InterpolationData(std::move(lifted));
    const double tilde_norm = std::sqrt(tilde.weighted_norm_sq(*weight));
    const double lift_norm = std::sqrt(rep.lifted.weighted_norm_sq(*weight));
    rep.norm_ratio = tilde_norm > 0.0 ? lift_norm / tilde_norm : 0.0;
    rep.bound_const = rep.norm_ratio * std::pow(plan.epsilon, n);
    return rep;
}

TaylorResidualReport taylor_residual(const EntireFunction& f, const DiskDecomposition& dec,
                                     cplx lambda_prime, int n, DiskRuleSpec spec)
{
    const cplx lambda = dec.center();
    const double eps = std::abs(lambda_prime - lambda);
    if (!(eps > 0.0)) throw validation_error("taylor_residual: coincident points");

    const cplx direct = f.eval(lambda_prime) * std::exp(-dec.h_value(lambda_prime));
    cplx taylor = 0.0;
    cplx pw = 1.0;
    for (int k = 0; k <= n; ++k) {
        taylor += weighted_feh_derivative(f, dec, k) / factorial(k) * pw;
        pw *= (lambda_prime - lambda);
    }

    TaylorResidualReport rep;
    rep.residual = std::abs(direct - taylor);

    DiskRule rule(1.0, spec);
    const double int_abs_f = rule.integrate(lambda, [&](cplx z) {
        return std::abs(f.eval(z) * std::exp(-dec.h_value(z)));
    });
    rep.bound_rhs = std::pow(eps, n + 1) * int_abs_f;
    return rep;
}

PerturbationReport perturbation_inequality_check(const EntireFunction& f,
                                                 const WeightModel& weight,
                                                 cplx lambda, cplx lambda_prime,
                                                 double eps, int n, DiskRuleSpec spec)
{
    if (!(eps > 0.0 && eps < 0.25))
        throw validation_error("perturbation_inequality_check: eps must lie in (0, 1/4)");
    if (n < 1) throw validation_error("perturbation_inequality_check: order must be >= 1");

    PerturbationReport rep;
    const double wl = std::exp(-weight.value(lambda));
    rep.lhs = std::norm(dbar_star(f, weight, lambda, n)) * wl;

    rep.sample_term = std::norm(f.eval(lambda_prime)) * std::exp(-weight.value(lambda_prime));
    for (int j = 0; j < n; ++j)
        rep.sample_term += std::norm(dbar_star(f, weight, lambda, j)) * wl;

    rep.eps_term = eps * weighted_l2_sq(f, weight, lambda, 1.0, spec);
    const double num = std::max(rep.lhs - rep.eps_term, 0.0);
    rep.c_emp = rep.sample_term > 0.0 ? num / rep.sample_term : 0.0;
    return rep;
}

CorrectionReport correction_round(const ReductionPlan& plan, const InterpolationData& tilde,
                                  std::shared_ptr<const WeightModel> weight,
                                  int N, double R, GlobalSolveOptions opts)
{
    CorrectionReport rep;
    rep.data_norm = std::sqrt(tilde.weighted_norm_sq(*weight));

    const LiftReport lift = lift_sequence(plan, tilde, weight);
    rep.solve = global_interpolate_ls(lift.lifted, *weight, N, R, opts);
    const EntireFunction p = rep.solve.polynomial();

    // Residual data for the next round: satellites only, value mismatch.
    double acc = 0.0;
    for (const auto& [idx, sat] : plan.pairs) {
        cplx target = 0.0;
        for (const auto& q : tilde.points())
            if (q.lambda == sat) { target = q.values[0]; break; }
        acc += std::norm(target - p.eval(sat)) * std::exp(-weight->value(sat));
    }
    rep.residual_norm = std::sqrt(acc);
    rep.factor = rep.data_norm > 0.0 ? rep.residual_norm / rep.data_norm : 0.0;
    return rep;
}

} // namespace fock
