#include "fock/sampling.hpp"
#include "fock/bell.hpp"
#include "fock/errors.hpp"

#include <algorithm>
#include <cmath>
#include <future>

namespace fock {

Eigen::MatrixXcd evaluation_matrix(const MultiSet& set, const WeightModel& weight, int N)
{
    if (N < 0) throw validation_error("evaluation_matrix: negative degree");
    if (set.n_max() - 1 > weight.order())
        throw validation_error("evaluation_matrix: weight order below set multiplicity");

    Eigen::MatrixXcd E(set.total_mass(), N + 1);
    Eigen::Index row = 0;
    for (std::size_t p = 0; p < set.size(); ++p) {
        const cplx lambda = set.point(p);
        const int m = set.mult(p);
        const double scale = std::exp(-0.5 * weight.value(lambda));

        // Bell factors of the negated weight jet, shared by all rows at lambda.
        auto neg_jet = weight.jet(lambda, m - 1);
        for (auto& x : neg_jet) x = -x;
        std::vector<cplx> bell(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) bell[i] = complete_bell(i, neg_jet);

        // Monomial jets: d^l z^k (lambda) = k!/(k-l)! lambda^{k-l}.
        std::vector<double> falling(static_cast<std::size_t>(N) + 1, 1.0);
        for (int j = 0; j < m; ++j) {
            const double sign = (j % 2 == 0) ? 1.0 : -1.0;
            for (int k = 0; k <= N; ++k) {
                cplx acc = 0.0;
                cplx pw = 1.0; // lambda^{k-l} built from l = min(j,k) downward
                for (int l = std::min(j, k); l >= 0; --l) {
                    double fall = 1.0;
                    for (int t = 0; t < l; ++t) fall *= (k - t);
                    acc += binomial(j, l) * fall * pw * bell[j - l];
                    pw *= lambda;
                }
                E(row, k) = sign * scale * acc;
            }
            ++row;
        }
    }
    return E;
}

Eigen::MatrixXcd gram_matrix(const WeightModel& weight, int N, double R, DiskRuleSpec spec)
{
    if (N < 0) throw validation_error("gram_matrix: negative degree");
    if (R <= 0.0) throw validation_error("gram_matrix: radius must be positive");

    // The angular rule must resolve frequency N exactly and the radial rule
    // the degree-2N radial polynomial against the weight.
    DiskRuleSpec use = spec;
    use.n_radial = std::max(spec.n_radial, 2 * N + 24);
    use.n_angular = std::max(spec.n_angular, 4 * N + 8);
    const DiskRule rule(R, use);

    const std::size_t nn = rule.size();
    Eigen::MatrixXcd V(nn, N + 1);
    for (std::size_t i = 0; i < nn; ++i) {
        const cplx z(rule.offset_x()[i], rule.offset_y()[i]);
        const double u = std::sqrt(rule.weights()[i] * std::exp(-weight.value(z)));
        cplx pw = u;
        for (int k = 0; k <= N; ++k) {
            V(i, k) = pw;
            pw *= z;
        }
    }
    Eigen::MatrixXcd G = V.adjoint() * V;
    G = 0.5 * (G + G.adjoint()).eval();

    Eigen::LLT<Eigen::MatrixXcd> llt(G);
    if (llt.info() != Eigen::Success)
        throw numeric_error("gram_matrix: lost positive definiteness; reduce N or "
                            "raise the quadrature resolution");
    return G;
}

double essential_radius(const WeightModel& weight, int N)
{
    return std::sqrt((N + 20.0) / weight.lap_lower());
}

double default_truncation_radius(const WeightModel& weight, int N)
{
    return essential_radius(weight, N) + 2.0;
}

FrameBounds frame_bounds(const MultiSet& set, const WeightModel& weight, int N,
                         std::optional<double> R, DiskRuleSpec spec)
{
    FrameBounds fb;
    fb.N = N;
    fb.R = R.value_or(default_truncation_radius(weight, N));
    if (set.empty()) return fb;

    const Eigen::MatrixXcd E = evaluation_matrix(set, weight, N);
    Eigen::MatrixXcd G = gram_matrix(weight, N, fb.R, spec);

    // Rescale to the normalized monomial basis; the generalized eigenvalues
    // are invariant and the pencil becomes well conditioned.
    Eigen::VectorXd d = G.diagonal().real().cwiseSqrt();
    Eigen::MatrixXcd S = E * d.cwiseInverse().asDiagonal();
    S = (S.adjoint() * S).eval();
    S = 0.5 * (S + S.adjoint()).eval();
    G = d.cwiseInverse().asDiagonal() * G * d.cwiseInverse().asDiagonal();
    G = 0.5 * (G + G.adjoint()).eval();

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> ges(S, G,
                                                                   Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
    if (ges.info() != Eigen::Success)
        throw numeric_error("frame_bounds: generalized eigensolver failed");

    fb.spectrum = ges.eigenvalues();
    fb.A = std::max(fb.spectrum(0), 0.0);
    fb.B = std::max(fb.spectrum(fb.spectrum.size() - 1), 0.0);
    return fb;
}

SamplingReport sampling_report(const MultiSet& set, const WeightModel& weight,
                               int N, int N_check, std::optional<double> R,
                               DiskRuleSpec spec)
{
    SamplingReport rep;
    rep.primary = frame_bounds(set, weight, N, R, spec);
    rep.check = frame_bounds(set, weight, N_check, R, spec);
    const double rp = rep.primary.B > 0.0 ? rep.primary.A / rep.primary.B : 0.0;
    const double rc = rep.check.B > 0.0 ? rep.check.A / rep.check.B : 0.0;
    rep.consistent = (rp <= 0.02 && rc <= 0.02) ||
                     std::abs(rp - rc) <= 0.5 * std::max(rp, rc);
    return rep;
}

std::vector<PhasePoint> phase_scan(std::span<const double> spacings, int mult,
                                   double alpha, std::span<const int> n_list,
                                   PhaseScanOptions opts)
{
    if (spacings.empty()) throw validation_error("phase_scan: empty spacing list");
    if (!std::is_sorted(spacings.begin(), spacings.end()))
        throw validation_error("phase_scan: spacings must be ascending");
    for (double s : spacings)
        if (s <= 0.0) throw validation_error("phase_scan: spacings must be positive");
    if (mult < 1) throw validation_error("phase_scan: multiplicity must be >= 1");

    const auto weight = classical_weight(alpha);

    auto scan_one = [&](double s) {
        std::vector<PhasePoint> rows;
        // Density column from an extended copy of the lattice, windows well
        // inside the cloud.
        const double rd = opts.density_radius;
        const MultiSet big = MultiSet::lattice(s, rd + 2.0 * s + 2.0, mult);
        const std::vector<double> radii{0.5 * rd, rd};
        const double density = density_profile(big, *weight, radii).headline;

        for (int N : n_list) {
            const double R = opts.R.value_or(default_truncation_radius(*weight, N));
            const MultiSet patch = MultiSet::lattice(s, R - 2.0, mult);
            const FrameBounds fb = frame_bounds(patch, *weight, N, R, opts.quad);
            rows.push_back({s, density, fb.A, fb.B, N, R});
        }
        return rows;
    };

    std::vector<std::future<std::vector<PhasePoint>>> futures;
    futures.reserve(spacings.size());
    for (double s : spacings)
        futures.push_back(std::async(std::launch::async, scan_one, s));

    std::vector<PhasePoint> table;
    for (auto& f : futures) {
        auto rows = f.get();
        table.insert(table.end(), rows.begin(), rows.end());
    }
    return table;
}

CollapseInterval locate_collapse(std::span<const PhasePoint> rows, double threshold)
{
    CollapseInterval ci;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double ratio = rows[i].B > 0.0 ? rows[i].A / rows[i].B : 0.0;
        if (ratio < threshold) {
            ci.found = true;
            ci.hi = rows[i].spacing;
            ci.lo = i > 0 ? rows[i - 1].spacing : rows[i].spacing;
            return ci;
        }
    }
    return ci;
}

} // namespace fock
