#include "fock/geometry.hpp"
#include "fock/errors.hpp"
#include "fock/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

namespace fock {

namespace {

struct PairHash {
    std::size_t operator()(const cplx& z) const
    {
        std::hash<double> h;
        return h(z.real()) ^ (h(z.imag()) << 1);
    }
};

} // namespace

MultiSet::MultiSet(std::vector<cplx> points, std::vector<int> mults)
    : pts_(std::move(points)), mults_(std::move(mults))
{
    if (pts_.size() != mults_.size())
        throw validation_error("MultiSet: points/multiplicities size mismatch");
    std::unordered_set<cplx, PairHash> seen;
    for (std::size_t i = 0; i < pts_.size(); ++i) {
        if (!std::isfinite(pts_[i].real()) || !std::isfinite(pts_[i].imag()))
            throw validation_error("MultiSet: non-finite point");
        if (mults_[i] < 1)
            throw validation_error("MultiSet: multiplicity must be >= 1");
        if (!seen.insert(pts_[i]).second)
            throw validation_error("MultiSet: duplicate point");
        n_max_ = std::max(n_max_, mults_[i]);
        mass_ += mults_[i];
    }
    xs_.resize(pts_.size());
    ys_.resize(pts_.size());
    ws_.resize(pts_.size());
    for (std::size_t i = 0; i < pts_.size(); ++i) {
        xs_[i] = pts_[i].real();
        ys_[i] = pts_[i].imag();
        ws_[i] = static_cast<double>(mults_[i]);
    }
}

MultiSet MultiSet::lattice(double spacing, double radius, int mult)
{
    if (spacing <= 0.0) throw validation_error("lattice: spacing must be positive");
    if (radius < 0.0) throw validation_error("lattice: radius must be nonnegative");
    std::vector<cplx> pts;
    std::vector<int> ms;
    const int kmax = static_cast<int>(std::floor(radius / spacing));
    for (int i = -kmax; i <= kmax; ++i) {
        for (int j = -kmax; j <= kmax; ++j) {
            const cplx z(spacing * i, spacing * j);
            if (std::abs(z) <= radius) {
                pts.push_back(z);
                ms.push_back(mult);
            }
        }
    }
    return MultiSet(std::move(pts), std::move(ms));
}

std::optional<MultiSet::Box> MultiSet::bounding_box() const
{
    if (pts_.empty()) return std::nullopt;
    Box b{xs_[0], xs_[0], ys_[0], ys_[0]};
    for (std::size_t i = 1; i < pts_.size(); ++i) {
        b.xlo = std::min(b.xlo, xs_[i]);
        b.xhi = std::max(b.xhi, xs_[i]);
        b.ylo = std::min(b.ylo, ys_[i]);
        b.yhi = std::max(b.yhi, ys_[i]);
    }
    return b;
}

double separation(const MultiSet& set)
{
    if (set.size() < 2) return std::numeric_limits<double>::infinity();
    return std::sqrt(kernels::min_pairwise_dist_sq(set.xs().data(), set.ys().data(), set.size()));
}

std::int64_t relative_separation(const MultiSet& set)
{
    if (set.empty()) return 0;
    const auto& xs = set.xs();
    const auto& ys = set.ys();
    const auto& ws = set.weights();
    const std::size_t n = set.size();

    double best = 0.0;
    auto probe = [&](double cx, double cy) {
        best = std::max(best, kernels::count_in_disk(xs.data(), ys.data(), ws.data(), n, cx, cy, 1.0));
    };
    for (std::size_t i = 0; i < n; ++i) {
        probe(xs[i], ys[i]);
        for (std::size_t j = i + 1; j < n; ++j)
            probe(0.5 * (xs[i] + xs[j]), 0.5 * (ys[i] + ys[j]));
    }
    return std::llround(best);
}

std::int64_t count_with_mult(const MultiSet& set, cplx z, double r)
{
    if (r <= 0.0) throw validation_error("count_with_mult: radius must be positive");
    if (set.empty()) return 0;
    return std::llround(kernels::count_in_disk(set.xs().data(), set.ys().data(),
                                               set.weights().data(), set.size(),
                                               z.real(), z.imag(), r));
}

double laplacian_mass(const WeightModel& weight, cplx z, double r, DiskRuleSpec spec)
{
    if (r <= 0.0) throw validation_error("laplacian_mass: radius must be positive");
    DiskRule rule(r, spec);
    return rule.integrate(z, [&](cplx w) { return weight.laplacian(w); });
}

double window_tolerance(const WeightModel& weight, double r, double eps)
{
    if (r <= 0.0 || eps < 0.0) throw validation_error("window_tolerance: bad arguments");
    const double ratio = weight.lap_upper() / weight.lap_lower();
    const double t = eps / r;
    return ratio * (2.0 * t + t * t);
}

DensityReport density_profile(const MultiSet& set, const WeightModel& weight,
                              std::span<const double> radii, ScanSpec spec)
{
    for (double r : radii)
        if (r <= 0.0) throw validation_error("density_profile: radii must be positive");
    if (spec.step_factor <= 0.0) throw validation_error("density_profile: bad scan step");

    DensityReport rep;
    rep.radii.assign(radii.begin(), radii.end());
    rep.lower.assign(radii.size(), 0.0);
    rep.upper.assign(radii.size(), 0.0);
    rep.centers.assign(radii.size(), 0);
    rep.scan_note = "centers on a step r*" + std::to_string(spec.step_factor) +
                    " lattice over the bounding box deflated by r; inf/sup are over "
                    "this finite grid, not the plane";
    if (set.empty()) return rep;

    const auto box = *set.bounding_box();
    for (std::size_t ri = 0; ri < rep.radii.size(); ++ri) {
        const double r = rep.radii[ri];
        // Restrict centers so B(z, r) stays inside the cloud; a window that
        // sticks out of a finite truncation only reports truncation noise.
        double xlo = box.xlo + r, xhi = box.xhi - r;
        double ylo = box.ylo + r, yhi = box.yhi - r;
        std::vector<cplx> centers;
        if (xlo > xhi || ylo > yhi) {
            centers.emplace_back(0.5 * (box.xlo + box.xhi), 0.5 * (box.ylo + box.yhi));
        } else {
            const double step = spec.step_factor * r;
            const int nx = static_cast<int>(std::floor((xhi - xlo) / step)) + 1;
            const int ny = static_cast<int>(std::floor((yhi - ylo) / step)) + 1;
            for (int i = 0; i < nx; ++i)
                for (int j = 0; j < ny; ++j)
                    centers.emplace_back(xlo + i * step, ylo + j * step);
        }

        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        for (cplx z : centers) {
            const double count = static_cast<double>(count_with_mult(set, z, r));
            const double mass = laplacian_mass(weight, z, r, spec.quad);
            const double d = count / mass;
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        rep.lower[ri] = lo;
        rep.upper[ri] = hi;
        rep.centers[ri] = static_cast<int>(centers.size());
    }

    // Headline: Richardson step on D(r) ~ D_inf + c/r from the two largest
    // radii (profiles must be sorted ascending for this to make sense).
    const std::size_t nr = rep.radii.size();
    if (nr >= 2) {
        const double r1 = rep.radii[nr - 2], r2 = rep.radii[nr - 1];
        auto extrap = [&](const std::vector<double>& d) {
            return (r2 * d[nr - 1] - r1 * d[nr - 2]) / (r2 - r1);
        };
        rep.headline_lower = extrap(rep.lower);
        rep.headline_upper = extrap(rep.upper);
    } else if (nr == 1) {
        rep.headline_lower = rep.lower[0];
        rep.headline_upper = rep.upper[0];
    }
    rep.headline = 0.5 * (rep.headline_lower + rep.headline_upper);
    return rep;
}

} // namespace fock
