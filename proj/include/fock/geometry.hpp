#pragma once

#include "fock/weights.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Point sets with multiplicities, separation diagnostics and finite-radius
// weighted density profiles. Disks are open: a point exactly on the boundary
// is not counted.

namespace fock {

class MultiSet {
public:
    MultiSet() = default;

    /// Points must be pairwise distinct, multiplicities >= 1.
    MultiSet(std::vector<cplx> points, std::vector<int> mults);

    /// All points of a square lattice spacing*(i + j*im) with |z| <= radius,
    /// constant multiplicity.
    static MultiSet lattice(double spacing, double radius, int mult = 1);

    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    cplx point(std::size_t i) const { return pts_[i]; }
    int mult(std::size_t i) const { return mults_[i]; }
    const std::vector<cplx>& points() const { return pts_; }
    const std::vector<int>& mults() const { return mults_; }

    /// sup of the multiplicity function (0 for the empty set).
    int n_max() const { return n_max_; }
    /// Total multiplicity mass sum m(lambda).
    std::int64_t total_mass() const { return mass_; }

    // Split coordinate arrays for the kernels.
    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }
    const std::vector<double>& weights() const { return ws_; }

    /// Axis-aligned bounding box; nullopt when empty.
    struct Box { double xlo, xhi, ylo, yhi; };
    std::optional<Box> bounding_box() const;

private:
    std::vector<cplx> pts_;
    std::vector<int> mults_;
    std::vector<double> xs_, ys_, ws_;
    int n_max_ = 0;
    std::int64_t mass_ = 0;
};

/// Minimum pairwise distance; +infinity for fewer than two points.
double separation(const MultiSet& set);

/// Max point count (with multiplicities) in a unit disk. Candidate centers
/// are the points and all pairwise midpoints; this heuristic is exact for
/// well-separated sets and a lower bound in general.
std::int64_t relative_separation(const MultiSet& set);

/// Number of points in the open disk B(z, r), counted with multiplicities.
std::int64_t count_with_mult(const MultiSet& set, cplx z, double r);

/// Integral of Delta phi over B(z, r) by disk quadrature.
double laplacian_mass(const WeightModel& weight, cplx z, double r,
                      DiskRuleSpec spec = {});

/// Relative slack of the window comparison mass(z, r+eps) / mass(z, r):
/// (M/m) * (2 eps/r + (eps/r)^2), from the Laplacian bounds.
double window_tolerance(const WeightModel& weight, double r, double eps);

struct ScanSpec {
    /// Scan-grid step as a fraction of the profile radius.
    double step_factor = 0.25;
    DiskRuleSpec quad = {};
};

struct DensityReport {
    std::vector<double> radii;
    std::vector<double> lower; ///< inf over scan centers of count/mass
    std::vector<double> upper; ///< sup over scan centers of count/mass
    std::vector<int> centers;  ///< scan centers examined per radius
    double headline_lower = 0.0;
    double headline_upper = 0.0;
    double headline = 0.0; ///< Richardson extrapolation from the two largest radii
    std::string scan_note;
};

/// Finite-r density profile. Scan centers form a lattice of step
/// step_factor*r over the bounding box of the set deflated by r, so each
/// window lies inside the point cloud; the report records this. The inf/sup
/// are over that finite grid, not the whole plane.
DensityReport density_profile(const MultiSet& set, const WeightModel& weight,
                              std::span<const double> radii, ScanSpec spec = {});

} // namespace fock
