#pragma once

#include "fock/geometry.hpp"
#include "fock/weights.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

// Finite-section estimates of the sampling constants A, B: restrict the
// comparison A ||f||^2 <= sum |D^{(j)} f(lambda)|^2 e^{-phi(lambda)} <= B ||f||^2
// to polynomials of degree <= N and compute the extreme generalized
// eigenvalues of (E^H E, Gram). The truncation radius R is chosen so the
// weighted mass of the basis outside B(0, R) is negligible.

namespace fock {

/// Row (lambda, j), column k: e^{-phi(lambda)/2} D^{(j)} z^k (lambda).
/// Rows are point-major in set order, j ascending within a point.
Eigen::MatrixXcd evaluation_matrix(const MultiSet& set, const WeightModel& weight, int N);

/// Gram matrix of the monomials 0..N on B(0, R) against e^{-phi}; exactly
/// diagonal for radial weights up to quadrature error. The quadrature
/// resolution is raised automatically with N. Throws fock::numeric_error if
/// positive definiteness is lost (advice: smaller N or larger quadrature).
Eigen::MatrixXcd gram_matrix(const WeightModel& weight, int N, double R,
                             DiskRuleSpec spec = {});

struct FrameBounds {
    double A = 0.0;
    double B = 0.0;
    int N = 0;
    double R = 0.0;
    Eigen::VectorXd spectrum; ///< all generalized eigenvalues, ascending
};

/// Patch-enclosing radius with < 1e-8 weighted basis mass outside:
/// sqrt((N + 20) / m) with m the Laplacian lower bound.
double essential_radius(const WeightModel& weight, int N);
/// Default Gram truncation radius: essential_radius + 2.
double default_truncation_radius(const WeightModel& weight, int N);

/// Extreme generalized eigenvalues over the degree <= N subspace. An empty
/// set yields A = B = 0.
FrameBounds frame_bounds(const MultiSet& set, const WeightModel& weight, int N,
                         std::optional<double> R = std::nullopt,
                         DiskRuleSpec spec = {});

struct SamplingReport {
    FrameBounds primary;
    FrameBounds check; ///< same set at a second N
    bool consistent = false;
};

/// frame_bounds at N and N_check with a stability flag on A/B.
SamplingReport sampling_report(const MultiSet& set, const WeightModel& weight,
                               int N, int N_check,
                               std::optional<double> R = std::nullopt,
                               DiskRuleSpec spec = {});

struct PhasePoint {
    double spacing = 0.0;
    double density = 0.0; ///< measured headline density of the lattice
    double A = 0.0;
    double B = 0.0;
    int N = 0;
    double R = 0.0;
};

struct PhaseScanOptions {
    std::optional<double> R;  ///< Gram radius override
    DiskRuleSpec quad = {};
    double density_radius = 12.0; ///< profile radius for the density column
};

/// For each spacing: a square-lattice patch in B(0, R-2) with constant
/// multiplicity, density measured on an extended copy of the lattice, and
/// frame bounds per requested N.
std::vector<PhasePoint> phase_scan(std::span<const double> spacings, int mult,
                                   double alpha, std::span<const int> n_list,
                                   PhaseScanOptions opts = {});

struct CollapseInterval {
    double lo = 0.0; ///< last spacing with A/B at or above the threshold
    double hi = 0.0; ///< first spacing below the threshold
    bool found = false;
};

/// Bracket where A/B first drops below the threshold along ascending
/// spacings (rows must share one N).
CollapseInterval locate_collapse(std::span<const PhasePoint> rows, double threshold = 0.05);

} // namespace fock
