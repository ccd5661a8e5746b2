#pragma once

#include <functional>

#include "blochlab/harmonic.hpp"

namespace blochlab {

struct SupConfig {
    int n_radial = 64;           // radii equally spaced in [0, r_max]
    int n_angular = 128;         // uniform angles on each circle
    double r_max = 1.0 - 1e-9;   // search radius; suprema on the open disk are
                                 // approached through this truncation
    int refine_top = 5;          // local refinements seeded from the best grid points
    double refine_tol = 1e-8;    // simplex stopping spread
};

// Result of a supremum search over the disk. `value` is a certified lower
// bound on the true supremum (every reported value was actually evaluated);
// `tolerance` is the stopping-rule gap of the winning local refinement.
struct SupEstimate {
    double value = 0.0;
    Complex argmax{0.0, 0.0};
    double grid_value = 0.0;
    bool refined = false;
    double tolerance = 0.0;
};

// Polar grid scan followed by Nelder-Mead refinement of the best grid points,
// clamped to |z| <= r_max. Throws std::runtime_error if the objective returns
// a non-finite value, std::invalid_argument on a malformed config.
SupEstimate sup_over_disk(const std::function<double(Complex)>& objective, const SupConfig& cfg);

// sup (1 - |z|^2) |h'(z)|
SupEstimate bloch_seminorm(const AnalyticFunction& h, const SupConfig& cfg = {});

// |h(0)| + seminorm
double bloch_norm(const AnalyticFunction& h, const SupConfig& cfg = {});

// sup (1 - |z|^2) Lambda_f(z)
SupEstimate harmonic_bloch_seminorm(const HarmonicMap& f, const SupConfig& cfg = {});

// sup (1 - |z|^2) sqrt(|J_f(z)|)
SupEstimate bloch_type_seminorm(const HarmonicMap& f, const SupConfig& cfg = {});

// sup Lambda_f / lambda_f. Throws through the objective if J_f <= 0 at any
// sampled point.
SupEstimate quasiregularity_estimate(const HarmonicMap& f, const SupConfig& cfg = {});
double quasiregularity_constant(const HarmonicMap& f, const SupConfig& cfg = {});

// sup |g'/h'| sampled on the circle |z| = r_max; with check_interior set, a
// coarse interior grid is scanned as well. For a sense-preserving f the
// maximum principle puts the supremum on the boundary, so the interior scan
// is a cross-check only. Throws std::domain_error where |h'| vanishes.
double dilatation_sup(const HarmonicMap& f, int n_boundary, double r_max = 1.0 - 1e-9,
                      bool check_interior = false);

}  // namespace blochlab
