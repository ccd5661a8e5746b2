#include "blochlab/seminorms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace blochlab {

namespace {

Complex clamp_to_disk(Complex z, double r_max) {
    const double a = std::abs(z);
    return (a <= r_max) ? z : z * (r_max / a);
}

double checked_eval(const std::function<double(Complex)>& objective, Complex z) {
    const double v = objective(z);
    if (!std::isfinite(v))
        throw std::runtime_error("sup_over_disk: objective returned a non-finite value");
    return v;
}

struct LocalMax {
    Complex argmax;
    double value;
    double spread;  // f_best - f_worst over the final simplex
};

// Nelder-Mead ascent on the closed disk of radius r_max. Every proposal is
// clamped radially before evaluation and the clamped point is what enters the
// simplex, so the search stays feasible. The best point ever *evaluated* is
// returned, which keeps the result a valid lower-bound witness even when the
// final simplex has drifted.
LocalMax nelder_mead_max(const std::function<double(Complex)>& objective,
                         Complex start, double step, double r_max,
                         double tol, int max_iter) {
    struct Vertex {
        Complex z;
        double v;
    };
    auto mk = [&](Complex z) -> Vertex {
        z = clamp_to_disk(z, r_max);
        return {z, checked_eval(objective, z)};
    };

    std::array<Vertex, 3> s = {
        mk(start),
        mk(start + Complex(step, 0.0)),
        mk(start + Complex(0.0, step)),
    };
    Vertex best = *std::max_element(s.begin(), s.end(),
                                    [](const Vertex& a, const Vertex& b) { return a.v < b.v; });
    auto consider = [&](const Vertex& v) {
        if (v.v > best.v) best = v;
    };

    double spread = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        std::sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.v > b.v; });
        spread = s[0].v - s[2].v;
        if (spread <= tol) break;

        const Complex c = 0.5 * (s[0].z + s[1].z);
        const Vertex xr = mk(c + (c - s[2].z));
        consider(xr);
        if (xr.v > s[0].v) {
            const Vertex xe = mk(c + 2.0 * (c - s[2].z));
            consider(xe);
            s[2] = (xe.v > xr.v) ? xe : xr;
        } else if (xr.v > s[1].v) {
            s[2] = xr;
        } else {
            const bool outside = xr.v > s[2].v;
            const Vertex xc = outside ? mk(c + 0.5 * (xr.z - c))
                                      : mk(c - 0.5 * (c - s[2].z));
            consider(xc);
            if (xc.v >= (outside ? xr.v : s[2].v)) {
                s[2] = xc;
            } else {
                s[1] = mk(s[0].z + 0.5 * (s[1].z - s[0].z));
                s[2] = mk(s[0].z + 0.5 * (s[2].z - s[0].z));
                consider(s[1]);
                consider(s[2]);
            }
        }
    }
    std::sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.v > b.v; });
    spread = s[0].v - s[2].v;
    return {best.z, best.v, spread};
}

void validate(const SupConfig& cfg) {
    if (cfg.n_radial < 2 || cfg.n_angular < 4)
        throw std::invalid_argument("SupConfig: need n_radial >= 2 and n_angular >= 4");
    if (!(cfg.r_max > 0.0) || !(cfg.r_max < 1.0))
        throw std::invalid_argument("SupConfig: r_max must lie in (0, 1)");
    if (cfg.refine_top < 0 || cfg.refine_top > 64)
        throw std::invalid_argument("SupConfig: refine_top must lie in [0, 64]");
    if (!(cfg.refine_tol > 0.0))
        throw std::invalid_argument("SupConfig: refine_tol must be positive");
}

}  // namespace

SupEstimate sup_over_disk(const std::function<double(Complex)>& objective, const SupConfig& cfg) {
    validate(cfg);

    struct Cand {
        Complex z;
        double v;
    };
    std::vector<Cand> cands;
    const std::size_t keep = std::max(1, cfg.refine_top);
    cands.reserve(keep);
    const double radial_step = cfg.r_max / (cfg.n_radial - 1);
    const double sep = std::min(3.0 * radial_step, 0.1);

    SupEstimate est;
    est.argmax = Complex(0.0, 0.0);
    est.value = est.grid_value = checked_eval(objective, est.argmax);
    cands.push_back({est.argmax, est.value});

    // Separation-filtered top-k over the polar grid: nearby grid maxima
    // collapse into one candidate so the refinement seeds sample distinct
    // basins rather than one ridge.
    auto offer = [&](Complex z, double v) {
        for (auto& c : cands) {
            if (std::abs(c.z - z) < sep) {
                if (v > c.v) c = {z, v};
                return;
            }
        }
        if (cands.size() < keep) {
            cands.push_back({z, v});
            return;
        }
        auto worst = std::min_element(cands.begin(), cands.end(),
                                      [](const Cand& a, const Cand& b) { return a.v < b.v; });
        if (v > worst->v) *worst = {z, v};
    };

    for (int i = 1; i < cfg.n_radial; ++i) {
        const double r = radial_step * i;
        for (int j = 0; j < cfg.n_angular; ++j) {
            const double t = 2.0 * std::numbers::pi * j / cfg.n_angular;
            const Complex z(r * std::cos(t), r * std::sin(t));
            const double v = checked_eval(objective, z);
            if (v > est.grid_value) {
                est.grid_value = v;
                est.value = v;
                est.argmax = z;
            }
            offer(z, v);
        }
    }

    if (cfg.refine_top > 0) {
        std::sort(cands.begin(), cands.end(),
                  [](const Cand& a, const Cand& b) { return a.v > b.v; });
        cands.resize(std::min(cands.size(), std::size_t(cfg.refine_top)));
        double win_spread = cfg.refine_tol;
        for (const auto& c : cands) {
            const LocalMax lm = nelder_mead_max(objective, c.z, radial_step, cfg.r_max,
                                                cfg.refine_tol, 160);
            if (lm.value > est.value) {
                est.value = lm.value;
                est.argmax = lm.argmax;
                win_spread = lm.spread;
            }
        }
        est.refined = true;
        est.tolerance = std::max(win_spread, cfg.refine_tol);
    }
    return est;
}

SupEstimate bloch_seminorm(const AnalyticFunction& h, const SupConfig& cfg) {
    return sup_over_disk(
        [&h](Complex z) { return (1.0 - std::norm(z)) * std::abs(h.deriv(z)); }, cfg);
}

double bloch_norm(const AnalyticFunction& h, const SupConfig& cfg) {
    return std::abs(h.eval(Complex(0.0, 0.0))) + bloch_seminorm(h, cfg).value;
}

SupEstimate harmonic_bloch_seminorm(const HarmonicMap& f, const SupConfig& cfg) {
    const AnalyticFunction& h = f.h();
    const AnalyticFunction& g = f.g();
    return sup_over_disk(
        [&h, &g](Complex z) {
            return (1.0 - std::norm(z)) * (std::abs(h.deriv(z)) + std::abs(g.deriv(z)));
        },
        cfg);
}

SupEstimate bloch_type_seminorm(const HarmonicMap& f, const SupConfig& cfg) {
    const AnalyticFunction& h = f.h();
    const AnalyticFunction& g = f.g();
    return sup_over_disk(
        [&h, &g](Complex z) {
            const double jac = std::abs(std::norm(h.deriv(z)) - std::norm(g.deriv(z)));
            return (1.0 - std::norm(z)) * std::sqrt(jac);
        },
        cfg);
}

SupEstimate quasiregularity_estimate(const HarmonicMap& f, const SupConfig& cfg) {
    const AnalyticFunction& h = f.h();
    const AnalyticFunction& g = f.g();
    return sup_over_disk(
        [&h, &g](Complex z) {
            const double p = std::abs(h.deriv(z));
            const double q = std::abs(g.deriv(z));
            if (!(p - q > 0.0))
                throw std::domain_error(
                    "quasiregularity_constant: Jacobian not positive at a sampled point");
            return (p + q) / (p - q);
        },
        cfg);
}

double quasiregularity_constant(const HarmonicMap& f, const SupConfig& cfg) {
    return quasiregularity_estimate(f, cfg).value;
}

double dilatation_sup(const HarmonicMap& f, int n_boundary, double r_max, bool check_interior) {
    if (n_boundary < 4)
        throw std::invalid_argument("dilatation_sup: need at least 4 boundary samples");
    if (!(r_max > 0.0) || !(r_max < 1.0))
        throw std::invalid_argument("dilatation_sup: r_max must lie in (0, 1)");
    const AnalyticFunction& h = f.h();
    const AnalyticFunction& g = f.g();
    auto ratio = [&](Complex z) {
        const double p = std::abs(h.deriv(z));
        if (p < 1e-14)
            throw std::domain_error("dilatation_sup: h' vanishes at a sampled point");
        return std::abs(g.deriv(z)) / p;
    };

    double sup = 0.0;
    for (int j = 0; j < n_boundary; ++j) {
        const double t = 2.0 * std::numbers::pi * j / n_boundary;
        sup = std::max(sup, ratio(Complex(r_max * std::cos(t), r_max * std::sin(t))));
    }
    if (check_interior) {
        // |g'/h'| is subharmonic in log-modulus, so the boundary circle should
        // dominate; the interior grid exists to expose violations of that
        // assumption (e.g. a zero of h' inside).
        for (int i = 1; i <= 16; ++i) {
            const double r = r_max * i / 17.0;
            for (int j = 0; j < 64; ++j) {
                const double t = 2.0 * std::numbers::pi * j / 64.0;
                sup = std::max(sup, ratio(Complex(r * std::cos(t), r * std::sin(t))));
            }
        }
    }
    return sup;
}

}  // namespace blochlab
