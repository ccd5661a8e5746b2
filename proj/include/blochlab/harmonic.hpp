#pragma once

#include <utility>

#include "blochlab/analytic.hpp"

namespace blochlab {

// Pointwise derivative data of f = h + conj(g):
//   fz     = h'(z)             fzbar  = conj(g'(z))
//   Lambda = |fz| + |fzbar|    (largest directional derivative)
//   lambda = ||fz| - |fzbar||  (smallest directional derivative)
//   J      = |fz|^2 - |fzbar|^2 = Lambda * lambda * sign
// The dilatation g'/h' exists only where h' != 0.
struct DerivativeBundle {
    Complex fz;
    Complex fzbar;
    double big_lambda = 0.0;
    double small_lambda = 0.0;
    double jacobian = 0.0;
    double dilatation_modulus = 0.0;  // valid only when has_dilatation
    bool has_dilatation = false;
};

class HarmonicMap {
public:
    HarmonicMap(AnalyticPtr h, AnalyticPtr g);

    // h(z) = log(1 - z^2), g = 0. The standard unbounded Bloch example.
    static HarmonicMap log_fixture();

    const AnalyticFunction& h() const { return *h_; }
    const AnalyticFunction& g() const { return *g_; }
    const AnalyticPtr& h_ptr() const { return h_; }
    const AnalyticPtr& g_ptr() const { return g_; }

    Complex eval(Complex z) const {
        return h_->eval(z) + std::conj(g_->eval(z));
    }

    // Raw-complex entry point used by the supremum grids.
    DerivativeBundle bundle(Complex z) const;

private:
    AnalyticPtr h_, g_;
};

DerivativeBundle bundle_at(const HarmonicMap& f, DiskPoint z);

// d/dt f(z + t e^{i alpha}) at t = 0, i.e. fz e^{i alpha} + fzbar e^{-i alpha}.
Complex directional_derivative(const HarmonicMap& f, DiskPoint z, double alpha);

// Scans n_angles uniform directions and returns (max |d_alpha f|, min |d_alpha f|).
// Converges to (Lambda, lambda) with error O(Lambda / n_angles^2).
std::pair<double, double> extremal_direction_check(const HarmonicMap& f, DiskPoint z, int n_angles);

// Lambda / lambda at z. Throws std::domain_error unless J > 0 there.
double quasiregularity_pointwise(const HarmonicMap& f, DiskPoint z);

// f ∘ phi_w, again of the form H + conj(G) with H = h ∘ phi_w, G = g ∘ phi_w.
HarmonicMap compose_with_mobius(const HarmonicMap& f, DiskPoint w);

}  // namespace blochlab
