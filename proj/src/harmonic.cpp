#include "blochlab/harmonic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace blochlab {

HarmonicMap::HarmonicMap(AnalyticPtr h, AnalyticPtr g)
    : h_(std::move(h)), g_(std::move(g)) {
    if (!h_ || !g_)
        throw std::invalid_argument("HarmonicMap: both analytic parts must be non-null");
}

HarmonicMap HarmonicMap::log_fixture() {
    return HarmonicMap(make_log_fixture(), make_polynomial({Complex(0.0, 0.0)}));
}

DerivativeBundle HarmonicMap::bundle(Complex z) const {
    DerivativeBundle b;
    b.fz = h_->deriv(z);
    b.fzbar = std::conj(g_->deriv(z));
    const double p = std::abs(b.fz);
    const double q = std::abs(b.fzbar);
    b.big_lambda = p + q;
    b.small_lambda = std::abs(p - q);
    b.jacobian = (p - q) * (p + q);
    if (p > 1e-300) {
        b.dilatation_modulus = q / p;
        b.has_dilatation = true;
    }
    return b;
}

DerivativeBundle bundle_at(const HarmonicMap& f, DiskPoint z) {
    return f.bundle(z.value());
}

Complex directional_derivative(const HarmonicMap& f, DiskPoint z, double alpha) {
    const DerivativeBundle b = f.bundle(z.value());
    const Complex e(std::cos(alpha), std::sin(alpha));
    return b.fz * e + b.fzbar * std::conj(e);
}

std::pair<double, double> extremal_direction_check(const HarmonicMap& f, DiskPoint z, int n_angles) {
    if (n_angles < 4)
        throw std::invalid_argument("extremal_direction_check: need at least 4 angles");
    const DerivativeBundle b = f.bundle(z.value());
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int j = 0; j < n_angles; ++j) {
        const double alpha = 2.0 * std::numbers::pi * j / n_angles;
        const Complex e(std::cos(alpha), std::sin(alpha));
        const double v = std::abs(b.fz * e + b.fzbar * std::conj(e));
        hi = std::max(hi, v);
        lo = std::min(lo, v);
    }
    return {hi, lo};
}

double quasiregularity_pointwise(const HarmonicMap& f, DiskPoint z) {
    const DerivativeBundle b = f.bundle(z.value());
    if (!(b.jacobian > 0.0))
        throw std::domain_error("quasiregularity_pointwise: Jacobian must be positive");
    return b.big_lambda / b.small_lambda;
}

HarmonicMap compose_with_mobius(const HarmonicMap& f, DiskPoint w) {
    return HarmonicMap(compose_with_mobius(f.h_ptr(), w), compose_with_mobius(f.g_ptr(), w));
}

}  // namespace blochlab
