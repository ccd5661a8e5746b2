#pragma once

#include <complex>
#include <stdexcept>

namespace blochlab {

using Complex = std::complex<double>;

// Points are kept strictly inside the unit disk. The quotient 1/(1 - conj(w)z)
// and the metric identity below degenerate on the boundary, so construction
// rejects |z| >= 1 - kBoundaryMargin.
inline constexpr double kBoundaryMargin = 1e-12;

class DiskPoint {
public:
    explicit DiskPoint(Complex value) : value_(value) {
        if (!(std::abs(value) < 1.0 - kBoundaryMargin))
            throw std::domain_error("DiskPoint: point must satisfy |z| < 1 - 1e-12");
    }
    DiskPoint(double re, double im) : DiskPoint(Complex(re, im)) {}

    Complex value() const { return value_; }
    double abs() const { return std::abs(value_); }

private:
    Complex value_;
};

// phi_w(z) = (w - z) / (1 - conj(w) z), the disk automorphism swapping w and 0.
// phi_w is an involution: phi_w(phi_w(z)) = z.
class MobiusTransform {
public:
    explicit MobiusTransform(DiskPoint pivot) : pivot_(pivot) {}

    DiskPoint pivot() const { return pivot_; }

    Complex apply(Complex z) const {
        const Complex w = pivot_.value();
        return (w - z) / (1.0 - std::conj(w) * z);
    }

    // phi_w'(z) = (|w|^2 - 1) / (1 - conj(w) z)^2
    Complex derivative(Complex z) const {
        const Complex w = pivot_.value();
        const Complex d = 1.0 - std::conj(w) * z;
        return (std::norm(w) - 1.0) / (d * d);
    }

    // phi_w''(z) = 2 conj(w) (|w|^2 - 1) / (1 - conj(w) z)^3
    Complex second_derivative(Complex z) const {
        const Complex w = pivot_.value();
        const Complex d = 1.0 - std::conj(w) * z;
        return 2.0 * std::conj(w) * (std::norm(w) - 1.0) / (d * d * d);
    }

private:
    DiskPoint pivot_;
};

// rho(z, w) = |z - w| / |1 - conj(z) w|, the pseudo-hyperbolic distance.
// Computed from the quotient directly rather than through MobiusTransform so
// the two code paths can be checked against each other.
inline double pseudo_distance(DiskPoint z, DiskPoint w) {
    return std::abs(z.value() - w.value()) / std::abs(1.0 - std::conj(z.value()) * w.value());
}

// 1 - rho(z, w)^2 = (1 - |z|^2)(1 - |w|^2) / |1 - conj(z) w|^2, evaluated in
// the right-hand form, which stays accurate when rho is close to 1.
inline double one_minus_rho_sq(DiskPoint z, DiskPoint w) {
    const double num = (1.0 - std::norm(z.value())) * (1.0 - std::norm(w.value()));
    return num / std::norm(1.0 - std::conj(z.value()) * w.value());
}

}  // namespace blochlab
