#include "blochlab/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace blochlab {

double psi(double r) {
    if (!(r > 0.0) || !(r < 1.0))
        throw std::domain_error("psi: r must lie in (0, 1)");
    return (1.0 + r * r / 9.0) / (r * (1.0 - r * r));
}

PsiMinimum minimize_psi(double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("minimize_psi: tol must be positive");
    tol = std::max(tol, 1e-14);

    // Bracketing scan over 16 seed intervals first: golden section then works
    // inside a bracket known to contain the minimum, well away from the poles
    // at both endpoints.
    const double lo = 1e-6, hi = 1.0 - 1e-6;
    constexpr int kScan = 16;
    int best = 1;
    double best_v = std::numeric_limits<double>::infinity();
    for (int i = 1; i < kScan; ++i) {
        const double v = psi(lo + (hi - lo) * i / kScan);
        if (v < best_v) {
            best_v = v;
            best = i;
        }
    }
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo + (hi - lo) * (best - 1) / kScan;
    double b = lo + (hi - lo) * (best + 1) / kScan;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = psi(x1), f2 = psi(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = psi(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = psi(x2);
        }
    }
    // Function comparisons cannot localize the argmin below ~sqrt(eps), so
    // polish by bisecting the sign change of psi'. psi'(r) has the sign of
    // (2r/9) r(1-r^2) - (1 + r^2/9)(1 - 3r^2), which crosses zero once.
    const auto dpsi = [](double r) {
        return (2.0 * r / 9.0) * r * (1.0 - r * r) -
               (1.0 + r * r / 9.0) * (1.0 - 3.0 * r * r);
    };
    double da = a - 1e-6, db = b + 1e-6;
    if (dpsi(da) < 0.0 && dpsi(db) > 0.0) {
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (da + db);
            if (mid <= da || mid >= db) break;
            (dpsi(mid) < 0.0 ? da : db) = mid;
        }
        const double r = 0.5 * (da + db);
        return {r, psi(r)};
    }
    const double r = 0.5 * (a + b);
    return {r, psi(r)};
}

ConstantSet constant_set(double tol) {
    const PsiMinimum m = minimize_psi(tol);
    return {m.c1, m.r_star, 2.0 * m.c1 + 1.0 / 3.0, m.c1 + 1.0, 3.31};
}

const ConstantSet& default_constants() {
    static const ConstantSet c = constant_set(1e-12);
    return c;
}

double second_derivative_bound(double r, double w_mod) {
    if (!(r > 0.0) || !(r < 1.0))
        throw std::domain_error("second_derivative_bound: r must lie in (0, 1)");
    if (!(w_mod >= 0.0) || !(w_mod < 1.0))
        throw std::domain_error("second_derivative_bound: w_mod must lie in [0, 1)");
    return (1.0 + r * r * w_mod * w_mod) / (r * (1.0 - r * r));
}

ScalarInequality log_displacement_inequality(double t) {
    if (!(t >= 0.0) || !(t < 1.0))
        throw std::domain_error("log_displacement_inequality: t must lie in [0, 1)");
    // log((1+t)/(1-t)) = 2 atanh(t); the atanh form is accurate near 0.
    return {(1.0 - t * t) * 2.0 * std::atanh(t), 2.0 * t};
}

ScalarInequality lemma23_pair(const AnalyticFunction& h, DiskPoint w, DiskPoint zeta,
                              double h_seminorm) {
    if (zeta.abs() > 1.0 / 3.0)
        throw std::domain_error("lemma23_pair: |zeta| must be at most 1/3");
    const MobiusTransform phi(w);
    auto gprime = [&](Complex z) { return h.deriv(phi.apply(z)) * phi.derivative(z); };
    const double lhs =
        (1.0 - std::norm(zeta.value())) * std::abs(gprime(zeta.value()) - gprime(Complex(0.0, 0.0)));
    const double rhs = default_constants().c1 * zeta.abs() * h_seminorm;
    return {lhs, rhs};
}

}  // namespace blochlab
