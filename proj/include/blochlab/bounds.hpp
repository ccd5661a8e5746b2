#pragma once

#include "blochlab/analytic.hpp"

namespace blochlab {

// psi(r) = (1 + r^2/9) / (r (1 - r^2)) on (0, 1). Its minimum value c1 drives
// every constant below; the minimizer r_star is the positive root of
// r^4 + 28 r^2 - 9 = 0.
double psi(double r);

struct PsiMinimum {
    double r_star;
    double c1;
};

// Golden-section search; psi blows up at both endpoints and has a single
// interior minimum, so the bracket [1e-6, 1 - 1e-6] is safe.
PsiMinimum minimize_psi(double tol);

struct ConstantSet {
    double c1;                  // min psi, about 2.6920
    double r_star;              // about 0.5638
    double c2;                  // 2 c1 + 1/3, about 5.7174
    double c3;                  // c1 + 1, about 3.6920
    double theorem_a_constant;  // 3.31, the fixed analytic-case constant
};

ConstantSet constant_set(double tol = 1e-12);
const ConstantSet& default_constants();

// (1 + r^2 m^2) / (r (1 - r^2)) with m = w_mod: for any h with Bloch seminorm
// 1 and any |w| <= m, (1 - |w|^2)^2 |(h o phi_w)''(w)| is bounded by this for
// every r in (0, 1). At m = 1/3 it coincides with psi.
double second_derivative_bound(double r, double w_mod);

struct ScalarInequality {
    double lhs;
    double rhs;
};

// lhs = (1 - t^2) log((1 + t)/(1 - t)), rhs = 2t; lhs <= rhs on [0, 1) with
// equality only at t = 0.
ScalarInequality log_displacement_inequality(double t);

// For g = h o phi_w and |zeta| <= 1/3:
//   lhs = (1 - |zeta|^2) |g'(zeta) - g'(0)|,  rhs = c1 |zeta| h_seminorm.
// Throws std::domain_error when |zeta| > 1/3; the bound is only claimed there.
ScalarInequality lemma23_pair(const AnalyticFunction& h, DiskPoint w, DiskPoint zeta,
                              double h_seminorm);

}  // namespace blochlab
