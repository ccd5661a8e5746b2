#include <doctest.h>

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "blochlab/bounds.hpp"
#include "blochlab/seminorms.hpp"
#include "test_support.hpp"

using namespace blochlab;

namespace {

std::vector<Complex> random_coeffs(TestRng& rng, int degree) {
    std::vector<Complex> c;
    for (int k = 0; k <= degree; ++k)
        c.emplace_back(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    return c;
}

}  // namespace

TEST_CASE("psi hand values and domain") {
    // psi(1/3) = (1 + 1/81) / ((1/3)(8/9)) = (82/81)(27/8)
    CHECK(psi(1.0 / 3.0) == doctest::Approx((82.0 / 81.0) * (27.0 / 8.0)).epsilon(1e-14));
    // psi(1/2) = (1 + 1/36) / (3/8)
    CHECK(psi(0.5) == doctest::Approx((37.0 / 36.0) * (8.0 / 3.0)).epsilon(1e-14));
    CHECK(psi(1e-6) > 9.9e5);  // pole at zero

    CHECK_THROWS_AS(psi(0.0), std::domain_error);
    CHECK_THROWS_AS(psi(1.0), std::domain_error);
    CHECK_THROWS_AS(psi(-0.2), std::domain_error);
    CHECK_THROWS_AS(psi(1.2), std::domain_error);
}

TEST_CASE("psi minimization against the algebraic oracle") {
    const auto t0 = std::chrono::steady_clock::now();
    const PsiMinimum m = minimize_psi(1e-10);
    const auto elapsed = std::chrono::steady_clock::now() - t0;

    // the minimizer solves r^4 + 28 r^2 - 9 = 0
    const double oracle = std::sqrt((-28.0 + std::sqrt(820.0)) / 2.0);
    CHECK(std::abs(m.r_star - oracle) < 1e-6);
    const double resid =
        m.r_star * m.r_star * m.r_star * m.r_star + 28.0 * m.r_star * m.r_star - 9.0;
    CHECK(std::abs(resid) < 1e-8);

    CHECK(m.c1 >= 2.6915);
    CHECK(m.c1 <= 2.6925);
    CHECK(m.c1 == doctest::Approx(psi(oracle)).epsilon(1e-12));

    // local minimality
    CHECK(psi(m.r_star + 1e-4) > m.c1);
    CHECK(psi(m.r_star - 1e-4) > m.c1);

    CHECK(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() < 10);
    CHECK_THROWS_AS(minimize_psi(0.0), std::invalid_argument);
    CHECK_THROWS_AS(minimize_psi(-1.0), std::invalid_argument);
}

TEST_CASE("constant set relations") {
    const ConstantSet cs = constant_set(1e-12);
    CHECK(std::abs(cs.c2 - (2.0 * cs.c1 + 1.0 / 3.0)) < 1e-12);
    CHECK(std::abs(cs.c3 - (cs.c1 + 1.0)) < 1e-12);
    CHECK(std::abs(cs.c2 - 5.7174) < 2e-3);
    CHECK(std::abs(cs.c3 - 3.6920) < 2e-3);
    CHECK(cs.theorem_a_constant == 3.31);

    const ConstantSet& cached = default_constants();
    CHECK(cached.c1 == cs.c1);
    CHECK(cached.r_star == cs.r_star);
    CHECK(&default_constants() == &default_constants());
}

TEST_CASE("second derivative bound hand values") {
    // m = 0, r = 1/2: 1 / (0.5 * 0.75) = 8/3
    CHECK(second_derivative_bound(0.5, 0.0) == doctest::Approx(8.0 / 3.0).epsilon(1e-14));

    // at m = 1/3 the bound is psi
    TestRng rng(89);
    for (int i = 0; i < 20; ++i) {
        const double r = rng.uniform(0.05, 0.95);
        CHECK(second_derivative_bound(r, 1.0 / 3.0) == doctest::Approx(psi(r)).epsilon(1e-14));
    }

    // at the psi minimizer it reproduces c1
    const ConstantSet cs = default_constants();
    CHECK(second_derivative_bound(cs.r_star, 1.0 / 3.0) == doctest::Approx(cs.c1).epsilon(1e-12));

    // monotone in w_mod
    CHECK(second_derivative_bound(0.4, 0.2) < second_derivative_bound(0.4, 0.8));

    CHECK_THROWS_AS(second_derivative_bound(0.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(second_derivative_bound(1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(second_derivative_bound(0.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(second_derivative_bound(0.5, -0.1), std::domain_error);
}

TEST_CASE("second derivative bound dominates composed maps") {
    // (1-|w|^2)^2 |(h o phi_w)''(w)| <= min_r bound(r, |w|) * |h|_B
    TestRng rng(97);
    int tested = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int degree = 1 + static_cast<int>(rng.next() % 6);
        const auto coeffs = random_coeffs(rng, degree);
        const DiskPoint w(rng.in_disk(0.8));

        const Polynomial h(coeffs);
        const double norm = bloch_seminorm(h).value;
        if (norm < 1e-9) continue;
        ++tested;

        const AnalyticPtr composed = compose_with_mobius(make_polynomial(coeffs), w);
        const double one_minus = 1.0 - std::norm(w.value());
        const double lhs = one_minus * one_minus * std::abs(composed->deriv2(w.value()));

        double best = 1e300;
        for (int i = 1; i <= 32; ++i)
            best = std::min(best, second_derivative_bound(i / 33.0, w.abs()));
        CHECK(lhs <= best * norm * (1.0 + 1e-6));
    }
    CHECK(tested > 900);
}

TEST_CASE("log displacement inequality hand values") {
    const auto zero = log_displacement_inequality(0.0);
    CHECK(zero.lhs == 0.0);
    CHECK(zero.rhs == 0.0);

    // t = 1/3: lhs = (8/9) ln 2, rhs = 2/3
    const auto third = log_displacement_inequality(1.0 / 3.0);
    CHECK(third.lhs == doctest::Approx((8.0 / 9.0) * std::log(2.0)).epsilon(1e-14));
    CHECK(third.rhs == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(third.lhs <= third.rhs);

    // t = 0.9: lhs = 0.19 ln 19, rhs = 1.8
    const auto nine = log_displacement_inequality(0.9);
    CHECK(nine.lhs == doctest::Approx(0.19 * std::log(19.0)).epsilon(1e-14));
    CHECK(nine.rhs == doctest::Approx(1.8).epsilon(1e-14));

    CHECK_THROWS_AS(log_displacement_inequality(-0.1), std::domain_error);
    CHECK_THROWS_AS(log_displacement_inequality(1.0), std::domain_error);
}

TEST_CASE("log displacement inequality holds on a sweep") {
    TestRng rng(101);
    for (int i = 0; i < 10000; ++i) {
        const double t = rng.uniform(0.0, 1.0 - 1e-6);
        const auto [lhs, rhs] = log_displacement_inequality(t);
        CHECK(lhs <= rhs);
        if (t > 1e-8) CHECK(lhs < rhs);  // equality only at zero
    }
}

TEST_CASE("derivative displacement pair hand values") {
    // zeta = 0 collapses both sides
    const auto at_zero =
        lemma23_pair(LogFixture{}, DiskPoint(0.4, 0.1), DiskPoint(0.0, 0.0), 2.0);
    CHECK(at_zero.lhs == 0.0);
    CHECK(at_zero.rhs == 0.0);

    // h = log fixture, w = 0, zeta = 1/3: lhs = (8/9)|h'(-1/3)| = 2/3,
    // rhs = c1 * (1/3) * 2
    const auto lf = lemma23_pair(LogFixture{}, DiskPoint(0.0, 0.0), DiskPoint(1.0 / 3.0, 0.0), 2.0);
    CHECK(lf.lhs == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(lf.rhs == doctest::Approx(default_constants().c1 * 2.0 / 3.0).epsilon(1e-12));
    CHECK(lf.lhs <= lf.rhs);

    CHECK_THROWS_AS(
        lemma23_pair(LogFixture{}, DiskPoint(0.2, 0.0), DiskPoint(0.34, 0.0), 2.0),
        std::domain_error);
}

TEST_CASE("derivative displacement matches the identity-map closed form") {
    // h = z: (h o phi_w)' = phi_w', so
    // lhs = (1-|zeta|^2)(1-|w|^2) |1/(1-conj(w) zeta)^2 - 1| and the seminorm is 1
    const Polynomial id({Complex(0, 0), Complex(1, 0)});
    TestRng rng(103);
    for (int i = 0; i < 200; ++i) {
        const DiskPoint w(rng.in_disk(0.9));
        const DiskPoint zeta(rng.in_disk(1.0 / 3.0));
        const auto [lhs, rhs] = lemma23_pair(id, w, zeta, 1.0);

        const Complex d = 1.0 - std::conj(w.value()) * zeta.value();
        const double expected = (1.0 - std::norm(zeta.value())) * (1.0 - std::norm(w.value())) *
                                std::abs(1.0 / (d * d) - 1.0);
        CHECK(lhs == doctest::Approx(expected).epsilon(1e-12));
        CHECK(rhs == doctest::Approx(default_constants().c1 * zeta.abs()).epsilon(1e-12));
        CHECK(lhs <= rhs * (1.0 + 1e-9));
    }
}

TEST_CASE("derivative displacement bound holds across a sampling campaign") {
    TestRng rng(107);
    for (int pair = 0; pair < 50; ++pair) {
        const int degree = 1 + static_cast<int>(rng.next() % 6);
        const auto coeffs = random_coeffs(rng, degree);
        const Polynomial h(coeffs);
        const DiskPoint w(rng.in_disk(0.85));
        const double norm = bloch_seminorm(h).value;
        if (norm < 1e-9) continue;
        for (int i = 0; i < 50; ++i) {
            // push a few samples to the |zeta| = 1/3 rim (nudged inward so
            // rounding in polar() cannot overshoot the hypothesis)
            const double rim = (1.0 / 3.0) * (1.0 - 1e-12);
            const DiskPoint zeta(i % 10 == 0 ? Complex(std::polar(rim, rng.uniform(0.0, 6.28)))
                                             : rng.in_disk(1.0 / 3.0));
            const auto [lhs, rhs] = lemma23_pair(h, w, zeta, norm);
            CHECK(lhs <= rhs * (1.0 + 1e-6) + 1e-15);
        }
    }
}
