// Acceptance gate: every criterion prints one [PASS]/[FAIL] line with the
// numbers that decided it. Exit code is the number of failed criteria.
// argv[1] (or BLOCH_LAB_BIN) must point at the CLI binary for the
// determinism criterion.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "blochlab/campaign.hpp"
#include "test_support.hpp"

using namespace blochlab;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int n, const std::string& label, bool ok, const std::string& detail) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << label << " ("
              << detail << ")\n";
    std::cout.flush();
    if (!ok) ++g_failures;
}

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(10);
    ss << v;
    return ss.str();
}

std::vector<Complex> random_coeffs(TestRng& rng, int degree) {
    std::vector<Complex> c;
    for (int k = 0; k <= degree; ++k)
        c.emplace_back(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    return c;
}

// 1. psi minimization reproduces c1 and the quartic root, fast
void criterion_constants_c1() {
    const auto t0 = Clock::now();
    const PsiMinimum m = minimize_psi(1e-10);
    const double elapsed = ms_since(t0);

    const double oracle = std::sqrt((-28.0 + std::sqrt(820.0)) / 2.0);
    const bool ok = m.c1 >= 2.6915 && m.c1 <= 2.6925 && std::abs(m.r_star - oracle) < 1e-6 &&
                    elapsed < 10.0;
    report(1, "minimize_psi(1e-10) pins c1 and r_star", ok,
           "c1=" + fmt(m.c1) + " r_star=" + fmt(m.r_star) + " |r-oracle|=" +
               fmt(std::abs(m.r_star - oracle)) + " in " + fmt(elapsed) + " ms");
}

// 2. derived constants match the printed values and exact relations
void criterion_constants_c2_c3() {
    const ConstantSet c = constant_set(1e-12);
    const double rel2 = std::abs(c.c2 - (2.0 * c.c1 + 1.0 / 3.0));
    const double rel3 = std::abs(c.c3 - (c.c1 + 1.0));
    const bool ok = std::abs(c.c2 - 5.7174) < 2e-3 && std::abs(c.c3 - 3.6920) < 2e-3 &&
                    rel2 < 1e-12 && rel3 < 1e-12;
    report(2, "c2 and c3 match printed values with exact relations", ok,
           "c2=" + fmt(c.c2) + " c3=" + fmt(c.c3) + " relation residuals " + fmt(rel2) + ", " +
               fmt(rel3));
}

// 3. the metric identity in three formulations over 1e5 seeded pairs
void criterion_metric_identity() {
    const auto t0 = Clock::now();
    TestRng rng(42);
    double worst = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const DiskPoint z(rng.in_disk(0.99));
        const DiskPoint w(rng.in_disk(0.99));
        const double rho = pseudo_distance(z, w);
        const double direct = 1.0 - rho * rho;
        const double product = one_minus_rho_sq(z, w);
        const double via_deriv =
            (1.0 - std::norm(w.value())) * std::abs(MobiusTransform(z).derivative(w.value()));
        worst = std::max({worst, std::abs(direct - product), std::abs(via_deriv - product),
                          std::abs(direct - via_deriv)});
    }
    const double elapsed = ms_since(t0);
    const bool ok = worst < 1e-12 && elapsed < 1000.0;
    report(3, "metric identity across 1e5 pairs in three forms", ok,
           "max residual " + fmt(worst) + " in " + fmt(elapsed) + " ms");
}

// 4. composition invariance: pointwise transport and matching seminorms
void criterion_composition_invariance() {
    const auto t0 = Clock::now();
    TestRng rng(4242);
    double worst_pointwise = 0.0, worst_norm_rel = 0.0;
    bool ok = true;
    // |w| near 0.9 squeezes the pullback peak into an angular window of
    // width ~(1-|w|)/2, so the sup grid needs the extra angular resolution
    SupConfig cfg;
    cfg.n_radial = 128;
    cfg.n_angular = 512;
    cfg.refine_top = 10;
    for (int trial = 0; trial < 100; ++trial) {
        const HarmonicMap f(make_polynomial(random_coeffs(rng, 8)),
                            make_polynomial(random_coeffs(rng, 8)));
        const DiskPoint w(rng.in_disk(0.9));
        const HarmonicMap composed = compose_with_mobius(f, w);
        const MobiusTransform phi{w};

        for (int i = 0; i < 1000; ++i) {
            const Complex zeta = rng.in_disk(0.99);
            const Complex image = phi.apply(zeta);
            const double lhs = (1.0 - std::norm(zeta)) * composed.bundle(zeta).big_lambda;
            const double rhs = (1.0 - std::norm(image)) * f.bundle(image).big_lambda;
            worst_pointwise = std::max(worst_pointwise, std::abs(lhs - rhs));
        }

        const double a = harmonic_bloch_seminorm(f, cfg).value;
        const double b = harmonic_bloch_seminorm(composed, cfg).value;
        const double c = bloch_type_seminorm(f, cfg).value;
        const double d = bloch_type_seminorm(composed, cfg).value;
        worst_norm_rel = std::max(worst_norm_rel, std::abs(a - b) / std::max(a, 1e-12));
        worst_norm_rel = std::max(worst_norm_rel, std::abs(c - d) / std::max(c, 1e-12));
    }
    const double elapsed = ms_since(t0);
    ok = worst_pointwise < 1e-10 && worst_norm_rel < 1e-4 && elapsed < 60000.0;
    report(4, "composition invariance, pointwise and seminorm level", ok,
           "pointwise " + fmt(worst_pointwise) + ", seminorm rel " + fmt(worst_norm_rel) +
               " in " + fmt(elapsed) + " ms");
}

// 5. the seminorm chain on 1e3 generated quasiregular maps plus the
// constant-dilatation family where it is tight
void criterion_seminorm_chain() {
    const auto t0 = Clock::now();
    bool ok = true;
    double worst_slack = 0.0;
    const double ks[] = {0.1, 0.5, 0.9};
    for (int trial = 0; trial < 1000; ++trial) {
        const auto [f, K] = gen_quasiregular(5000 + trial, 1 + (trial % 8), ks[trial % 3]);
        const double bh = harmonic_bloch_seminorm(f).value;
        const double bt = bloch_type_seminorm(f).value;
        const double khat = quasiregularity_constant(f);
        ok = ok && khat <= K + 1e-6;
        ok = ok && bt <= bh * (1.0 + 1e-9) + 1e-12;
        ok = ok && bh <= std::sqrt(khat) * bt * (1.0 + 1e-6) + 1e-9;
        worst_slack = std::max(worst_slack, bh / (std::sqrt(khat) * bt));
    }

    double worst_eq = 0.0;
    for (const double k : ks) {
        const HarmonicMap f(make_polynomial({Complex(0, 0), Complex(1, 0)}),
                            make_polynomial({Complex(0, 0), Complex(k, 0)}));
        const double bh = harmonic_bloch_seminorm(f).value;
        const double bt = bloch_type_seminorm(f).value;
        const double khat = quasiregularity_constant(f);
        worst_eq = std::max(worst_eq, std::abs(bh - std::sqrt(khat) * bt));
    }
    ok = ok && worst_eq < 1e-9;
    report(5, "seminorm chain on 1e3 quasiregular maps, tight family exact", ok,
           "max chain ratio " + fmt(worst_slack) + ", equality gap " + fmt(worst_eq) + " in " +
               fmt(ms_since(t0)) + " ms");
}

// 6. derivative displacement bound and the scalar log inequality
void criterion_displacement_bounds() {
    const auto t0 = Clock::now();
    TestRng rng(666);
    bool ok = true;
    double worst_ratio = 0.0;
    for (int pair = 0; pair < 100; ++pair) {
        const Polynomial h = gen_polynomial(7000 + pair, 1 + (pair % 6), 1.0);
        const double norm = bloch_seminorm(h).value;
        if (norm < 1e-9) continue;
        const DiskPoint w(rng.in_disk(0.85));
        for (int i = 0; i < 100; ++i) {
            const DiskPoint zeta(rng.in_disk(1.0 / 3.0));
            const auto [lhs, rhs] = lemma23_pair(h, w, zeta, norm);
            if (rhs > 0.0) worst_ratio = std::max(worst_ratio, lhs / rhs);
            ok = ok && lhs <= rhs * (1.0 + 1e-6) + 1e-15;
        }
    }

    TestRng trng(667);
    bool scalar_ok = true;
    for (int i = 0; i < 10000; ++i) {
        const double t = trng.uniform(0.0, 1.0 - 1e-6);
        const auto [lhs, rhs] = log_displacement_inequality(t);
        scalar_ok = scalar_ok && lhs <= rhs && (t < 1e-8 || lhs < rhs);
    }
    ok = ok && scalar_ok;
    report(6, "derivative displacement over 1e4 triples, scalar bound over 1e4 points", ok,
           "max lhs/rhs " + fmt(worst_ratio) + ", scalar " +
               (scalar_ok ? "clean" : "violated") + " in " + fmt(ms_since(t0)) + " ms");
}

// 7. the certification campaigns themselves
void criterion_campaigns() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;

    const auto run = [&](CampaignKind kind, std::uint64_t n, double k) {
        CampaignOptions opts;
        opts.k = k;
        const CampaignReport rep = run_campaign(kind, 42, n, opts);
        ok = ok && rep.n_violations == 0 && rep.n_errors == 0;
        if (!detail.empty()) detail += ", ";
        detail += to_string(kind) + (kind == CampaignKind::theorem2 ? "@k=" + fmt(k) : "") +
                  " max " + fmt(rep.max_quotient);
    };

    run(CampaignKind::theorem_a, 100000, 0.5);
    run(CampaignKind::theorem1, 100000, 0.5);
    run(CampaignKind::theorem2, 10000, 0.1);
    run(CampaignKind::theorem2, 10000, 0.5);
    run(CampaignKind::theorem2, 10000, 0.9);

    const double elapsed = ms_since(t0);
    ok = ok && elapsed < 600000.0;
    report(7, "certification campaigns, zero violations", ok,
           detail + " in " + fmt(elapsed / 1000.0) + " s");
}

// 8. the euclidean difference quotient blows past 0.9/(1-x)
void criterion_witness() {
    bool ok = true;
    std::string detail;
    for (const double x : {0.9, 0.99, 0.999}) {
        const WitnessPair wp = non_lipschitz_witness(x, (1.0 - x) / 100.0);
        ok = ok && wp.quotient >= 0.9 * wp.reference;
        if (!detail.empty()) detail += ", ";
        detail += "x=" + fmt(x) + " q=" + fmt(wp.quotient);
    }
    report(8, "non-Lipschitz witness quotients", ok, detail);
}

// 9. byte-identical CLI reports across thread counts
void criterion_determinism(const std::string& cli) {
    if (cli.empty()) {
        report(9, "CLI determinism across thread counts", false, "CLI binary path not provided");
        return;
    }
    const std::string base = " verify --kind theorem1 --trials 1000 --seed 7 ";
    const std::string out1 = "/tmp/bloch_accept_t1.json";
    const std::string out8 = "/tmp/bloch_accept_t8.json";
    const int s1 = std::system(
        ("\"" + cli + "\"" + base + "--threads 1 > " + out1 + " 2>/dev/null").c_str());
    const int s8 = std::system(
        ("\"" + cli + "\"" + base + "--threads 8 > " + out8 + " 2>/dev/null").c_str());

    const auto slurp = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string a = slurp(out1), b = slurp(out8);
    std::remove(out1.c_str());
    std::remove(out8.c_str());

    const bool exited_clean = WIFEXITED(s1) && WEXITSTATUS(s1) == 0 && WIFEXITED(s8) &&
                              WEXITSTATUS(s8) == 0;
    const bool ok = exited_clean && !a.empty() && a == b;
    report(9, "CLI determinism across thread counts", ok,
           std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "DIFFER"));
}

// 10. empirical sharpness lands inside the certified window
void criterion_sharpness() {
    const auto t0 = Clock::now();
    const CampaignReport rep = sharpness_search(CampaignKind::theorem1, 42, 10000);
    const bool ok = rep.max_quotient_raw >= 0.5 && rep.max_quotient_raw <= 5.7174;
    report(10, "sharpness search within [0.5, c2]", ok,
           "empirical max " + fmt(rep.max_quotient_raw) + " in " + fmt(ms_since(t0) / 1000.0) +
               " s");
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    if (argc > 1)
        cli = argv[1];
    else if (const char* env = std::getenv("BLOCH_LAB_BIN"))
        cli = env;

    criterion_constants_c1();
    criterion_constants_c2_c3();
    criterion_metric_identity();
    criterion_composition_invariance();
    criterion_seminorm_chain();
    criterion_displacement_bounds();
    criterion_witness();
    criterion_campaigns();
    criterion_determinism(cli);
    criterion_sharpness();

    std::cout << (g_failures == 0 ? "acceptance: all criteria passed"
                                  : "acceptance: " + std::to_string(g_failures) + " criteria FAILED")
              << "\n";
    return g_failures;
}
