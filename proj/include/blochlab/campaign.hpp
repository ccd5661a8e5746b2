#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blochlab/bounds.hpp"
#include "blochlab/json_io.hpp"
#include "blochlab/seminorms.hpp"

namespace blochlab {

enum class CampaignKind { theorem_a, theorem1, theorem2, lemma21, lemma22, lemma23 };

std::string to_string(CampaignKind kind);
std::optional<CampaignKind> campaign_kind_from_string(std::string_view name);

// Coefficients a_k with Re and Im independently uniform in
// [-scale/(k+1), scale/(k+1)]. Reproducible from (seed, degree, scale).
Polynomial gen_polynomial(std::uint64_t seed, int degree, double scale);

// Sense-preserving harmonic map with dilatation omega = k u z^m (|u| = 1,
// m in {0, 1, 2}) over an h' that is zero-free on the closed disk, with
// min boundary modulus >= 0.1 * max. Returns the map and K = (1+k)/(1-k).
// Throws std::runtime_error if normalization fails 100 times in a row.
std::pair<HarmonicMap, double> gen_quasiregular(std::uint64_t seed, int degree, double k);

// |(1-|z|^2) Lambda_f(z) - (1-|w|^2) Lambda_f(w)| / (rho(z,w) * norm_bh).
double theorem1_quotient(const HarmonicMap& f, double norm_bh, DiskPoint z, DiskPoint w);

// |(1-|z|^2) sqrt(J_f(z)) - (1-|w|^2) sqrt(J_f(w))| / ((K+1) rho(z,w) norm_bhstar).
// Throws std::domain_error unless J_f > 0 at both points.
double theorem2_quotient(const HarmonicMap& f, double norm_bhstar, double K,
                         DiskPoint z, DiskPoint w);

// Full per-trial data, reconstructed on demand for the argmax trial and any
// violations. quotient is the raw ratio lhs / rhs where rhs already carries
// the constant-free factor (rho * norm, times K+1 for the Jacobian kind), so
// quotient is compared directly against bound.
struct TrialRecord {
    std::uint64_t trial_id = 0;
    Json function_spec;
    Complex z{0.0, 0.0};
    Complex w{0.0, 0.0};
    double rho = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double quotient = 0.0;
    double bound = 0.0;
    bool violated = false;

    Json to_json() const;
};

// Per-trial row kept for every trial (CSV export, histogram, merge).
struct TrialSummary {
    std::uint64_t trial_id = 0;
    double rho = 0.0;
    double quotient = 0.0;
    double bound = 0.0;
    bool violated = false;
    bool error = false;
};

struct CampaignOptions {
    SupConfig sup{};
    double k = 0.5;          // dilatation bound for the quasiregular kinds
    int max_degree = 8;      // trial degrees are drawn from 1..max_degree
    double scale = 1.0;
    int threads = 0;         // 0 = hardware concurrency
    bool keep_trials = false;
    double bound_scale = 1.0;  // test hook: scales the bound before the
                               // violation check to exercise failure paths
};

struct CampaignReport {
    std::string campaign_name;
    std::uint64_t seed = 0;
    std::uint64_t n_trials = 0;
    double bound = 0.0;
    double max_quotient = 0.0;      // max over trials of quotient / bound; a
                                    // clean campaign keeps this below 1
    double max_quotient_raw = 0.0;  // same maximum before dividing by bound;
                                    // for sharpness searches this is the
                                    // empirical lower bound on the constant
    double max_quotient_rho_le_third = 0.0;  // per-stratum normalized maxima
    double max_quotient_rho_gt_third = 0.0;
    std::uint64_t n_errors = 0;
    std::uint64_t n_violations = 0;
    TrialRecord argmax_trial;
    std::vector<TrialRecord> violations;  // capped at kMaxStoredViolations
    std::array<std::int64_t, 50> histogram{};  // of quotient/bound over [0, 1]
    std::int64_t runtime_ms = 0;
    std::vector<TrialSummary> trials;  // populated when keep_trials

    static constexpr std::size_t kMaxStoredViolations = 256;

    // runtime_ms is emitted as 0 unless include_timing is set, keeping the
    // serialized report byte-identical across runs and thread counts.
    Json to_json(bool include_timing = false) const;
    std::string to_csv() const;  // requires keep_trials
};

CampaignReport run_campaign(CampaignKind kind, std::uint64_t seed, std::uint64_t n_trials,
                            const CampaignOptions& opts = {});
CampaignReport run_campaign(CampaignKind kind, std::uint64_t seed, std::uint64_t n_trials,
                            const SupConfig& cfg);

// Difference quotient |h(x) - h(x+t)| / t of h(z) = log(1 - z^2) on the real
// axis against reference 1/(1-x). quotient >= 0.9 * reference whenever
// x >= 0.9 and t <= (1-x)/100, and grows without bound as x -> 1.
struct WitnessPair {
    double quotient;
    double reference;
};
WitnessPair non_lipschitz_witness(double x, double t);

// Random scan plus local hill climbing over (function, z, w), maximizing the
// raw quotient. The result is an empirical lower bound for the best possible
// constant, not a sharpness claim. Kinds: theorem1 and theorem2 only.
CampaignReport sharpness_search(CampaignKind kind, std::uint64_t seed, std::uint64_t budget,
                                const CampaignOptions& opts = {});

}  // namespace blochlab
