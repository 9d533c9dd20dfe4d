#ifndef LAGROOT_HARNESS_HPP
#define LAGROOT_HARNESS_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lagroot/io.hpp"
#include "lagroot/polynomial.hpp"
#include "lagroot/realroot.hpp"
#include "lagroot/transforms.hpp"

namespace lagroot {

using Rng = std::mt19937_64;

struct TrialConfig {
    std::size_t trials = 100;
    std::size_t min_degree = 1;
    std::size_t max_degree = 12;
    /// Root numerators are drawn from [-root_range, root_range].
    long root_range = 20;
    /// Root denominators are drawn from [1, max_denominator].
    long max_denominator = 4;
    std::uint64_t seed = 0;
    bool allow_repeated_roots = true;
    /// Worker threads; results do not depend on this.
    std::size_t workers = 1;

    /// Throws std::invalid_argument describing the first inconsistency.
    void validate() const;
};

/// Seed of trial `index`'s private stream.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

std::vector<Rational> random_roots(std::size_t count, Rng& rng, long root_range, long max_denominator,
                                   bool allow_repeated_roots);

/// Product of `degree` linear factors with roots from random_roots().
Polynomial random_real_rooted(std::size_t degree, Rng& rng, const TrialConfig& config);

struct TrialFailure {
    std::size_t trial = 0;
    std::uint64_t trial_seed = 0;
    std::string reason;
    Polynomial input;
    Polynomial output;
    RootCertificate certificate;
};

struct DegreeTally {
    std::size_t trials = 0;
    std::size_t failures = 0;

    friend bool operator==(const DegreeTally&, const DegreeTally&) = default;
};

struct TrialReport {
    std::string campaign;
    std::uint64_t seed = 0;
    std::size_t trials_run = 0;
    /// Sorted by trial index.
    std::vector<TrialFailure> failures;
    std::map<std::size_t, DegreeTally> per_degree;
    /// Certificates re-verified by check_certificate() (inputs and outputs).
    std::size_t certificates_checked = 0;
    std::chrono::milliseconds elapsed{0};

    bool passed() const noexcept { return failures.empty(); }
};

/// p real-rooted, q = L(p) with the Laguerre transform, certify q.
TrialReport run_theorem_trials(const TrialConfig& config);
/// Same loop through the factorial transform x^k -> x^k / k!.
TrialReport run_polya_szego_trials(const TrialConfig& config);
/// Same loop through an arbitrary monomial transform family.
TrialReport run_transform_trials(const TrialConfig& config, TransformKind kind);

/// Negative control: p = (real-rooted) * (x^2 + c), c > 0. A failure is
/// recorded whenever the certifier calls p real-rooted.
TrialReport run_control_trials(const TrialConfig& config);

struct IdentityReport {
    std::size_t max_n = 0;
    std::optional<std::size_t> first_failure;

    bool passed() const noexcept { return !first_failure.has_value(); }
};

/// laguerre_sum(n) == apply(T, (1 - x)^n) == laguerre_recurrence(n) for n <= max_n.
IdentityReport run_identity_check(std::size_t max_n);

Json report_to_json(const TrialReport& report, bool include_elapsed = true);
Json identity_report_to_json(const IdentityReport& report);

}  // namespace lagroot

#endif
