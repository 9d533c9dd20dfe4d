#include "lagroot/harness.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

namespace lagroot {

void TrialConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (min_degree < 1) throw std::invalid_argument("min_degree must be >= 1");
    if (min_degree > max_degree) throw std::invalid_argument("min_degree must not exceed max_degree");
    if (root_range < 0) throw std::invalid_argument("root_range must be >= 0");
    if (max_denominator < 1) throw std::invalid_argument("max_denominator must be >= 1");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    // The integers in range alone must supply enough distinct roots.
    if (!allow_repeated_roots && static_cast<unsigned long>(2 * root_range + 1) < max_degree)
        throw std::invalid_argument("root_range too small for max_degree distinct roots");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t draw(Rng& rng, std::uint64_t bound) {
    // Plain modulo; bias is irrelevant for inputs that only need coverage.
    return rng() % bound;
}

long draw_in(Rng& rng, long lo, long hi) {
    return lo + static_cast<long>(draw(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

struct TrialOutcome {
    std::size_t degree = 0;
    std::optional<TrialFailure> failure;
    std::size_t certificates_checked = 0;
};

// Runs `trial(i, rng)` for every index, spread over `workers` threads, and
// folds the outcomes in index order.
TrialReport run_campaign(const TrialConfig& config, std::string campaign,
                         const std::function<TrialOutcome(std::size_t, Rng&)>& trial) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();

    std::vector<TrialOutcome> outcomes(config.trials);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < config.trials; i = next++) {
            Rng rng(trial_seed(config.seed, i));
            outcomes[i] = trial(i, rng);
            if (outcomes[i].failure) outcomes[i].failure->trial_seed = trial_seed(config.seed, i);
        }
    };
    const std::size_t nthreads = std::min(config.workers, config.trials);
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(nthreads);
        for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    }

    TrialReport report;
    report.campaign = std::move(campaign);
    report.seed = config.seed;
    report.trials_run = config.trials;
    for (auto& outcome : outcomes) {
        auto& tally = report.per_degree[outcome.degree];
        ++tally.trials;
        report.certificates_checked += outcome.certificates_checked;
        if (outcome.failure) {
            ++tally.failures;
            report.failures.push_back(std::move(*outcome.failure));
        }
    }
    report.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

std::size_t draw_degree(Rng& rng, const TrialConfig& config) {
    return static_cast<std::size_t>(
        draw_in(rng, static_cast<long>(config.min_degree), static_cast<long>(config.max_degree)));
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(seed ^ splitmix64(index)); }

std::vector<Rational> random_roots(std::size_t count, Rng& rng, long root_range, long max_denominator,
                                   bool allow_repeated_roots) {
    std::vector<Rational> roots;
    roots.reserve(count);
    while (roots.size() < count) {
        Rational r(BigInt(draw_in(rng, -root_range, root_range)), BigInt(draw_in(rng, 1, max_denominator)));
        if (!allow_repeated_roots && std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
        roots.push_back(std::move(r));
    }
    return roots;
}

Polynomial random_real_rooted(std::size_t degree, Rng& rng, const TrialConfig& config) {
    if (degree < 1) throw std::invalid_argument("random_real_rooted needs degree >= 1");
    const auto roots =
        random_roots(degree, rng, config.root_range, config.max_denominator, config.allow_repeated_roots);
    return Polynomial::from_roots(roots);
}

TrialReport run_transform_trials(const TrialConfig& config, TransformKind kind) {
    config.validate();
    const MonomialTransform transform = make_transform(kind, config.max_degree);
    std::string name = kind == TransformKind::laguerre    ? "theorem"
                       : kind == TransformKind::factorial ? "polya_szego"
                                                          : "reflection";
    return run_campaign(config, std::move(name), [&](std::size_t i, Rng& rng) {
        TrialOutcome outcome;
        outcome.degree = draw_degree(rng, config);
        Polynomial p = random_real_rooted(outcome.degree, rng, config);
        auto fail = [&](std::string reason, Polynomial q, RootCertificate cert) {
            outcome.failure = TrialFailure{i, 0, std::move(reason), p, std::move(q), std::move(cert)};
            return outcome;
        };

        const RootCertificate input_cert = certify_real_rooted(p);
        ++outcome.certificates_checked;
        if (auto err = check_certificate(p, input_cert)) return fail("input certificate: " + *err, p, input_cert);
        if (!input_cert.is_real_rooted) return fail("generated input not real-rooted", p, input_cert);

        Polynomial q = apply(transform, p);
        const RootCertificate cert = certify_real_rooted(q);
        ++outcome.certificates_checked;
        if (auto err = check_certificate(q, cert)) return fail("output certificate: " + *err, std::move(q), cert);
        if (!cert.is_real_rooted) return fail("image not real-rooted", std::move(q), cert);
        return outcome;
    });
}

TrialReport run_theorem_trials(const TrialConfig& config) { return run_transform_trials(config, TransformKind::laguerre); }

TrialReport run_polya_szego_trials(const TrialConfig& config) {
    return run_transform_trials(config, TransformKind::factorial);
}

TrialReport run_control_trials(const TrialConfig& config) {
    return run_campaign(config, "control", [&](std::size_t i, Rng& rng) {
        TrialOutcome outcome;
        outcome.degree = draw_degree(rng, config);
        const Polynomial base = random_real_rooted(outcome.degree, rng, config);
        const Rational c(BigInt(draw_in(rng, 1, std::max(1L, config.root_range))),
                         BigInt(draw_in(rng, 1, config.max_denominator)));
        const Polynomial p = base * Polynomial{c, Rational(0), Rational(1)};
        outcome.degree = *p.degree();

        const RootCertificate cert = certify_real_rooted(p);
        ++outcome.certificates_checked;
        if (auto err = check_certificate(p, cert))
            outcome.failure = TrialFailure{i, 0, "certificate: " + *err, base, p, cert};
        else if (cert.is_real_rooted)
            outcome.failure = TrialFailure{i, 0, "certifier accepted a polynomial with complex roots", base, p, cert};
        return outcome;
    });
}

IdentityReport run_identity_check(std::size_t max_n) {
    IdentityReport report;
    report.max_n = max_n;
    const MonomialTransform t = make_factorial_transform(max_n);
    const MonomialTransform reflection = make_reflection_transform(max_n);
    for (std::size_t n = 0; n <= max_n; ++n) {
        const Polynomial direct = laguerre_sum(n);
        if (apply(t, reflection.image(n)) != direct || laguerre_recurrence(n) != direct) {
            report.first_failure = n;
            break;
        }
    }
    return report;
}

Json report_to_json(const TrialReport& report, bool include_elapsed) {
    Json failures = Json::array();
    for (const auto& f : report.failures)
        failures.push_back(Json{{"trial", f.trial},
                                {"trial_seed", f.trial_seed},
                                {"reason", f.reason},
                                {"input", polynomial_to_json(f.input)},
                                {"output", polynomial_to_json(f.output)},
                                {"certificate", certificate_to_json(f.certificate)}});
    Json per_degree = Json::object();
    for (const auto& [degree, tally] : report.per_degree)
        per_degree[std::to_string(degree)] = Json{{"trials", tally.trials}, {"failures", tally.failures}};

    Json out{{"campaign", report.campaign},
             {"trials", report.trials_run},
             {"passed", report.passed()},
             {"failures", std::move(failures)},
             {"per_degree", std::move(per_degree)},
             {"certificates_checked", report.certificates_checked},
             {"seed", report.seed}};
    if (include_elapsed) out["elapsed_ms"] = report.elapsed.count();
    return out;
}

Json identity_report_to_json(const IdentityReport& report) {
    Json out{{"max_n", report.max_n}, {"passed", report.passed()}};
    out["first_failure"] = report.first_failure ? Json(*report.first_failure) : Json(nullptr);
    return out;
}

}  // namespace lagroot
