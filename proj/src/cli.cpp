#include "lagroot/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "lagroot/errors.hpp"
#include "lagroot/harness.hpp"
#include "lagroot/io.hpp"

namespace lagroot::cli {

namespace {

// Inline JSON when the argument opens an object, "-" for stdin, else a file path.
Polynomial read_polynomial(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') return parse_polynomial(arg);
    std::string text;
    if (arg == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(arg);
        if (!in) throw ParseError("cannot read polynomial file '" + arg + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return parse_polynomial(text);
}

std::string pretty_certificate(const RootCertificate& cert) {
    std::ostringstream os;
    os << "degree " << cert.degree << ", square-free degree " << cert.squarefree_degree << ", "
       << cert.distinct_real_roots << " distinct real root(s): "
       << (cert.is_real_rooted ? "real-rooted" : "NOT real-rooted") << '\n';
    for (const auto& iv : cert.isolating_intervals) os << "  (" << iv.lo << ", " << iv.hi << ")\n";
    return os.str();
}

std::string pretty_report(const TrialReport& report) {
    std::ostringstream os;
    os << report.campaign << ": " << report.trials_run << " trials, " << report.failures.size()
       << " failure(s), seed " << report.seed << ", " << report.elapsed.count() << " ms\n";
    for (const auto& [degree, tally] : report.per_degree)
        os << "  degree " << degree << ": " << tally.trials << " trials, " << tally.failures << " failures\n";
    for (const auto& f : report.failures)
        os << "  trial " << f.trial << " (stream seed " << f.trial_seed << "): " << f.reason << "\n    input  "
           << to_pretty_string(f.input) << "\n    output " << to_pretty_string(f.output) << '\n';
    return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Monomial-basis transforms and exact real-rootedness certification", "lagroot"};
    app.require_subcommand(1, 1);

    bool pretty = false;
    app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");

    std::size_t laguerre_n = 0;
    auto* laguerre_cmd = app.add_subcommand("laguerre", "Print the Laguerre polynomial L_n");
    laguerre_cmd->add_option("n", laguerre_n, "Index n >= 0")->required();

    std::string transform_name = "laguerre";
    std::string poly_arg;
    std::optional<std::size_t> table_degree;
    auto* apply_cmd = app.add_subcommand("apply", "Apply a monomial transform to a polynomial");
    apply_cmd->add_option("--transform", transform_name, "laguerre, factorial or reflection")->required();
    apply_cmd->add_option("--max-degree", table_degree,
                          "Transform table size (defaults to the polynomial's degree)");
    apply_cmd->add_option("poly", poly_arg, "Polynomial JSON, file path, or - for stdin")->required();

    auto* certify_cmd = app.add_subcommand("certify", "Certify real-rootedness (exit 1 when not real-rooted)");
    certify_cmd->add_option("poly", poly_arg, "Polynomial JSON, file path, or - for stdin")->required();

    auto* isolate_cmd = app.add_subcommand("isolate", "Isolating intervals for the distinct real roots");
    isolate_cmd->add_option("poly", poly_arg, "Polynomial JSON, file path, or - for stdin")->required();

    std::size_t identity_max_n = 0;
    auto* identity_cmd =
        app.add_subcommand("identity-check", "Check laguerre_sum(n) = T((1-x)^n) = recurrence(n) for n <= max_n");
    identity_cmd->add_option("max_n", identity_max_n, "Largest n to check")->required();

    TrialConfig config;
    config.allow_repeated_roots = false;
    std::string campaign = "laguerre";
    auto* trials_cmd = app.add_subcommand("trials", "Randomized real-rootedness campaign (exit 1 on failures)");
    trials_cmd->add_option("--transform", campaign, "laguerre or factorial");
    trials_cmd->add_option("--seed", config.seed);
    trials_cmd->add_option("--trials", config.trials);
    trials_cmd->add_option("--min-degree", config.min_degree);
    trials_cmd->add_option("--max-degree", config.max_degree);
    trials_cmd->add_option("--root-range", config.root_range);
    trials_cmd->add_option("--max-denominator", config.max_denominator);
    trials_cmd->add_flag("--allow-repeats", config.allow_repeated_roots);
    trials_cmd->add_option("--workers", config.workers);

    for (auto* sub : {laguerre_cmd, apply_cmd, certify_cmd, isolate_cmd, identity_cmd, trials_cmd})
        sub->add_flag("--pretty", pretty, "Human-readable output instead of JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (*laguerre_cmd) {
            const Polynomial l = laguerre_sum(laguerre_n);
            out << (pretty ? to_pretty_string(l) : format_polynomial(l)) << '\n';
            return ok;
        }
        if (*apply_cmd) {
            const TransformKind kind = parse_transform_kind(transform_name);
            const Polynomial p = read_polynomial(poly_arg);
            const std::size_t size = table_degree.value_or(p.degree().value_or(0));
            const Polynomial q = apply(make_transform(kind, size), p);
            out << (pretty ? to_pretty_string(q) : format_polynomial(q)) << '\n';
            return ok;
        }
        if (*certify_cmd) {
            const RootCertificate cert = certify_real_rooted(read_polynomial(poly_arg));
            out << (pretty ? pretty_certificate(cert) : format_certificate(cert) + '\n');
            return cert.is_real_rooted ? ok : negative;
        }
        if (*isolate_cmd) {
            const Polynomial p = read_polynomial(poly_arg);
            if (p.is_constant()) throw std::domain_error("isolate requires a polynomial of degree >= 1");
            const auto intervals = isolate_roots(p);
            if (pretty) {
                for (const auto& iv : intervals) out << '(' << iv.lo << ", " << iv.hi << ")\n";
            } else {
                Json list = Json::array();
                for (const auto& iv : intervals) list.push_back(interval_to_json(iv));
                out << dump_json(Json{{"intervals", std::move(list)}}) << '\n';
            }
            return ok;
        }
        if (*identity_cmd) {
            const IdentityReport report = run_identity_check(identity_max_n);
            if (pretty) {
                if (report.passed())
                    out << "identity holds for all n <= " << report.max_n << '\n';
                else
                    out << "identity fails at n = " << *report.first_failure << '\n';
            } else {
                out << dump_json(identity_report_to_json(report)) << '\n';
            }
            return report.passed() ? ok : negative;
        }
        if (*trials_cmd) {
            const TransformKind kind = parse_transform_kind(campaign);
            if (kind == TransformKind::reflection)
                throw ParseError("trials supports --transform laguerre or factorial");
            config.validate();
            const TrialReport report = run_transform_trials(config, kind);
            out << (pretty ? pretty_report(report) : dump_json(report_to_json(report)) + '\n');
            if (!report.passed()) err << "campaign found " << report.failures.size() << " failure(s)\n";
            return report.passed() ? ok : negative;
        }
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << '\n';
        return capacity;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return capacity;
    }
    return usage;
}

}  // namespace lagroot::cli
