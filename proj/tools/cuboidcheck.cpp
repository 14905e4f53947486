// Command-line front end: single-pair verification, exhaustive coprime range
// scans, the prime special-case suites, and the library self-test.
//
// Exit codes: 0 success / no roots, 1 invariant or suite failure, 2 usage
// error, 3 integer root found.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cuboid/oracle.hpp"
#include "cuboid/report.hpp"
#include "cuboid/scan.hpp"
#include "cuboid/selftest.hpp"
#include "cuboid/special_cases.hpp"
#include "cuboid/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRootFound = 3;

int cmd_verify(std::int64_t p, std::int64_t q, bool with_oracle, cuboid::ReportFormat format,
               bool show_poly) {
    const cuboid::Params params{p, q};
    params.require_decision_valid();

    const cuboid::Record record = cuboid::compute_record(params, with_oracle);

    if (format == cuboid::ReportFormat::csv) {
        std::cout << cuboid::csv_column_row() << '\n';
        std::cout << cuboid::serialize_record(record, format) << '\n';
    } else if (show_poly) {
        auto j = nlohmann::ordered_json::parse(cuboid::serialize_record(record, format));
        nlohmann::ordered_json poly;
        const cuboid::IntPolynomial qpq = cuboid::build_qpq(params);
        for (int k = 0; k <= qpq.degree(); ++k) {
            if (qpq.coefficient(k) != 0) poly[std::to_string(k)] = qpq.coefficient(k).get_str();
        }
        j["q_pq"] = std::move(poly);
        std::cout << j.dump() << '\n';
    } else {
        std::cout << cuboid::serialize_record(record, format) << '\n';
    }

    if (record.oracle_agrees.has_value() && !*record.oracle_agrees) {
        std::cerr << "FAILURE: structural decision and brute-force oracle disagree\n";
        return kExitFailure;
    }
    if (record.has_integer_root) {
        std::cerr << "integer root found for p=" << p << " q=" << q << "\n";
        return kExitRootFound;
    }
    return kExitOk;
}

int cmd_scan(const cuboid::ScanOptions& options) {
    const cuboid::ScanSummary summary = cuboid::run_scan(options);
    std::cerr << "scanned " << summary.pairs_visited << " of " << summary.pairs_total
              << " coprime pairs (" << summary.pairs_skipped << " already in log), roots found: "
              << summary.roots_found << "\n";
    if (summary.oracle_disagreement) {
        std::cerr << "FAILURE: at least one pair has a structural/oracle disagreement\n";
        return kExitFailure;
    }
    if (summary.roots_found > 0) {
        for (const auto& pair : summary.pairs_with_roots) {
            std::cerr << "root found at p=" << pair.p << " q=" << pair.q << "\n";
        }
        return kExitRootFound;
    }
    return kExitOk;
}

int cmd_special(std::int64_t prime_max) {
    bool ok = true;

    bool pins_ok = true;
    for (std::int64_t p = 1; p <= prime_max && pins_ok; ++p) {
        const cuboid::OptionResiduals r = cuboid::option_residuals_q1(p);
        pins_ok = r.whole_in_a == cuboid::closed_form_a(p) &&
                  r.whole_in_b == cuboid::closed_form_b(p) &&
                  r.whole_in_c == cuboid::closed_form_c(p) && cuboid::factored_forms_agree(p);
    }
    std::cout << (pins_ok ? "PASS" : "FAIL") << " closed-form pins for p <= " << prime_max << "\n";
    ok = ok && pins_ok;

    const cuboid::PrimeSweepReport with_p = cuboid::verify_no_roots_prime_p(prime_max);
    std::cout << (with_p.all_no_roots() ? "PASS" : "FAIL") << " no-roots sweep, prime p with q=1: "
              << with_p.primes_checked.size() << " primes\n";
    ok = ok && with_p.all_no_roots();

    const cuboid::PrimeSweepReport with_q = cuboid::verify_no_roots_prime_q(prime_max);
    std::cout << (with_q.all_no_roots() ? "PASS" : "FAIL") << " no-roots sweep, prime q with p=1: "
              << with_q.primes_checked.size() << " primes\n";
    ok = ok && with_q.all_no_roots();

    const bool mirror = with_p.primes_checked == with_q.primes_checked &&
                        with_p.failures == with_q.failures;
    std::cout << (mirror ? "PASS" : "FAIL") << " mirror agreement between the two sweeps\n";
    ok = ok && mirror;

    return ok ? kExitOk : kExitFailure;
}

int cmd_selftest() {
    bool ok = true;
    for (const cuboid::selftest::CheckResult& r : cuboid::selftest::run_all()) {
        std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail << "\n";
        ok = ok && r.passed;
    }
    return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact integer-root verification for the parametric degree-10 cuboid "
                 "polynomials"};
    app.set_version_flag("--version", std::string(cuboid::kToolVersion));
    app.require_subcommand(1);

    std::int64_t p = 0, q = 0;
    bool with_oracle = false;
    bool show_poly = false;
    std::string format_name = "json";

    CLI::App* verify = app.add_subcommand("verify", "Decide one parameter pair");
    verify->add_option("--p", p, "First parameter (positive)")->required();
    verify->add_option("--q", q, "Second parameter (positive)")->required();
    verify->add_flag("--oracle", with_oracle, "Cross-check with the brute-force root search");
    verify->add_option("--format", format_name, "Report encoding: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_flag("--show-poly", show_poly, "Include the polynomial coefficients (json only)");

    cuboid::ScanOptions scan_options;
    scan_options.jobs = cuboid::default_jobs();

    CLI::App* scan = app.add_subcommand("scan", "Scan every coprime pair within bounds");
    scan->add_option("--p-max", scan_options.p_max, "Upper bound for p")->required();
    scan->add_option("--q-max", scan_options.q_max, "Upper bound for q")->required();
    scan->add_option("--jobs", scan_options.jobs, "Worker count (default: CUBOIDCHECK_JOBS or "
                                                  "hardware concurrency)");
    scan->add_option("--out", scan_options.out_path, "Results log path (default: stdout)");
    scan->add_flag("--resume", scan_options.resume, "Skip pairs already present in the log");
    scan->add_flag("--oracle", with_oracle, "Cross-check every pair with the brute-force search");
    scan->add_option("--format", format_name, "Report encoding: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    std::int64_t prime_max = 100;
    CLI::App* special = app.add_subcommand("special", "Prime special-case suites");
    special->add_option("--prime-max", prime_max, "Upper bound for the prime sweeps")->required();

    CLI::App* selftest = app.add_subcommand("selftest", "Run all module invariant suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(verify)) {
            return cmd_verify(p, q, with_oracle, cuboid::parse_format(format_name), show_poly);
        }
        if (app.got_subcommand(scan)) {
            scan_options.with_oracle = with_oracle;
            scan_options.format = cuboid::parse_format(format_name);
            return cmd_scan(scan_options);
        }
        if (app.got_subcommand(special)) {
            return cmd_special(prime_max);
        }
        if (app.got_subcommand(selftest)) {
            return cmd_selftest();
        }
    } catch (const cuboid::ScanError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
