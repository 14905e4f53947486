// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exits nonzero if any fail.
//
// Usage: acceptance [--cli PATH]   (PATH: the cuboidcheck binary, used by
// the log-determinism criterion; defaults to $CUBOIDCHECK_BIN)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../support/symbolic_oracle.hpp"
#include "cuboid/report.hpp"
#include "cuboid/selftest.hpp"
#include "cuboid/special_cases.hpp"
#include "cuboid/structural.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

/// Criterion 7: a single sign flip in the residual term table must break the
/// closed-form pins somewhere in 1 <= p <= 10000.
bool sign_flip_detected(std::size_t term_index) {
    const auto base = cuboid::split_residual_terms();
    std::vector<cuboid::ResidualTerm> mutated(base.begin(), base.end());
    mutated[term_index].coefficient = -mutated[term_index].coefficient;
    for (std::int64_t p = 1; p <= 10000; ++p) {
        const bool pins_hold =
            cuboid::split_residual_with_terms({p, 1, 1, 1, 1, 1}, mutated) ==
                cuboid::closed_form_a(p) &&
            cuboid::split_residual_with_terms({1, p, 1, 1, 1, 1}, mutated) ==
                cuboid::closed_form_b(p) &&
            cuboid::split_residual_with_terms({1, 1, p, 1, 1, 1}, mutated) ==
                cuboid::closed_form_c(p);
        if (!pins_hold) return true;
    }
    return false;
}

int run_cli(const std::string& cli, const std::string& args) {
    const std::string command = cli + " " + args + " >/dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string canonical_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::string line, out;
    while (std::getline(in, line)) {
        out += cuboid::canonical_line(line, cuboid::ReportFormat::json) + "\n";
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    if (const char* env = std::getenv("CUBOIDCHECK_BIN")) cli = env;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
    }

    bool all_passed = true;
    auto report = [&](int criterion, bool ok, const std::string& what) {
        std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
        std::fflush(stdout);
        all_passed = all_passed && ok;
    };

    {
        const auto start = clock_type::now();
        const auto r = cuboid::selftest::check_oracle_equivalence(40);
        const double elapsed = seconds_since(start);
        const bool in_time = elapsed < 300.0;
        std::ostringstream what;
        what << "exhaustive equivalence, " << r.detail << " ("
             << static_cast<int>(elapsed * 1000) << " ms, limit 5 min)";
        report(1, r.passed && in_time, what.str());
    }

    {
        const auto r = cuboid::selftest::check_symmetry_suite(200, 1000);
        report(2, r.passed, "inversion and parity symmetry suite, " + r.detail);
    }

    {
        const auto start = clock_type::now();
        const auto r = cuboid::selftest::check_special_case_pins(10000);
        const double elapsed = seconds_since(start);
        const bool in_time = elapsed < 60.0;
        std::ostringstream what;
        what << "prime special-case pins, " << r.detail << " ("
             << static_cast<int>(elapsed * 1000) << " ms, limit 1 min)";
        report(3, r.passed && in_time, what.str());
    }

    {
        const bool confirmed = testsupport::confirm_root_residual_identity();
        const auto r = cuboid::selftest::check_root_residual_identity(1000, 1000);
        report(4, confirmed && r.passed,
               std::string("root-residual identity, symbolic confirmation ") +
                   (confirmed ? "ok" : "FAILED") + ", " + r.detail);
    }

    {
        const bool confirmed = testsupport::confirm_split_bridge_identity();
        const auto r = cuboid::selftest::check_split_bridge_identity(1000, 1000);
        report(5, confirmed && r.passed,
               std::string("split bridge identity, symbolic confirmation ") +
                   (confirmed ? "ok" : "FAILED") + ", " + r.detail);
    }

    {
        const auto implied = cuboid::selftest::check_implied_relations(200, 500);
        const auto reconstruct = cuboid::selftest::check_reconstruction_iff(200, 500);
        report(6, implied.passed && reconstruct.passed,
               "implied relations (" + implied.detail + ") and reconstruction (" +
                   reconstruct.detail + ")");
    }

    {
        const std::size_t term_count = cuboid::split_residual_terms().size();
        std::size_t detected = 0;
        for (std::size_t i = 0; i < term_count; ++i) {
            if (sign_flip_detected(i)) ++detected;
        }
        std::ostringstream what;
        what << "transcription sensitivity: " << detected << "/" << term_count
             << " single-term sign flips break the closed-form pins";
        report(7, detected == term_count, what.str());
    }

    {
        bool ok = false;
        std::string what = "log determinism across worker counts";
        if (cli.empty()) {
            what += " (no CLI path; pass --cli or set CUBOIDCHECK_BIN)";
        } else {
            namespace fs = std::filesystem;
            const fs::path dir = fs::temp_directory_path() /
                                 ("cuboid-acceptance-" + std::to_string(std::random_device{}()));
            fs::create_directories(dir);
            const fs::path one = dir / "jobs1.jsonl";
            const fs::path eight = dir / "jobs8.jsonl";
            const int rc1 =
                run_cli(cli, "scan --p-max 20 --q-max 20 --jobs 1 --out " + one.string());
            const int rc8 =
                run_cli(cli, "scan --p-max 20 --q-max 20 --jobs 8 --out " + eight.string());
            if (rc1 != 0 || rc8 != 0) {
                what += " (scan exited with " + std::to_string(rc1) + "/" +
                        std::to_string(rc8) + ")";
            } else {
                const std::string a = canonical_file(one);
                const std::string b = canonical_file(eight);
                ok = !a.empty() && a == b;
                what += ok ? ": 1-worker and 8-worker scans agree byte-for-byte "
                             "(timing field excluded)"
                           : ": logs differ";
            }
            fs::remove_all(dir);
        }
        report(8, ok, what);
    }

    return all_passed ? 0 : 1;
}
