#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "cuboid/scan.hpp"

using namespace cuboid;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string canonical_log(const std::string& text, ReportFormat format) {
    std::string out;
    for (const auto& line : lines_of(text)) out += canonical_line(line, format) + "\n";
    return out;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("cuboid-test-" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_SUITE("scan") {

TEST_CASE("pair enumeration for 10x10") {
    const auto pairs = scan_pairs(10, 10);
    CHECK(pairs.size() == 62);
    for (const Params& pair : pairs) {
        CHECK(pair.valid_for_decision());
        CHECK(pair.p <= 10);
        CHECK(pair.q <= 10);
    }
    // Deterministic order: ascending p+q, ties by ascending p.
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        const auto a = pairs[i - 1], b = pairs[i];
        CHECK((a.p + a.q < b.p + b.q || (a.p + a.q == b.p + b.q && a.p < b.p)));
    }
    CHECK(pairs.front() == Params{1, 2});
}

TEST_CASE("asymmetric bounds") {
    const auto pairs = scan_pairs(3, 1);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0] == Params{2, 1});
    CHECK(pairs[1] == Params{3, 1});
    CHECK_THROWS_AS(scan_pairs(0, 5), std::invalid_argument);
}

TEST_CASE("logs are byte-identical across worker counts, up to timing") {
    for (ReportFormat format : {ReportFormat::json, ReportFormat::csv}) {
        ScanOptions options;
        options.p_max = 12;
        options.q_max = 12;
        options.format = format;

        std::ostringstream one, many;
        options.jobs = 1;
        const ScanSummary s1 = run_scan_to_stream(options, one);
        options.jobs = 4;
        const ScanSummary s4 = run_scan_to_stream(options, many);

        CHECK(s1.pairs_visited == s4.pairs_visited);
        CHECK(canonical_log(one.str(), format) == canonical_log(many.str(), format));
    }
}

TEST_CASE("scan summary counts") {
    ScanOptions options;
    options.p_max = 10;
    options.q_max = 10;
    options.jobs = 2;
    std::ostringstream out;
    const ScanSummary summary = run_scan_to_stream(options, out);
    CHECK(summary.pairs_total == 62);
    CHECK(summary.pairs_visited == 62);
    CHECK(summary.pairs_skipped == 0);
    CHECK(summary.roots_found == 0);
    CHECK_FALSE(summary.oracle_disagreement);

    const auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 63);  // header + one record per pair
    const LogHeader header = parse_header(lines[0], ReportFormat::json);
    CHECK(header.command == "scan --p-max 10 --q-max 10");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Record r = parse_record(lines[i], ReportFormat::json);
        CHECK_FALSE(r.has_integer_root);
        CHECK_FALSE(r.oracle_checked);
    }
}

TEST_CASE("oracle-checked scans record the agreement flag") {
    ScanOptions options;
    options.p_max = 6;
    options.q_max = 6;
    options.with_oracle = true;
    std::ostringstream out;
    const ScanSummary summary = run_scan_to_stream(options, out);
    CHECK_FALSE(summary.oracle_disagreement);

    const auto lines = lines_of(out.str());
    const LogHeader header = parse_header(lines[0], ReportFormat::json);
    CHECK(header.command == "scan --p-max 6 --q-max 6 --oracle");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Record r = parse_record(lines[i], ReportFormat::json);
        REQUIRE(r.oracle_checked);
        REQUIRE(r.oracle_agrees.has_value());
        REQUIRE(*r.oracle_agrees);
    }
}

TEST_CASE("job count defaults respect the environment override") {
    setenv("CUBOIDCHECK_JOBS", "3", 1);
    CHECK(default_jobs() == 3);
    setenv("CUBOIDCHECK_JOBS", "not-a-number", 1);
    CHECK(default_jobs() >= 1);
    unsetenv("CUBOIDCHECK_JOBS");
    CHECK(default_jobs() >= 1);
}

TEST_CASE("resume skips completed pairs and reproduces the full log") {
    TempDir dir;
    const auto full_path = dir.path / "full.jsonl";
    const auto partial_path = dir.path / "partial.jsonl";

    ScanOptions options;
    options.p_max = 8;
    options.q_max = 8;
    options.jobs = 2;

    options.out_path = full_path.string();
    run_scan(options);
    const auto full_lines = lines_of(read_file(full_path));

    // Simulate an interruption at a record boundary: keep the header and the
    // first 10 records.
    {
        std::ofstream partial(partial_path);
        for (std::size_t i = 0; i < 11 && i < full_lines.size(); ++i) {
            partial << full_lines[i] << '\n';
        }
    }

    options.out_path = partial_path.string();
    options.resume = true;
    const ScanSummary resumed = run_scan(options);
    CHECK(resumed.pairs_skipped == 10);
    CHECK(resumed.pairs_visited == resumed.pairs_total - 10);

    CHECK(canonical_log(read_file(partial_path), ReportFormat::json) ==
          canonical_log(read_file(full_path), ReportFormat::json));

    // Resuming a complete log is a no-op.
    const ScanSummary again = run_scan(options);
    CHECK(again.pairs_visited == 0);
    CHECK(again.pairs_skipped == again.pairs_total);
    CHECK(canonical_log(read_file(partial_path), ReportFormat::json) ==
          canonical_log(read_file(full_path), ReportFormat::json));
}

TEST_CASE("corrupt log lines abort the resume with a line number") {
    TempDir dir;
    const auto path = dir.path / "log.jsonl";

    ScanOptions options;
    options.p_max = 5;
    options.q_max = 5;
    options.out_path = path.string();
    run_scan(options);

    {
        std::ofstream out(path, std::ios::app);
        out << "{\"p\": 3, garbage\n";
    }

    options.resume = true;
    try {
        run_scan(options);
        FAIL("expected ScanError");
    } catch (const ScanError& e) {
        const auto expected_line = lines_of(read_file(path)).size();
        CHECK(e.line_number() == expected_line);
        CHECK(std::string(e.what()).find(std::to_string(expected_line)) != std::string::npos);
    }
}

TEST_CASE("resume rejects a log written by a different command") {
    TempDir dir;
    const auto path = dir.path / "log.jsonl";

    ScanOptions options;
    options.p_max = 5;
    options.q_max = 5;
    options.out_path = path.string();
    run_scan(options);

    options.p_max = 6;  // different bounds, same file
    options.resume = true;
    CHECK_THROWS_AS(run_scan(options), ScanError);
}

TEST_CASE("usage errors") {
    ScanOptions options;
    options.resume = true;
    CHECK_THROWS_AS(run_scan(options), std::invalid_argument);
    options.resume = false;
    options.out_path = "/nonexistent-dir-xyz/log.jsonl";
    CHECK_THROWS_AS(run_scan(options), std::invalid_argument);
}

}  // TEST_SUITE
