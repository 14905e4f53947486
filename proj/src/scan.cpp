#include "cuboid/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <thread>

#include "cuboid/oracle.hpp"

namespace cuboid {

std::vector<Params> scan_pairs(std::int64_t p_max, std::int64_t q_max) {
    if (p_max < 1 || q_max < 1) throw std::invalid_argument("scan bounds must be >= 1");
    if (p_max > 1000000 || q_max > 1000000) {
        throw std::invalid_argument("scan bounds above 10^6 are not supported");
    }
    std::vector<Params> out;
    for (std::int64_t s = 2; s <= p_max + q_max; ++s) {
        const std::int64_t p_lo = std::max<std::int64_t>(1, s - q_max);
        const std::int64_t p_hi = std::min(p_max, s - 1);
        for (std::int64_t p = p_lo; p <= p_hi; ++p) {
            const std::int64_t q = s - p;
            if (p != q && std::gcd(p, q) == 1) out.push_back({p, q});
        }
    }
    return out;
}

Record compute_record(const Params& params, bool with_oracle) {
    const auto t0 = std::chrono::steady_clock::now();
    Record record;
    record.p = params.p;
    record.q = params.q;
    if (with_oracle) {
        const EquivalenceReport eq = check_equivalence(params);
        record.has_integer_root = eq.structural.has_integer_root;
        record.witnesses = eq.structural.witnesses;
        record.splits_checked = eq.structural.splits_checked;
        record.oracle_checked = true;
        record.oracle_agrees = eq.agree;
    } else {
        const Verdict verdict = decide_roots(params);
        record.has_integer_root = verdict.has_integer_root;
        record.witnesses = verdict.witnesses;
        record.splits_checked = verdict.splits_checked;
    }
    record.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return record;
}

std::string scan_command_line(const ScanOptions& options) {
    std::string cmd = "scan --p-max " + std::to_string(options.p_max) + " --q-max " +
                      std::to_string(options.q_max);
    if (options.with_oracle) cmd += " --oracle";
    if (options.format == ReportFormat::csv) cmd += " --format csv";
    return cmd;
}

unsigned default_jobs() {
    if (const char* env = std::getenv("CUBOIDCHECK_JOBS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

namespace {

struct ResumeState {
    std::set<std::pair<std::int64_t, std::int64_t>> visited;
    bool file_has_content = false;
};

ResumeState load_resume_state(const ScanOptions& options) {
    ResumeState state;
    std::ifstream in(options.out_path);
    if (!in.is_open()) return state;  // nothing to resume; start fresh

    std::string line;
    std::size_t line_number = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) {
            throw ScanError("empty line " + std::to_string(line_number) + " in results log",
                            line_number);
        }
        state.file_has_content = true;
        if (!saw_header) {
            LogHeader header;
            try {
                header = parse_header(line, options.format);
            } catch (const std::invalid_argument& e) {
                throw ScanError("corrupt header at line 1: " + std::string(e.what()), 1);
            }
            if (header.schema_version != kSchemaVersion ||
                header.command != scan_command_line(options)) {
                throw ScanError("results log header does not match this scan (log command '" +
                                    header.command + "', expected '" + scan_command_line(options) +
                                    "')",
                                1);
            }
            saw_header = true;
            continue;
        }
        if (options.format == ReportFormat::csv && line == csv_column_row()) continue;
        Record record;
        try {
            record = parse_record(line, options.format);
        } catch (const std::invalid_argument& e) {
            throw ScanError("corrupt record at line " + std::to_string(line_number) + ": " +
                                e.what(),
                            line_number);
        }
        state.visited.insert({record.p, record.q});
    }
    return state;
}

void accumulate(ScanSummary& summary, const Record& record) {
    ++summary.pairs_visited;
    if (record.has_integer_root) {
        ++summary.roots_found;
        summary.pairs_with_roots.push_back({record.p, record.q});
    }
    if (record.oracle_agrees.has_value() && !*record.oracle_agrees) {
        summary.oracle_disagreement = true;
    }
}

ScanSummary scan_into(const ScanOptions& options, std::ostream& out, bool write_preamble,
                      const std::set<std::pair<std::int64_t, std::int64_t>>& visited) {
    const std::vector<Params> pairs = scan_pairs(options.p_max, options.q_max);

    std::vector<Params> todo;
    todo.reserve(pairs.size());
    for (const Params& pair : pairs) {
        if (!visited.contains({pair.p, pair.q})) todo.push_back(pair);
    }

    ScanSummary summary;
    summary.pairs_total = pairs.size();
    summary.pairs_skipped = pairs.size() - todo.size();

    if (write_preamble) {
        out << serialize_header(make_log_header(scan_command_line(options)), options.format)
            << '\n';
        if (options.format == ReportFormat::csv) out << csv_column_row() << '\n';
    }

    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1 || todo.size() <= 1) {
        for (const Params& pair : todo) {
            const Record record = compute_record(pair, options.with_oracle);
            out << serialize_record(record, options.format) << '\n';
            out.flush();
            accumulate(summary, record);
        }
        return summary;
    }

    // Workers fill slots; the writer emits them strictly in scan order. A
    // worker failure stops the scan instead of leaving the writer waiting.
    std::vector<std::optional<Record>> slots(todo.size());
    std::atomic<std::size_t> next{0};
    std::mutex mutex;
    std::condition_variable slot_ready;
    std::exception_ptr worker_error;

    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= todo.size()) return;
            try {
                Record record = compute_record(todo[i], options.with_oracle);
                std::lock_guard lock(mutex);
                slots[i] = std::move(record);
            } catch (...) {
                {
                    std::lock_guard lock(mutex);
                    if (!worker_error) worker_error = std::current_exception();
                }
                next.store(todo.size());
            }
            slot_ready.notify_all();
        }
    };

    std::vector<std::thread> threads;
    const unsigned worker_count = static_cast<unsigned>(
        std::min<std::size_t>(jobs, todo.size()));
    threads.reserve(worker_count);
    for (unsigned i = 0; i < worker_count; ++i) threads.emplace_back(worker);

    for (std::size_t cursor = 0; cursor < todo.size(); ++cursor) {
        std::unique_lock lock(mutex);
        slot_ready.wait(lock, [&] { return slots[cursor].has_value() || worker_error; });
        if (worker_error) break;
        const Record record = std::move(*slots[cursor]);
        slots[cursor].reset();
        lock.unlock();
        out << serialize_record(record, options.format) << '\n';
        out.flush();
        accumulate(summary, record);
    }
    for (auto& t : threads) t.join();
    if (worker_error) std::rethrow_exception(worker_error);
    return summary;
}

}  // namespace

ScanSummary run_scan_to_stream(const ScanOptions& options, std::ostream& out) {
    if (options.resume) throw std::invalid_argument("resume requires an output file");
    return scan_into(options, out, /*write_preamble=*/true, {});
}

ScanSummary run_scan(const ScanOptions& options) {
    if (options.out_path.empty()) {
        if (options.resume) throw std::invalid_argument("--resume requires --out");
        return scan_into(options, std::cout, /*write_preamble=*/true, {});
    }

    ResumeState state;
    if (options.resume) {
        state = load_resume_state(options);
    }

    const auto mode = options.resume && state.file_has_content
                          ? std::ios::out | std::ios::app
                          : std::ios::out | std::ios::trunc;
    std::ofstream out(options.out_path, mode);
    if (!out.is_open()) {
        throw std::invalid_argument("cannot open output path '" + options.out_path + "'");
    }
    return scan_into(options, out, /*write_preamble=*/!state.file_has_content, state.visited);
}

}  // namespace cuboid
