#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cuboid/bigint.hpp"

namespace cuboid {

inline constexpr int kSchemaVersion = 1;

enum class ReportFormat { json, csv };

ReportFormat parse_format(const std::string& name);  // "json" | "csv"
std::string format_name(ReportFormat format);

/// One result record, one line in a results log. Big integers serialize as
/// decimal strings. elapsed_ms is excluded from determinism comparisons.
struct Record {
    int schema_version = kSchemaVersion;
    std::int64_t p = 0;
    std::int64_t q = 0;
    bool has_integer_root = false;
    std::vector<BigInt> witnesses;
    std::uint64_t splits_checked = 0;
    bool oracle_checked = false;
    std::optional<bool> oracle_agrees;  // empty unless oracle_checked
    std::int64_t elapsed_ms = 0;

    bool operator==(const Record&) const = default;
};

/// First line of a results log: tool identity and the normalized command.
struct LogHeader {
    int schema_version = kSchemaVersion;
    std::string tool;
    std::string version;
    std::string command;

    bool operator==(const LogHeader&) const = default;
};

LogHeader make_log_header(const std::string& command);

std::string serialize_record(const Record& record, ReportFormat format);
std::string serialize_header(const LogHeader& header, ReportFormat format);

/// CSV column row (emitted right after the CSV header comment line).
std::string csv_column_row();

/// Parsers throw std::invalid_argument on malformed input.
Record parse_record(const std::string& line, ReportFormat format);
LogHeader parse_header(const std::string& line, ReportFormat format);

/// True for lines that are part of a log's preamble rather than records:
/// the header line and, for CSV, the column row.
bool is_preamble_line(const std::string& line, ReportFormat format);

/// The record with elapsed_ms zeroed, reserialized; preamble lines pass
/// through unchanged. Two logs are compared by canonicalizing every line.
std::string canonical_line(const std::string& line, ReportFormat format);

}  // namespace cuboid
