#include "cuboid/report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cuboid/version.hpp"

namespace cuboid {

namespace {

using ordered_json = nlohmann::ordered_json;

BigInt parse_bigint(const std::string& text) {
    BigInt v;
    if (text.empty() || mpz_set_str(v.get_mpz_t(), text.c_str(), 10) != 0) {
        throw std::invalid_argument("malformed integer '" + text + "'");
    }
    return v;
}

std::vector<std::string> split_fields(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) out.push_back(field);
    if (!line.empty() && line.back() == sep) out.push_back("");
    return out;
}

bool parse_bool(const std::string& text) {
    if (text == "true") return true;
    if (text == "false") return false;
    throw std::invalid_argument("malformed boolean '" + text + "'");
}

std::int64_t strict_int(const std::string& text) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed integer field '" + text + "'");
    }
    if (used != text.size()) throw std::invalid_argument("malformed integer field '" + text + "'");
    return v;
}

}  // namespace

ReportFormat parse_format(const std::string& name) {
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    throw std::invalid_argument("unknown report format '" + name + "'");
}

std::string format_name(ReportFormat format) {
    return format == ReportFormat::json ? "json" : "csv";
}

LogHeader make_log_header(const std::string& command) {
    return {kSchemaVersion, std::string(kToolName), std::string(kToolVersion), command};
}

std::string csv_column_row() {
    return "schema_version,p,q,has_integer_root,witnesses,splits_checked,"
           "oracle_checked,oracle_agrees,elapsed_ms";
}

std::string serialize_record(const Record& r, ReportFormat format) {
    if (format == ReportFormat::json) {
        ordered_json j;
        j["schema_version"] = r.schema_version;
        j["p"] = r.p;
        j["q"] = r.q;
        j["has_integer_root"] = r.has_integer_root;
        ordered_json witnesses = ordered_json::array();
        for (const BigInt& w : r.witnesses) witnesses.push_back(w.get_str());
        j["witnesses"] = std::move(witnesses);
        j["splits_checked"] = r.splits_checked;
        j["oracle_checked"] = r.oracle_checked;
        if (r.oracle_agrees.has_value()) {
            j["oracle_agrees"] = *r.oracle_agrees;
        } else {
            j["oracle_agrees"] = nullptr;
        }
        j["elapsed_ms"] = r.elapsed_ms;
        return j.dump();
    }

    std::ostringstream out;
    out << r.schema_version << ',' << r.p << ',' << r.q << ','
        << (r.has_integer_root ? "true" : "false") << ',';
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
        if (i > 0) out << ';';
        out << r.witnesses[i].get_str();
    }
    out << ',' << r.splits_checked << ',' << (r.oracle_checked ? "true" : "false") << ',';
    if (r.oracle_agrees.has_value()) out << (*r.oracle_agrees ? "true" : "false");
    out << ',' << r.elapsed_ms;
    return out.str();
}

std::string serialize_header(const LogHeader& h, ReportFormat format) {
    if (format == ReportFormat::json) {
        ordered_json j;
        j["schema_version"] = h.schema_version;
        j["tool"] = h.tool;
        j["version"] = h.version;
        j["command"] = h.command;
        return j.dump();
    }
    return "# " + h.tool + " " + h.version + " schema=" + std::to_string(h.schema_version) +
           " command=" + h.command;
}

Record parse_record(const std::string& line, ReportFormat format) {
    Record r;
    if (format == ReportFormat::json) {
        ordered_json j;
        try {
            j = ordered_json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("malformed record: ") + e.what());
        }
        try {
            r.schema_version = j.at("schema_version").get<int>();
            r.p = j.at("p").get<std::int64_t>();
            r.q = j.at("q").get<std::int64_t>();
            r.has_integer_root = j.at("has_integer_root").get<bool>();
            for (const auto& w : j.at("witnesses")) {
                r.witnesses.push_back(parse_bigint(w.get<std::string>()));
            }
            r.splits_checked = j.at("splits_checked").get<std::uint64_t>();
            r.oracle_checked = j.at("oracle_checked").get<bool>();
            const auto& agrees = j.at("oracle_agrees");
            if (!agrees.is_null()) r.oracle_agrees = agrees.get<bool>();
            r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("malformed record: ") + e.what());
        }
    } else {
        const auto fields = split_fields(line, ',');
        if (fields.size() != 9) {
            throw std::invalid_argument("malformed record: expected 9 csv fields, got " +
                                        std::to_string(fields.size()));
        }
        r.schema_version = static_cast<int>(strict_int(fields[0]));
        r.p = strict_int(fields[1]);
        r.q = strict_int(fields[2]);
        r.has_integer_root = parse_bool(fields[3]);
        if (!fields[4].empty()) {
            for (const auto& w : split_fields(fields[4], ';')) r.witnesses.push_back(parse_bigint(w));
        }
        r.splits_checked = static_cast<std::uint64_t>(strict_int(fields[5]));
        r.oracle_checked = parse_bool(fields[6]);
        if (!fields[7].empty()) r.oracle_agrees = parse_bool(fields[7]);
        r.elapsed_ms = strict_int(fields[8]);
    }
    if (r.schema_version != kSchemaVersion) {
        throw std::invalid_argument("unsupported schema version " +
                                    std::to_string(r.schema_version));
    }
    return r;
}

LogHeader parse_header(const std::string& line, ReportFormat format) {
    LogHeader h;
    if (format == ReportFormat::json) {
        ordered_json j;
        try {
            j = ordered_json::parse(line);
            h.schema_version = j.at("schema_version").get<int>();
            h.tool = j.at("tool").get<std::string>();
            h.version = j.at("version").get<std::string>();
            h.command = j.at("command").get<std::string>();
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("malformed header: ") + e.what());
        }
        return h;
    }
    // "# <tool> <version> schema=<n> command=<...>"
    if (line.rfind("# ", 0) != 0) throw std::invalid_argument("malformed header line");
    std::istringstream in(line.substr(2));
    std::string schema_field;
    if (!(in >> h.tool >> h.version >> schema_field)) {
        throw std::invalid_argument("malformed header line");
    }
    if (schema_field.rfind("schema=", 0) != 0) throw std::invalid_argument("malformed header line");
    h.schema_version = static_cast<int>(strict_int(schema_field.substr(7)));
    std::string rest;
    std::getline(in, rest);
    if (rest.rfind(" command=", 0) != 0) throw std::invalid_argument("malformed header line");
    h.command = rest.substr(9);
    return h;
}

bool is_preamble_line(const std::string& line, ReportFormat format) {
    if (format == ReportFormat::csv) {
        return line.rfind("# ", 0) == 0 || line == csv_column_row();
    }
    try {
        parse_header(line, format);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

std::string canonical_line(const std::string& line, ReportFormat format) {
    if (is_preamble_line(line, format)) return line;
    Record r = parse_record(line, format);
    r.elapsed_ms = 0;
    return serialize_record(r, format);
}

}  // namespace cuboid
