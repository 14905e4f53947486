#include <doctest.h>

#include <random>

#include "cuboid/report.hpp"

using namespace cuboid;

namespace {

Record sample_record() {
    Record r;
    r.p = 2;
    r.q = 1;
    r.has_integer_root = false;
    r.splits_checked = 3;
    r.oracle_checked = true;
    r.oracle_agrees = true;
    r.elapsed_ms = 12;
    return r;
}

Record random_record(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> small(1, 1000000);
    std::uniform_int_distribution<int> coin(0, 1);
    Record r;
    r.p = small(rng);
    r.q = small(rng);
    r.splits_checked = static_cast<std::uint64_t>(small(rng));
    r.elapsed_ms = small(rng);
    r.has_integer_root = coin(rng) == 1;
    if (r.has_integer_root) {
        // Huge witnesses exercise the decimal-string path.
        BigInt w = pow_ui(BigInt(small(rng)), 10) + small(rng);
        r.witnesses = {-w, w};
    }
    r.oracle_checked = coin(rng) == 1;
    if (r.oracle_checked) r.oracle_agrees = coin(rng) == 1;
    return r;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("json record layout") {
    const std::string line = serialize_record(sample_record(), ReportFormat::json);
    CHECK(line ==
          R"({"schema_version":1,"p":2,"q":1,"has_integer_root":false,"witnesses":[],)"
          R"("splits_checked":3,"oracle_checked":true,"oracle_agrees":true,"elapsed_ms":12})");
}

TEST_CASE("csv record layout") {
    const std::string line = serialize_record(sample_record(), ReportFormat::csv);
    CHECK(line == "1,2,1,false,,3,true,true,12");

    Record with_witnesses = sample_record();
    with_witnesses.has_integer_root = true;
    with_witnesses.witnesses = {BigInt(-4), BigInt(4)};
    with_witnesses.oracle_agrees.reset();
    with_witnesses.oracle_checked = false;
    CHECK(serialize_record(with_witnesses, ReportFormat::csv) == "1,2,1,true,-4;4,3,false,,12");
}

TEST_CASE("records round-trip through both formats") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        const Record r = random_record(rng);
        for (ReportFormat format : {ReportFormat::json, ReportFormat::csv}) {
            const std::string line = serialize_record(r, format);
            const Record back = parse_record(line, format);
            REQUIRE(back == r);
            REQUIRE(serialize_record(back, format) == line);
        }
    }
}

TEST_CASE("headers round-trip") {
    const LogHeader header = make_log_header("scan --p-max 20 --q-max 20");
    for (ReportFormat format : {ReportFormat::json, ReportFormat::csv}) {
        const std::string line = serialize_header(header, format);
        CHECK(parse_header(line, format) == header);
        CHECK(is_preamble_line(line, format));
        CHECK(canonical_line(line, format) == line);
    }
    CHECK_FALSE(is_preamble_line(serialize_record(sample_record(), ReportFormat::json),
                                 ReportFormat::json));
}

TEST_CASE("canonical form strips the timing field only") {
    Record a = sample_record();
    Record b = sample_record();
    a.elapsed_ms = 5;
    b.elapsed_ms = 5000;
    for (ReportFormat format : {ReportFormat::json, ReportFormat::csv}) {
        CHECK(canonical_line(serialize_record(a, format), format) ==
              canonical_line(serialize_record(b, format), format));
        b.splits_checked = 99;
        CHECK(canonical_line(serialize_record(a, format), format) !=
              canonical_line(serialize_record(b, format), format));
        b.splits_checked = 3;
    }
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(parse_record("not json", ReportFormat::json), std::invalid_argument);
    CHECK_THROWS_AS(parse_record("{\"schema_version\":1}", ReportFormat::json),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_record("1,2,3", ReportFormat::csv), std::invalid_argument);
    CHECK_THROWS_AS(parse_record("1,2,1,false,,3,true,true,12x", ReportFormat::csv),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_record("9,2,1,false,,3,true,true,12", ReportFormat::csv),
                    std::invalid_argument);  // wrong schema version
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

}  // TEST_SUITE
