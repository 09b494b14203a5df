#include <stdexcept>
#include <string>

#include <doctest.h>

#include "eigengap/report.hpp"

using namespace eigengap;

namespace {

Report sample_report() {
    Report r;
    r.suite = "lemmas";
    r.param("grid", 10000);
    r.param("tol", 1e-9);
    r.param("spacing", "chebyshev");
    r.checks.push_back(
        make_check("xi.ode", "second-order equation", 3.2e-12, 1e-9, 0.4));
    r.checks.push_back(
        make_check("xi.range", "range bounds", 2.0e-8, 1e-9, -1.5));
    return r;
}

}  // namespace

TEST_CASE("format_number uses 12 significant digits") {
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(3.141592653589793) == "3.14159265359");
    CHECK(format_number(-1.0) == "-1");
    CHECK(format_number(1e-9) == "1e-09");
    CHECK(format_number(0.0) == "0");
}

TEST_CASE("json round trip is byte identical after first serialization") {
    const Report r = sample_report();
    const std::string first = to_json(r);
    const Report parsed = report_from_json(first);
    const std::string second = to_json(parsed);
    CHECK(first == second);
    CHECK(parsed.suite == "lemmas");
    REQUIRE(parsed.params.size() == 3);
    CHECK(parsed.params[0].first == "grid");
    CHECK(parsed.params[1].second == "1e-09");
    REQUIRE(parsed.checks.size() == 2);
    CHECK(parsed.checks[0].id == "xi.ode");
    CHECK(parsed.checks[0].pass);
    CHECK_FALSE(parsed.checks[1].pass);
    CHECK_FALSE(parsed.pass());
}

TEST_CASE("serialization is deterministic") {
    CHECK(to_json(sample_report()) == to_json(sample_report()));
}

TEST_CASE("json layout has fixed key order and no timestamps") {
    const std::string text = to_json(sample_report());
    const auto suite_pos = text.find("\"suite\"");
    const auto params_pos = text.find("\"params\"");
    const auto checks_pos = text.find("\"checks\"");
    const auto pass_pos = text.rfind("\"pass\"");
    REQUIRE(suite_pos != std::string::npos);
    CHECK(suite_pos < params_pos);
    CHECK(params_pos < checks_pos);
    CHECK(checks_pos < pass_pos);
    CHECK(text.find("time") == std::string::npos);
    CHECK(text.find("date") == std::string::npos);
}

TEST_CASE("malformed json is rejected") {
    CHECK_THROWS(report_from_json("not json"));
    CHECK_THROWS(report_from_json("{\"suite\": 1}"));
}

TEST_CASE("csv output") {
    std::vector<std::pair<std::string, std::vector<double>>> cols;
    cols.emplace_back("t", std::vector<double>{0.0, 0.5});
    cols.emplace_back("z", std::vector<double>{1.0, 0.75});
    const std::string csv = to_csv(cols);
    CHECK(csv == "t,z\n0,1\n0.5,0.75\n");
    cols[1].second.pop_back();
    CHECK_THROWS_AS(to_csv(cols), std::invalid_argument);
}
