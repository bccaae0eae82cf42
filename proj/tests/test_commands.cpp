#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ellperim/bounds.hpp"
#include "ellperim/commands.hpp"
#include "ellperim/errors.hpp"
#include "reference_values.hpp"
#include "test_support.hpp"

using namespace ellperim;
using namespace ellperim::testing;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

template <class Command>
Run run(Command command) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = command(out, err);
    return {code, out.str(), err.str()};
}

CommandOptions with_format(OutputFormat format) {
    CommandOptions options;
    options.format = format;
    return options;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto& row = rows.emplace_back();
        std::istringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) {
            row.push_back(field);
        }
    }
    return rows;
}

double number(const std::string& field) { return std::strtod(field.c_str(), nullptr); }

}  // namespace

TEST_CASE("perimeter command") {
    const auto csv = with_format(OutputFormat::Csv);
    const auto agm = run([&](auto& o, auto& e) { return cmd_perimeter(1, 1, "agm", csv, o, e); });
    CHECK(agm.code == kExitSuccess);
    const auto rows = parse_csv(agm.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"method", "a", "b", "value"});
    CHECK(relative_error(number(rows[1][3]), 2.0 * std::numbers::pi) < 1e-15);

    const auto gk =
        run([&](auto& o, auto& e) { return cmd_perimeter(2, 1, "gauss-kummer", csv, o, e); });
    CHECK(gk.code == kExitSuccess);
    const auto gk_rows = parse_csv(gk.out);
    CHECK(gk_rows[0].back() == "converged");
    CHECK(relative_error(number(gk_rows[1][3]), kPerimeter2_1) < 1e-15);
    CHECK(gk_rows[1][5] == "true");

    for (const auto& method : perimeter_methods()) {
        const auto result =
            run([&](auto& o, auto& e) { return cmd_perimeter(2, 1, method, csv, o, e); });
        CHECK_MESSAGE(result.code == kExitSuccess, method);
    }

    const auto unknown =
        run([&](auto& o, auto& e) { return cmd_perimeter(1, 1, "nope", csv, o, e); });
    CHECK(unknown.code == kExitUsage);
    CHECK(unknown.out.empty());

    const auto cayley =
        run([&](auto& o, auto& e) { return cmd_perimeter(1, 0, "cayley", csv, o, e); });
    CHECK(cayley.code == kExitFailure);
    CHECK(cayley.err.find("cayley undefined at b=0") != std::string::npos);

    const auto negative =
        run([&](auto& o, auto& e) { return cmd_perimeter(-1, 1, "agm", csv, o, e); });
    CHECK(negative.code == kExitFailure);

    // Axis order does not matter.
    const auto swapped = run([&](auto& o, auto& e) { return cmd_perimeter(1, 2, "agm", csv, o, e); });
    CHECK(parse_csv(swapped.out)[1][3] == parse_csv(
        run([&](auto& o, auto& e) { return cmd_perimeter(2, 1, "agm", csv, o, e); }).out)[1][3]);
}

TEST_CASE("bounds command") {
    const auto result = run([](auto& o, auto& e) {
        return cmd_bounds(2, 1, with_format(OutputFormat::Json), o, e);
    });
    CHECK(result.code == kExitSuccess);
    const auto doc = nlohmann::json::parse(result.out);
    CHECK(doc.at("meta").at("oracle_inside") == true);
    std::map<std::string, double> values;
    for (const auto& row : doc.at("rows")) {
        values[row.at("quantity")] = row.at("value").get<double>();
    }
    CHECK(values.at("lower_geometric") == doctest::Approx(8.8857659).epsilon(1e-8));
    CHECK(values.at("lower_arithmetic") == doctest::Approx(9.4247780).epsilon(1e-8));
    CHECK(relative_error(values.at("oracle"), kPerimeter2_1) < 1e-15);
    CHECK(relative_error(values.at("upper_log"), kUpperLog2_1) < 1e-15);
    CHECK(values.at("upper_linear") == doctest::Approx(11.1415927).epsilon(1e-8));
    CHECK(values.at("oracle_position") > 0.0);
    CHECK(values.at("oracle_position") < 1.0);

    const auto segment = run([](auto& o, auto& e) {
        return cmd_bounds(1, 0, with_format(OutputFormat::Csv), o, e);
    });
    const auto rows = parse_csv(segment.out);
    CHECK(rows[3] == std::vector<std::string>{"oracle", "4"});
    CHECK(rows[6][1] == format_number(std::numbers::pi));
    CHECK(rows[7][1] == "4");
}

TEST_CASE("compare command and the as-printed switch") {
    const auto corrected = run([](auto& o, auto& e) {
        return cmd_compare(2, 1, with_format(OutputFormat::Csv), o, e);
    });
    CHECK(corrected.code == kExitSuccess);
    const auto rows = parse_csv(corrected.out);
    REQUIRE(rows.size() == 12);
    CHECK(rows[0] == std::vector<std::string>{"rank", "id", "value", "abs_error", "rel_error"});
    CHECK(rows[1][1] == "ramanujan2");
    CHECK(std::abs(number(rows[1][4])) < 1e-7);
    CHECK(rows[11][1] == "kepler");

    auto printed_options = with_format(OutputFormat::Csv);
    printed_options.transcription = Transcription::AsPrinted;
    const auto printed = run([&](auto& o, auto& e) { return cmd_compare(2, 1, printed_options, o, e); });
    for (const auto& row : parse_csv(printed.out)) {
        if (row[1] == "ramanujan2") {
            CHECK(std::abs(number(row[4])) > 1e-2);
        }
    }

    const auto circle = run([](auto& o, auto& e) {
        return cmd_compare(1, 1, with_format(OutputFormat::Csv), o, e);
    });
    const auto circle_rows = parse_csv(circle.out);
    for (std::size_t i = 1; i < circle_rows.size(); ++i) {
        CHECK(std::abs(number(circle_rows[i][4])) < 1e-12);
    }
}

TEST_CASE("sweep rows") {
    const auto rows = sweep_rows(2.0, 0.0, 2.0, 201);
    REQUIRE(rows.size() == 201);
    CHECK(rows.front().b == 0.0);
    CHECK(rows.back().b == 2.0);
    CHECK(rows.front().f1 == 2.0);
    CHECK(rows.front().f2 == 2.0);
    CHECK(rows.front().oracle == 2.0);
    CHECK(rows.back().f1 == 2.0 + std::numbers::pi / 2.0);
    CHECK(rows.back().f2 == std::numbers::pi);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i - 1].b < rows[i].b);
        CHECK(rows[i].f2 <= rows[i].f1);
        CHECK(rows[i].oracle <= rows[i].f2);
        CHECK(rows[i].upper_log == 4.0 * rows[i].f2);
    }

    const auto at_root3 = sweep_rows(2.0, std::sqrt(3.0), 2.0, 2).front();
    CHECK(relative_error(at_root3.f1, kSweepF1) < 1e-15);
    CHECK(relative_error(at_root3.f2, kSweepF2) < 1e-15);
    CHECK(relative_error(at_root3.oracle, kSweepQuarter) < 1e-15);

    CHECK_THROWS_AS(sweep_rows(2.0, 1.0, 1.0, 10), DomainError);
    CHECK_THROWS_AS(sweep_rows(2.0, -0.1, 1.0, 10), DomainError);
    CHECK_THROWS_AS(sweep_rows(2.0, 0.0, 2.5, 10), DomainError);
    CHECK_THROWS_AS(sweep_rows(2.0, 0.0, 2.0, 1), DomainError);
}

TEST_CASE("sweep csv and json round-trip bit-exactly") {
    const auto expected = sweep_rows(2.0, 0.01, 2.0, 37);
    const auto csv = run([](auto& o, auto& e) {
        return cmd_sweep(2.0, 0.01, 2.0, 37, with_format(OutputFormat::Csv), o, e);
    });
    CHECK(csv.code == kExitSuccess);
    const auto rows = parse_csv(csv.out);
    REQUIRE(rows.size() == expected.size() + 1);
    CHECK(rows[0] == std::vector<std::string>{"b", "f1", "f2", "oracle", "upper_linear",
                                              "upper_log", "perimeter"});
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(number(rows[i + 1][0]) == expected[i].b);
        CHECK(number(rows[i + 1][2]) == expected[i].f2);
        CHECK(number(rows[i + 1][6]) == expected[i].perimeter);
    }

    const auto json = run([](auto& o, auto& e) {
        return cmd_sweep(2.0, 0.01, 2.0, 37, with_format(OutputFormat::Json), o, e);
    });
    const auto doc = nlohmann::json::parse(json.out);
    REQUIRE(doc.at("rows").size() == expected.size());
    CHECK(doc.at("meta").at("version") == std::string(kVersion));
    CHECK(doc.at("meta").at("agm_tol").get<double>() == 1e-15);
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(doc.at("rows")[i].at("oracle").get<double>() == expected[i].oracle);
        CHECK(doc.at("rows")[i].at("f1").get<double>() == expected[i].f1);
    }

    // Byte determinism.
    const auto again = run([](auto& o, auto& e) {
        return cmd_sweep(2.0, 0.01, 2.0, 37, with_format(OutputFormat::Json), o, e);
    });
    CHECK(again.out == json.out);

    const auto invalid = run([](auto& o, auto& e) {
        return cmd_sweep(2.0, 1.5, 1.0, 37, with_format(OutputFormat::Csv), o, e);
    });
    CHECK(invalid.code == kExitFailure);
}

TEST_CASE("check command") {
    const auto quick = run([](auto& o, auto& e) {
        return cmd_check({.quick = true}, with_format(OutputFormat::Csv), o, e);
    });
    CHECK(quick.code == kExitSuccess);
    const auto rows = parse_csv(quick.out);
    CHECK(rows.size() > 8);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK_MESSAGE(rows[i][1] == "true", rows[i][0]);
    }

    const auto faulty = run([](auto& o, auto& e) {
        return cmd_check({.quick = true, .upper_log_bias = 0.05}, with_format(OutputFormat::Csv), o, e);
    });
    CHECK(faulty.code == kExitFailure);
    CHECK(faulty.err.find("sandwich_bounds") != std::string::npos);
}
