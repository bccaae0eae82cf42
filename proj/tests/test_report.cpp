#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ellperim/report.hpp"

using namespace ellperim;

TEST_CASE("format_number uses 17 significant digits") {
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(format_number(4.0) == "4");
    CHECK(format_number(-1.0 / 3.0) == "-0.33333333333333331");
}

TEST_CASE("property: format_number round-trips bit-exactly") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t bits = rng();
        double value;
        std::memcpy(&value, &bits, sizeof value);
        if (!std::isfinite(value)) continue;
        CHECK(std::strtod(format_number(value).c_str(), nullptr) == value);
    }
}

TEST_CASE("csv layout") {
    Document doc;
    doc.columns = {"name", "value", "count", "flag"};
    doc.add_row({std::string("plain"), 1.5, 3LL, true});
    doc.add_row({std::string("needs, quoting"), 0.1, -1LL, false});
    std::ostringstream out;
    render(doc, OutputFormat::Csv, out);
    CHECK(out.str() ==
          "name,value,count,flag\n"
          "plain,1.5,3,true\n"
          "\"needs, quoting\",0.10000000000000001,-1,false\n");
}

TEST_CASE("json layout") {
    Document doc;
    doc.columns = {"x", "label"};
    doc.add_row({0.1, std::string("a")});
    doc.meta.emplace_back("version", std::string(kVersion));
    std::ostringstream out;
    render(doc, OutputFormat::Json, out);
    const auto parsed = nlohmann::json::parse(out.str());
    CHECK(parsed.at("meta").at("version") == std::string(kVersion));
    REQUIRE(parsed.at("rows").size() == 1);
    CHECK(parsed.at("rows")[0].at("x").get<double>() == 0.1);
    CHECK(parsed.at("rows")[0].at("label") == "a");
    // Key order is insertion order, so output is byte-stable.
    CHECK(out.str().find("\"meta\"") < out.str().find("\"rows\""));
}

TEST_CASE("table layout aligns columns") {
    Document doc;
    doc.columns = {"id", "value"};
    doc.add_row({std::string("long-name"), 2.0});
    std::ostringstream out;
    render(doc, OutputFormat::Table, out);
    CHECK(out.str() == "id         value\n----------------\nlong-name  2\n");
}

TEST_CASE("rows must match the column count") {
    Document doc;
    doc.columns = {"a", "b"};
    CHECK_THROWS_AS(doc.add_row({1.0}), std::logic_error);
}

TEST_CASE("format names") {
    CHECK(output_format_from_name("csv") == OutputFormat::Csv);
    CHECK(output_format_from_name("json") == OutputFormat::Json);
    CHECK(output_format_from_name("table") == OutputFormat::Table);
    CHECK_FALSE(output_format_from_name("xml").has_value());
}
