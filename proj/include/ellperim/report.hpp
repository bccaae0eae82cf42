#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ellperim {

inline constexpr std::string_view kVersion = "1.0.0";

enum class OutputFormat { Table, Csv, Json };

std::optional<OutputFormat> output_format_from_name(std::string_view name) noexcept;

using Cell = std::variant<std::string, double, long long, bool>;

/// A rectangular result set plus free-form metadata. Every command builds one
/// of these and hands it to render().
struct Document {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, Cell>> meta;

    void add_row(std::vector<Cell> row);
};

/// "%.17g": enough digits for strtod to recover the exact double.
std::string format_number(double value);

/// Human table, CSV (header row, '\n' endings, no locale) or JSON
/// ({"meta": {...}, "rows": [...]}). CSV and JSON are byte-deterministic.
void render(const Document& doc, OutputFormat format, std::ostream& out);

}  // namespace ellperim
