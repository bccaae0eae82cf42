#include "ellperim/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace ellperim {

namespace {

std::string cell_text(const Cell& cell, bool human) {
    return std::visit(
        [human](const auto& value) -> std::string {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, std::string>) {
                return value;
            } else if constexpr (std::is_same_v<T, double>) {
                if (human) {
                    char buffer[32];
                    std::snprintf(buffer, sizeof buffer, "%.15g", value);
                    return buffer;
                }
                return format_number(value);
            } else if constexpr (std::is_same_v<T, bool>) {
                return value ? "true" : "false";
            } else {
                return std::to_string(value);
            }
        },
        cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
    return std::visit([](const auto& value) { return nlohmann::ordered_json(value); }, cell);
}

// Quote a CSV field only when it needs it.
std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (const char c : text) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void render_table(const Document& doc, std::ostream& out) {
    std::vector<std::size_t> widths(doc.columns.size());
    std::vector<std::vector<std::string>> texts;
    for (std::size_t c = 0; c < doc.columns.size(); ++c) {
        widths[c] = doc.columns[c].size();
    }
    for (const auto& row : doc.rows) {
        auto& line = texts.emplace_back();
        for (std::size_t c = 0; c < row.size(); ++c) {
            line.push_back(cell_text(row[c], true));
            widths[c] = std::max(widths[c], line.back().size());
        }
    }
    const auto emit = [&](const std::vector<std::string>& fields) {
        for (std::size_t c = 0; c < fields.size(); ++c) {
            out << fields[c];
            if (c + 1 < fields.size()) {
                out << std::string(widths[c] - fields[c].size() + 2, ' ');
            }
        }
        out << '\n';
    };
    emit(doc.columns);
    std::size_t total = 0;
    for (const auto w : widths) {
        total += w + 2;
    }
    out << std::string(total > 2 ? total - 2 : total, '-') << '\n';
    for (const auto& line : texts) {
        emit(line);
    }
}

void render_csv(const Document& doc, std::ostream& out) {
    for (std::size_t c = 0; c < doc.columns.size(); ++c) {
        out << (c ? "," : "") << csv_field(doc.columns[c]);
    }
    out << '\n';
    for (const auto& row : doc.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? "," : "") << csv_field(cell_text(row[c], false));
        }
        out << '\n';
    }
}

void render_json(const Document& doc, std::ostream& out) {
    nlohmann::ordered_json root;
    auto& meta = root["meta"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : doc.meta) {
        meta[key] = cell_json(value);
    }
    auto& rows = root["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : doc.rows) {
        nlohmann::ordered_json object = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            object[doc.columns[c]] = cell_json(row[c]);
        }
        rows.push_back(std::move(object));
    }
    out << root.dump(2) << '\n';
}

}  // namespace

std::optional<OutputFormat> output_format_from_name(std::string_view name) noexcept {
    if (name == "table") return OutputFormat::Table;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    return std::nullopt;
}

void Document::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("row width does not match column count");
    }
    rows.push_back(std::move(row));
}

std::string format_number(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

void render(const Document& doc, OutputFormat format, std::ostream& out) {
    switch (format) {
        case OutputFormat::Table:
            render_table(doc, out);
            return;
        case OutputFormat::Csv:
            render_csv(doc, out);
            return;
        case OutputFormat::Json:
            render_json(doc, out);
            return;
    }
}

}  // namespace ellperim
