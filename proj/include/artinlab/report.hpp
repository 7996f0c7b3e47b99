#pragma once

// Tabular results and their csv / json / text renderings.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace artinlab {

enum class OutputFormat { Csv, Json, Text };

OutputFormat parse_format(const std::string& name);

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::json>> rows;

    void add_row(std::vector<nlohmann::json> row);
};

/// RFC 4180: CRLF-free lines, fields quoted when they contain a comma, quote or newline.
std::string render_csv(const Report& report);
/// {"meta": {"command", "params", "version"}, "data": [{column: value, ...}, ...]}
std::string render_json(const Report& report, const std::string& version);
std::string render_text(const Report& report);

std::string render(const Report& report, OutputFormat format, const std::string& version);

}  // namespace artinlab
