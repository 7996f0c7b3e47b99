#include "artinlab/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace artinlab {

namespace {

std::string cell(const nlohmann::json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    if (name == "text") return OutputFormat::Text;
    throw std::invalid_argument("unknown format: " + name);
}

void Report::add_row(std::vector<nlohmann::json> row) {
    if (row.size() != columns.size()) throw std::logic_error("report row has the wrong number of fields");
    rows.push_back(std::move(row));
}

std::string render_csv(const Report& report) {
    std::ostringstream os;
    for (std::size_t i = 0; i < report.columns.size(); ++i) os << (i ? "," : "") << csv_field(report.columns[i]);
    os << '\n';
    for (const auto& row : report.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(cell(row[i]));
        os << '\n';
    }
    return os.str();
}

std::string render_json(const Report& report, const std::string& version) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.params) params[k] = v;
    nlohmann::ordered_json doc;
    doc["meta"] = {{"command", report.command}, {"params", params}, {"version", version}};
    doc["data"] = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[report.columns[i]] = row[i];
        doc["data"].push_back(std::move(obj));
    }
    return doc.dump(2) + "\n";
}

std::string render_text(const Report& report) {
    std::vector<std::size_t> width(report.columns.size());
    for (std::size_t i = 0; i < width.size(); ++i) width[i] = report.columns[i].size();
    for (const auto& row : report.rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], cell(row[i]).size());
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& fields) {
        std::string s;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) s += "  ";
            s += fields[i];
            if (i + 1 < fields.size()) s.append(width[i] - fields[i].size(), ' ');
        }
        os << s << '\n';
    };
    line(report.columns);
    for (const auto& row : report.rows) {
        std::vector<std::string> fields;
        for (const auto& v : row) fields.push_back(cell(v));
        line(fields);
    }
    return os.str();
}

std::string render(const Report& report, OutputFormat format, const std::string& version) {
    switch (format) {
        case OutputFormat::Csv: return render_csv(report);
        case OutputFormat::Json: return render_json(report, version);
        case OutputFormat::Text: return render_text(report);
    }
    return {};
}

}  // namespace artinlab
