#include "scaffold/report.hpp"

#include <algorithm>
#include <sstream>

namespace scaffold {

namespace {

using nlohmann::ordered_json;

std::string cell_text(const ordered_json& row, const std::string& column) {
    if (!row.contains(column)) return "";
    const auto& v = row.at(column);
    if (v.is_null()) return "-";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();  // numbers, bools, nested witnesses
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

std::optional<OutputFormat> parse_format(const std::string& name) {
    if (name == "table") return OutputFormat::table;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    return std::nullopt;
}

ordered_json ReportDocument::to_json() const {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["parameters"] = parameters;
    doc["rows"] = ordered_json::array();
    for (const auto& row : rows) doc["rows"].push_back(row);
    doc["summary"] = summary;
    return doc;
}

std::string ReportDocument::render(OutputFormat format) const {
    if (format == OutputFormat::json) return to_json().dump(2) + "\n";

    if (format == OutputFormat::csv) {
        std::ostringstream os;
        for (size_t i = 0; i < columns.size(); ++i)
            os << (i ? "," : "") << csv_escape(columns[i]);
        os << "\n";
        for (const auto& row : rows) {
            for (size_t i = 0; i < columns.size(); ++i)
                os << (i ? "," : "") << csv_escape(cell_text(row, columns[i]));
            os << "\n";
        }
        return os.str();
    }

    // plain aligned table, parameters first and summary last
    std::ostringstream os;
    os << "# " << command;
    for (const auto& [key, value] : parameters.items())
        os << "  " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump());
    os << "\n";

    std::vector<size_t> width(columns.size());
    for (size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
    for (const auto& row : rows)
        for (size_t i = 0; i < columns.size(); ++i)
            width[i] = std::max(width[i], cell_text(row, columns[i]).size());

    auto line = [&](auto text_of) {
        for (size_t i = 0; i < columns.size(); ++i) {
            const std::string text = text_of(i);
            os << text;
            if (i + 1 < columns.size()) os << std::string(width[i] - text.size() + 2, ' ');
        }
        os << "\n";
    };
    line([&](size_t i) { return columns[i]; });
    for (const auto& row : rows)
        line([&](size_t i) { return cell_text(row, columns[i]); });

    for (const auto& [key, value] : summary.items())
        os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    return os.str();
}

}  // namespace scaffold
