#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace scaffold {

enum class OutputFormat { table, json, csv };

std::optional<OutputFormat> parse_format(const std::string& name);

/**
 * Machine-readable result document shared by every CLI command.
 * Serialization is deterministic: keys keep insertion order, values are
 * integers/strings/bools only (no floats, no timestamps), so identical
 * inputs produce byte-identical output.
 */
struct ReportDocument {
    static constexpr const char* kSchemaVersion = "1.0";

    std::string command;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    std::vector<std::string> columns;                // row key order for csv/table
    std::vector<nlohmann::ordered_json> rows;        // objects keyed by column
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();

    nlohmann::ordered_json to_json() const;
    std::string render(OutputFormat format) const;
};

}  // namespace scaffold
