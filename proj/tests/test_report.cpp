#include <doctest.h>

#include "scaffold/report.hpp"

using namespace scaffold;
using nlohmann::ordered_json;

namespace {

ReportDocument sample() {
    ReportDocument doc;
    doc.command = "demo";
    doc.parameters = {{"p", 2}, {"n", 1}};
    doc.columns = {"c", "free", "note"};
    doc.rows.push_back({{"c", 1}, {"free", true}, {"note", nullptr}});
    doc.rows.push_back({{"c", 3}, {"free", false}, {"note", "has, comma"}});
    doc.summary = {{"q", 4}, {"count", 2}};
    return doc;
}

}  // namespace

TEST_CASE("json rendering is stable and keeps key order") {
    const std::string first = sample().render(OutputFormat::json);
    const std::string second = sample().render(OutputFormat::json);
    CHECK(first == second);
    CHECK(first.find("\"schema_version\": \"1.0\"") != std::string::npos);
    // parameters keep insertion order, not alphabetical
    CHECK(first.find("\"p\"") < first.find("\"n\""));
    CHECK(first.back() == '\n');

    const auto parsed = ordered_json::parse(first);
    CHECK(parsed["command"] == "demo");
    CHECK(parsed["rows"].size() == 2);
    CHECK(parsed["summary"]["q"] == 4);
}

TEST_CASE("csv rendering quotes awkward cells") {
    const std::string csv = sample().render(OutputFormat::csv);
    CHECK(csv == "c,free,note\n1,true,-\n3,false,\"has, comma\"\n");
}

TEST_CASE("table rendering lists rows and summary") {
    const std::string table = sample().render(OutputFormat::table);
    CHECK(table.find("# demo") != std::string::npos);
    CHECK(table.find("c  free   note") != std::string::npos);
    CHECK(table.find("q: 4") != std::string::npos);
}

TEST_CASE("format names parse") {
    CHECK(parse_format("table") == OutputFormat::table);
    CHECK(parse_format("json") == OutputFormat::json);
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK_FALSE(parse_format("xml").has_value());
}
