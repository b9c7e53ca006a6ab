#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>

#include "json.hpp"

#include "fsgraph/explorer.hpp"
#include "fsgraph/girth_probe.hpp"
#include "fsgraph/graph_io.hpp"
#include "fsgraph/orientations.hpp"

using namespace fsg;
using nlohmann::json;

namespace {

// lightweight structural validation against the shipped schemas: required
// keys present, basic types as declared
void check_required(const json& schema, const json& value) {
    REQUIRE(value.is_object());
    for (const auto& key : schema.at("required")) {
        CAPTURE(key.get<std::string>());
        CHECK(value.contains(key.get<std::string>()));
    }
    for (auto& [key, prop] : schema.at("properties").items()) {
        if (!value.contains(key)) continue;
        if (!prop.contains("type")) continue;
        const auto& t = prop.at("type");
        auto matches = [&](const std::string& want) {
            if (want == "object") return value[key].is_object();
            if (want == "array") return value[key].is_array();
            if (want == "integer") return value[key].is_number_integer();
            if (want == "boolean") return value[key].is_boolean();
            if (want == "null") return value[key].is_null();
            return true;
        };
        if (t.is_string()) {
            CHECK(matches(t.get<std::string>()));
        } else {
            bool any = false;
            for (const auto& w : t) any = any || matches(w.get<std::string>());
            CHECK(any);
        }
    }
}

json load_schema(const std::string& name) {
    for (const std::string prefix : {"../../tools/schemas/", "../tools/schemas/", "tools/schemas/"}) {
        std::ifstream in(prefix + name);
        if (in) return json::parse(in);
    }
    FAIL("schema not found: ", name);
    return {};
}

}  // namespace

TEST_CASE("explore report validates against its schema") {
    FsContext ctx(make_named(Family::cycle, 4), make_named(Family::star, 4));
    auto parsed = json::parse(explore_report_json(explore(ctx)));
    check_required(load_schema("explore_report.schema.json"), parsed);
    for (const auto& comp : parsed["components"])
        check_required(load_schema("explore_report.schema.json")["properties"]["components"]["items"],
                       comp);
}

TEST_CASE("girth probe report validates against its schema") {
    auto report = conjecture_probe(make_named(Family::cycle, 4));
    auto parsed = json::parse(probe_report_json(report));
    check_required(load_schema("girth_probe_report.schema.json"), parsed);
}

TEST_CASE("orientation class report validates against its schema") {
    auto classes = double_flip_classes(complement(make_named(Family::star, 4)));
    auto parsed = json::parse(class_report_json(classes));
    check_required(load_schema("class_report.schema.json"), parsed);
}

TEST_CASE("graph json validates against its schema") {
    auto parsed = json::parse(write_graph_json(make_named(Family::path, 4)));
    check_required(load_schema("graph.schema.json"), parsed);
}
