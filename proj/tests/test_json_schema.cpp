#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "support/corpus.hpp"
#include "thetakit/json_io.hpp"

using nlohmann::json;
using namespace thetakit;

namespace {

// Just enough of JSON Schema to pin our report shapes: type, required,
// properties, items, and $ref into #/definitions.
struct SchemaChecker {
    json root;

    const json& resolve(const json& node) const {
        if (node.contains("$ref")) {
            const std::string ref = node["$ref"].get<std::string>();
            const std::string prefix = "#/definitions/";
            REQUIRE(ref.rfind(prefix, 0) == 0);
            return root["definitions"].at(ref.substr(prefix.size()));
        }
        return node;
    }

    bool type_matches(const json& value, const std::string& type) const {
        if (type == "object") return value.is_object();
        if (type == "array") return value.is_array();
        if (type == "string") return value.is_string();
        if (type == "boolean") return value.is_boolean();
        if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
        if (type == "number") return value.is_number();
        return false;
    }

    void validate(const json& value, const json& schema_in, const std::string& where) const {
        const json& schema = resolve(schema_in);
        if (schema.contains("type")) {
            INFO(where << ": expected type " << schema["type"].get<std::string>());
            CHECK(type_matches(value, schema["type"].get<std::string>()));
        }
        if (schema.contains("required")) {
            for (const auto& key : schema["required"]) {
                INFO(where << ": missing required field " << key.get<std::string>());
                CHECK(value.contains(key.get<std::string>()));
            }
        }
        if (schema.contains("properties") && value.is_object()) {
            for (const auto& [key, sub] : schema["properties"].items())
                if (value.contains(key)) validate(value.at(key), sub, where + "." + key);
        }
        if (schema.contains("items") && value.is_array()) {
            for (std::size_t i = 0; i < value.size(); ++i)
                validate(value[i], schema["items"], where + "[" + std::to_string(i) + "]");
        }
    }
};

SchemaChecker load_schema() {
    std::ifstream in(std::string(THETAKIT_SOURCE_DIR) + "/docs/report-schema.json");
    REQUIRE(in);
    SchemaChecker checker;
    in >> checker.root;
    return checker;
}

} // namespace

TEST_CASE("reports validate against the shipped schema") {
    const SchemaChecker schema = load_schema();
    const Graph pet = named_graph("petersen", {});

    const ThetaResult theta = solve_theta(pet, ThetaVariant::lovasz);
    schema.validate(to_json(theta), schema.root["definitions"]["theta_result"], "theta_result");

    CoherentConfiguration c = wl_closure(pet);
    schema.validate(to_json(c, check_coherent_axioms(c)), schema.root["definitions"]["closure"],
                    "closure");

    const verify::ProductReport prod = verify::theta_product_check(named_graph("cycle", {5}));
    schema.validate(verify::to_json(prod), schema.root["definitions"]["product_report"],
                    "product_report");

    const verify::Lemma0Report l0 = verify::lemma0_check(c);
    schema.validate(verify::to_json(l0), schema.root["definitions"]["lemma0_report"],
                    "lemma0_report");

    const SymMatrix I10 = SymMatrix::identity(10);
    const verify::MainBoundReport mb =
        verify::main_bound_check(I10, I10, pet, verify::Structure::coherent);
    schema.validate(verify::to_json(mb), schema.root["definitions"]["main_bound_report"],
                    "main_bound_report");
}

#ifdef THETAKIT_CLI_PATH
TEST_CASE("the CLI's emitted run report is schema-valid") {
    const SchemaChecker schema = load_schema();
    const std::string cmd = std::string(THETAKIT_CLI_PATH) + " verify cycle:5 --all --json";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    REQUIRE(pclose(pipe) == 0);
    const json report = json::parse(out);
    schema.validate(report, schema.root["definitions"]["run_report"], "run_report");
}
#endif
