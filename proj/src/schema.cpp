#include "contextlab/schema.hpp"

#include <string>

#include "json.hpp"

namespace contextlab {

namespace {

using nlohmann::json;

bool type_matches(const std::string& want, const json& doc) {
    if (want == "object") return doc.is_object();
    if (want == "array") return doc.is_array();
    if (want == "string") return doc.is_string();
    if (want == "boolean") return doc.is_boolean();
    if (want == "null") return doc.is_null();
    if (want == "integer") return doc.is_number_integer() || doc.is_number_unsigned();
    if (want == "number") return doc.is_number();
    return false;
}

std::string check(const json& schema, const json& doc, const std::string& path) {
    if (!schema.is_object()) return {};

    if (auto it = schema.find("type"); it != schema.end()) {
        bool ok = false;
        if (it->is_string()) {
            ok = type_matches(it->get<std::string>(), doc);
        } else if (it->is_array()) {
            for (const json& t : *it)
                if (t.is_string() && type_matches(t.get<std::string>(), doc)) ok = true;
        }
        if (!ok) return path + ": expected type " + it->dump();
    }

    if (auto it = schema.find("enum"); it != schema.end() && it->is_array()) {
        bool ok = false;
        for (const json& v : *it)
            if (v == doc) ok = true;
        if (!ok) return path + ": value " + doc.dump() + " not in enum " + it->dump();
    }

    if (doc.is_object()) {
        if (auto it = schema.find("required"); it != schema.end() && it->is_array()) {
            for (const json& name : *it) {
                if (!name.is_string()) continue;
                if (!doc.contains(name.get<std::string>()))
                    return path + ": missing required field '" + name.get<std::string>() + "'";
            }
        }
        if (auto it = schema.find("properties"); it != schema.end() && it->is_object()) {
            for (auto& [name, sub] : it->items()) {
                if (!doc.contains(name)) continue;
                std::string err = check(sub, doc.at(name), path + "." + name);
                if (!err.empty()) return err;
            }
        }
    }

    if (doc.is_array()) {
        if (auto it = schema.find("items"); it != schema.end()) {
            for (std::size_t i = 0; i < doc.size(); ++i) {
                std::string err =
                    check(*it, doc[i], path + "[" + std::to_string(i) + "]");
                if (!err.empty()) return err;
            }
        }
    }

    return {};
}

}  // namespace

std::string schema_validation_error(const std::string& schema_json,
                                    const std::string& document_json) {
    json schema = json::parse(schema_json, nullptr, false);
    if (schema.is_discarded()) return "schema is not valid JSON";
    json doc = json::parse(document_json, nullptr, false);
    if (doc.is_discarded()) return "document is not valid JSON";
    return check(schema, doc, "$");
}

}  // namespace contextlab
