#pragma once

#include <string>

namespace contextlab {

/// Validates a JSON document against a JSON-Schema subset: `type` (string or
/// list), `required`, `properties`, `items`, `enum`. Unknown keys in the
/// document are allowed. Returns an empty string when the document conforms,
/// otherwise a description of the first violation.
std::string schema_validation_error(const std::string& schema_json,
                                    const std::string& document_json);

inline bool matches_schema(const std::string& schema_json, const std::string& document_json) {
    return schema_validation_error(schema_json, document_json).empty();
}

}  // namespace contextlab
