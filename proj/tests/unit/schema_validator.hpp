#pragma once

// Minimal JSON-Schema checker covering the subset used by docs/schemas:
// type (single or list), enum, pattern, minimum, required, properties,
// additionalProperties:false, items, minItems, and $ref into #/definitions.
// Returns an empty string on success, otherwise a path-tagged message.

#include <json.hpp>

#include <fstream>
#include <regex>
#include <sstream>
#include <string>

namespace turan_test {

using nlohmann::json;

inline bool type_matches(const std::string& type, const json& doc) {
  if (type == "object") return doc.is_object();
  if (type == "array") return doc.is_array();
  if (type == "string") return doc.is_string();
  if (type == "boolean") return doc.is_boolean();
  if (type == "null") return doc.is_null();
  if (type == "integer") return doc.is_number_integer();
  if (type == "number") return doc.is_number();
  return false;
}

inline std::string validate_schema(const json& schema, const json& doc,
                                   const json& root, const std::string& path) {
  if (schema.contains("$ref")) {
    std::string ref = schema["$ref"].get<std::string>();
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) return path + ": unsupported $ref " + ref;
    return validate_schema(root["definitions"][ref.substr(prefix.size())], doc,
                           root, path);
  }
  if (schema.contains("type")) {
    const json& type = schema["type"];
    bool ok = false;
    if (type.is_string()) {
      ok = type_matches(type.get<std::string>(), doc);
    } else {
      for (const auto& t : type)
        if (type_matches(t.get<std::string>(), doc)) ok = true;
    }
    if (!ok) return path + ": type mismatch";
    if (doc.is_null()) return {};  // nothing further applies to null
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& candidate : schema["enum"])
      if (candidate == doc) ok = true;
    if (!ok) return path + ": not in enum";
  }
  if (schema.contains("pattern") && doc.is_string()) {
    std::regex re(schema["pattern"].get<std::string>());
    if (!std::regex_search(doc.get<std::string>(), re))
      return path + ": pattern mismatch";
  }
  if (schema.contains("minimum") && doc.is_number()) {
    if (doc.get<double>() < schema["minimum"].get<double>())
      return path + ": below minimum";
  }
  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!doc.contains(key.get<std::string>()))
          return path + ": missing required " + key.get<std::string>();
    const json props =
        schema.contains("properties") ? schema["properties"] : json::object();
    bool allow_extra = true;
    if (schema.contains("additionalProperties") &&
        schema["additionalProperties"].is_boolean())
      allow_extra = schema["additionalProperties"].get<bool>();
    for (const auto& [key, value] : doc.items()) {
      if (props.contains(key)) {
        std::string err =
            validate_schema(props[key], value, root, path + "/" + key);
        if (!err.empty()) return err;
      } else if (!allow_extra) {
        return path + ": unexpected property " + key;
      }
    }
  }
  if (doc.is_array()) {
    if (schema.contains("minItems") &&
        doc.size() < schema["minItems"].get<std::size_t>())
      return path + ": too few items";
    if (schema.contains("items")) {
      for (std::size_t i = 0; i < doc.size(); ++i) {
        std::string err = validate_schema(schema["items"], doc[i], root,
                                          path + "/" + std::to_string(i));
        if (!err.empty()) return err;
      }
    }
  }
  return {};
}

inline json load_schema(const std::string& name) {
  std::string path = std::string(TURAN_SCHEMA_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing schema " + path);
  json schema;
  in >> schema;
  return schema;
}

inline std::string check_against_schema(const std::string& schema_name,
                                        const json& doc) {
  json schema = load_schema(schema_name);
  return validate_schema(schema, doc, schema, "#");
}

}  // namespace turan_test
