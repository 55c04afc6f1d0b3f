#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wreathlab/action.hpp"
#include "wreathlab/group.hpp"

namespace wreathlab {

/// {"order", "identity", "labels", "table"} in that key order. Rule groups
/// are materialized first, so only call this for moderate orders.
nlohmann::ordered_json group_to_json(const FiniteGroup& g);

/// A group document read without any validation of the table.
struct RawGroup {
  std::size_t order = 0;
  Element identity = 0;
  std::vector<std::string> labels;
  std::vector<Element> table;
};

/// Shape checks only (keys, types, row lengths). Throws ParseError.
RawGroup raw_group_from_json(const nlohmann::json& j);

/// Shape checks plus every group invariant. Throws ParseError or
/// InvariantError.
FiniteGroup group_from_json(const nlohmann::json& j);

/// "group" holds either an embedded group document or a path string,
/// resolved relative to `base_dir`.
nlohmann::ordered_json action_to_json(const FiniteGSet& omega);
FiniteGSet action_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});

/// File helpers; throw ParseError on unreadable or malformed files.
nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::ordered_json& j);

}  // namespace wreathlab
