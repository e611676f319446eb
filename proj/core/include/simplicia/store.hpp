#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "simplicia/bistellar.hpp"
#include "simplicia/complex.hpp"

namespace simplicia {

inline constexpr int kSchemaVersion = 1;

/// On-disk form of a complex:
///
///   { "schema_version": 1, "name": "...", "labels": [...],
///     "facets": [[1,2,3], ...], "cached_properties": {...},
///     "move_log": [{"a": [...], "b": [...]}, ...] }
///
/// move_log is optional. Facets are 1-based and must already satisfy the
/// Complex invariants (sorted, maximal, vertices 1..n with n labels).
struct Document {
  Complex complex;
  std::optional<std::vector<Move>> move_log;
};

nlohmann::json to_json_document(const Complex& c, const std::optional<std::vector<Move>>& move_log = std::nullopt);

/// Serialized text, one facet (and one move) per line, trailing newline.
std::string dump_document(const Complex& c, const std::optional<std::vector<Move>>& move_log = std::nullopt);

/// Parses and validates a document. Cached properties are restored into the
/// complex cache. With `strict`, each cached property is recomputed from
/// scratch and a CacheMismatch is thrown on disagreement.
Document parse_document(const std::string& text, bool strict = false);
Document from_json_document(const nlohmann::json& j, bool strict = false);

void save(const Complex& c, const std::filesystem::path& path,
          const std::optional<std::vector<Move>>& move_log = std::nullopt);
Document load(const std::filesystem::path& path, bool strict = false);

/// Property names understood by strict validation and the library.
const std::vector<std::string>& known_properties();

/// Computes `key` on `c` (publishing it to the cache) and returns its value.
nlohmann::json compute_property(const Complex& c, const std::string& key);

}  // namespace simplicia
