#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "simplicia/complex.hpp"

namespace simplicia {

struct LibraryEntry {
  std::string name;
  std::string file;  // relative to the library directory
  std::string topological_type;
  std::string provenance;
  Complex complex;
};

/// A parsed property predicate.
///
///   predicate := clause ("and" clause)*
///   clause    := scalar OP INT | "homology[" K "].torsion" ("empty" | "nonempty")
///              | ["not"] FLAG | "type" ("==" | "!=") STRING
///   scalar    := "dim" | "n" | "chi" | "facets" | "f[" K "]" | "homology[" K "].betti"
///   OP        := "==" | "!=" | "<" | "<=" | ">" | ">="
///   FLAG      := "pure" | "connected" | "strongly_connected" | "pseudomanifold"
///              | "has_boundary" | "closed" | "orientable"
class Predicate {
 public:
  /// Throws InvalidArgument (listing the grammar) on a malformed predicate.
  static Predicate parse(const std::string& text);

  bool operator()(const LibraryEntry& e) const;

 private:
  std::vector<std::function<bool(const LibraryEntry&)>> clauses_;
};

const char* predicate_grammar();

/// True when the query contains a comparison operator or an emptiness test,
/// i.e. it is meant as a predicate rather than a name.
bool looks_like_predicate(const std::string& query);

class Library {
 public:
  /// $SIMPLICIA_LIB if set, else the directory configured at build time.
  static std::filesystem::path default_directory();

  /// Reads index.json and every entry it lists. With `strict`, cached
  /// properties are recomputed and checked on load.
  static Library open(const std::filesystem::path& dir = default_directory(), bool strict = false);

  const std::filesystem::path& directory() const noexcept { return dir_; }
  const std::vector<LibraryEntry>& entries() const noexcept { return entries_; }

  /// Case-insensitive substring match on names.
  std::vector<const LibraryEntry*> search_name(const std::string& needle) const;
  std::vector<const LibraryEntry*> search_predicate(const Predicate& p) const;
  /// Predicate search when looks_like_predicate(query), name search otherwise.
  std::vector<const LibraryEntry*> search(const std::string& query) const;

  /// Exact name lookup; nullptr if absent.
  const LibraryEntry* find(const std::string& name) const;

 private:
  std::filesystem::path dir_;
  std::vector<LibraryEntry> entries_;
};

}  // namespace simplicia
