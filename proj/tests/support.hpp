#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <doctest.h>

#include "simplicia/homology.hpp"
#include "simplicia/store.hpp"

namespace support {

inline std::filesystem::path fixture_dir() { return SIMPLICIA_FIXTURE_DIR; }

/// Loads a fixture file, or nullopt (with a notice) when it is absent.
inline std::optional<simplicia::Complex> fixture(const std::string& file) {
  auto p = fixture_dir() / file;
  if (!std::filesystem::exists(p)) {
    MESSAGE("fixture " << p.string() << " absent; skipping");
    return std::nullopt;
  }
  return simplicia::load(p).complex;
}

inline std::string H(const simplicia::Complex& c) { return simplicia::format_homology(simplicia::homology(c)); }

}  // namespace support
