#pragma once

// Test-side oracles, independent of the validators they cross-check: they
// only read the raw tables of a category through src/tgt/identity/table.

#include <unistd.h>

#include <filesystem>
#include <optional>
#include <string>

#include "deltacat/fincat.hpp"

namespace testsupport {

using namespace deltacat;

// Exhaustive unit/associativity/totality sweep by direct table reads.
inline std::optional<std::string> category_law_failure(const FinCategory& c) {
  using detail::cat;
  for (const auto& [o, id] : c.identity) {
    if (c.src.at(id) != o || c.tgt.at(id) != o)
      return cat("identity of ", o, " has wrong boundary");
  }
  for (const auto& g : c.morphisms) {
    for (const auto& f : c.morphisms) {
      if (c.src.at(g) != c.tgt.at(f)) continue;
      auto it = c.table.find({g, f});
      if (it == c.table.end()) return cat("missing composite (", g, ", ", f, ")");
      if (c.src.at(it->second) != c.src.at(f) ||
          c.tgt.at(it->second) != c.tgt.at(g))
        return cat("composite (", g, ", ", f, ") has wrong boundary");
    }
  }
  for (const auto& m : c.morphisms) {
    if (c.table.at({c.identity.at(c.tgt.at(m)), m}) != m)
      return cat("left unit fails at ", m);
    if (c.table.at({m, c.identity.at(c.src.at(m))}) != m)
      return cat("right unit fails at ", m);
  }
  for (const auto& h : c.morphisms) {
    for (const auto& g : c.morphisms) {
      if (c.src.at(h) != c.tgt.at(g)) continue;
      for (const auto& f : c.morphisms) {
        if (c.src.at(g) != c.tgt.at(f)) continue;
        if (c.table.at({h, c.table.at({g, f})}) !=
            c.table.at({c.table.at({h, g}), f}))
          return cat("associativity fails at (", h, ", ", g, ", ", f, ")");
      }
    }
  }
  return std::nullopt;
}

// A fresh scratch directory per test, removed on destruction.
struct TempDir {
  std::filesystem::path path;

  explicit TempDir(const std::string& tag) {
    path = std::filesystem::temp_directory_path() /
           ("deltacat_" + tag + "_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::filesystem::path file(const std::string& name) const {
    return path / name;
  }
};

}  // namespace testsupport
