#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "ttr/canonical.hpp"
#include "ttr/coeffs.hpp"

namespace ttr {

// Content-addressed store for coefficient vectors, one file per entry. The
// filename is the FNV-1a hash of the full lookup key (canonical graph key +
// engine + library version); the body repeats the key, so a hash collision
// or version change reads as a miss, never as wrong data. Inserts write a
// temp file and rename it, so concurrent writers are safe.
class CoeffCache {
 public:
  explicit CoeffCache(std::filesystem::path dir);

  std::optional<CoeffVector> load(const CanonicalKey& key, Engine engine) const;
  void store(const CanonicalKey& key, Engine engine, const CoeffVector& cv) const;

  std::size_t size() const;   // entries on disk
  std::size_t clear() const;  // removes entries, returns how many
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

}  // namespace ttr
