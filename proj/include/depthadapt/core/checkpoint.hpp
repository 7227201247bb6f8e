#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "depthadapt/core/tensor.hpp"

namespace depthadapt {

/// Single-file checkpoint archive: a JSON manifest (architecture id,
/// resolution, seed, epoch, semantic version, plus run metadata such as
/// optimizer scalars and rng states) followed by a flat name -> float32
/// tensor map. All payloads are little-endian and round-trip bit-exactly.
///
/// Entry names are stable across runs of the same architecture; writers
/// append in a fixed order so identical state produces identical bytes.
class Checkpoint {
 public:
  static constexpr char kMagic[9] = "DACKPT01";
  static constexpr const char* kFormatVersion = "1.0.0";

  nlohmann::json manifest;

  void add(std::string name, Tensor tensor);
  const Tensor* find(const std::string& name) const;
  /// find() that throws IoError naming the entry when missing.
  const Tensor& at(const std::string& name) const;
  const std::vector<std::pair<std::string, Tensor>>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

  /// Atomic write: temp file in the target directory, then rename.
  void save(const std::filesystem::path& path) const;
  static Checkpoint load(const std::filesystem::path& path);

 private:
  std::vector<std::pair<std::string, Tensor>> entries_;
};

/// Compare selected manifest keys; returns human-readable "key: a != b"
/// lines (empty when all listed keys agree). Used by resume refusal.
std::vector<std::string> manifest_diff(const nlohmann::json& a, const nlohmann::json& b,
                                       const std::vector<std::string>& keys);

}  // namespace depthadapt
