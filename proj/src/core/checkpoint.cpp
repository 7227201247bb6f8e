#include "depthadapt/core/checkpoint.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

#include "depthadapt/core/error.hpp"

namespace depthadapt {

namespace {

// This code targets little-endian hosts; the on-disk format is LE by fiat.
static_assert(std::endian::native == std::endian::little);

template <typename T>
void write_pod(std::ostream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

template <typename T>
T read_pod(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(v));
  if (!is) throw IoError("checkpoint: truncated file");
  return v;
}

}  // namespace

void Checkpoint::add(std::string name, Tensor tensor) {
  if (find(name) != nullptr) throw IoError("checkpoint: duplicate entry '" + name + "'");
  entries_.emplace_back(std::move(name), std::move(tensor));
}

const Tensor* Checkpoint::find(const std::string& name) const {
  for (const auto& [n, t] : entries_) {
    if (n == name) return &t;
  }
  return nullptr;
}

const Tensor& Checkpoint::at(const std::string& name) const {
  const Tensor* t = find(name);
  if (!t) throw IoError("checkpoint: missing entry '" + name + "'");
  return *t;
}

void Checkpoint::save(const std::filesystem::path& path) const {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("checkpoint: cannot open '" + tmp.string() + "' for writing");
    os.write(kMagic, 8);
    const std::string m = manifest.dump();  // keys sorted -> deterministic bytes
    write_pod<uint64_t>(os, m.size());
    os.write(m.data(), static_cast<std::streamsize>(m.size()));
    write_pod<uint32_t>(os, static_cast<uint32_t>(entries_.size()));
    for (const auto& [name, t] : entries_) {
      write_pod<uint32_t>(os, static_cast<uint32_t>(name.size()));
      os.write(name.data(), static_cast<std::streamsize>(name.size()));
      write_pod<uint8_t>(os, static_cast<uint8_t>(t.ndim()));
      for (int i = 0; i < t.ndim(); ++i) write_pod<int64_t>(os, t.dim(i));
      os.write(reinterpret_cast<const char*>(t.data()),
               static_cast<std::streamsize>(sizeof(float) * t.numel()));
    }
    if (!os) throw IoError("checkpoint: write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, path);
}

Checkpoint Checkpoint::load(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("checkpoint: cannot open '" + path.string() + "'");
  char magic[8];
  is.read(magic, 8);
  if (!is || std::memcmp(magic, kMagic, 8) != 0) {
    throw IoError("checkpoint: '" + path.string() + "' is not a checkpoint archive");
  }
  Checkpoint ck;
  const auto mlen = read_pod<uint64_t>(is);
  std::string mstr(mlen, '\0');
  is.read(mstr.data(), static_cast<std::streamsize>(mlen));
  if (!is) throw IoError("checkpoint: truncated manifest");
  try {
    ck.manifest = nlohmann::json::parse(mstr);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("checkpoint: bad manifest JSON: ") + e.what());
  }
  const auto n = read_pod<uint32_t>(is);
  for (uint32_t i = 0; i < n; ++i) {
    const auto name_len = read_pod<uint32_t>(is);
    std::string name(name_len, '\0');
    is.read(name.data(), name_len);
    const auto ndim = read_pod<uint8_t>(is);
    std::vector<int64_t> shape(ndim);
    for (auto& d : shape) d = read_pod<int64_t>(is);
    Tensor t(shape);
    is.read(reinterpret_cast<char*>(t.data()),
            static_cast<std::streamsize>(sizeof(float) * t.numel()));
    if (!is) throw IoError("checkpoint: truncated tensor '" + name + "'");
    ck.entries_.emplace_back(std::move(name), std::move(t));
  }
  return ck;
}

std::vector<std::string> manifest_diff(const nlohmann::json& a, const nlohmann::json& b,
                                       const std::vector<std::string>& keys) {
  std::vector<std::string> diffs;
  for (const auto& k : keys) {
    const auto av = a.contains(k) ? a.at(k).dump() : "<absent>";
    const auto bv = b.contains(k) ? b.at(k).dump() : "<absent>";
    if (av != bv) diffs.push_back(k + ": " + av + " != " + bv);
  }
  return diffs;
}

}  // namespace depthadapt
