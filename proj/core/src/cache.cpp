#include "ttr/cache.hpp"

#include <unistd.h>

#include <atomic>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "ttr/version.hpp"

namespace ttr {

namespace {

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string full_key(const CanonicalKey& key, Engine engine) {
  std::string out = key.bytes;
  out += '|';
  out += engine_name(engine);
  out += '|';
  out += kVersion;
  return out;
}

std::string entry_name(const std::string& fk) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(fk) << ".json";
  return os.str();
}

}  // namespace

CoeffCache::CoeffCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::optional<CoeffVector> CoeffCache::load(const CanonicalKey& key, Engine engine) const {
  const std::string fk = full_key(key, engine);
  std::ifstream in(dir_ / entry_name(fk));
  if (!in) return std::nullopt;
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  if (j.value("key", std::string()) != fk) return std::nullopt;
  try {
    return coeffs_from_json(j.at("coeffs"));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void CoeffCache::store(const CanonicalKey& key, Engine engine, const CoeffVector& cv) const {
  static std::atomic<unsigned> counter{0};
  const std::string fk = full_key(key, engine);
  nlohmann::json j;
  j["key"] = fk;
  j["coeffs"] = coeffs_to_json(cv);
  std::ostringstream tmp_name;
  tmp_name << entry_name(fk) << ".tmp" << ::getpid() << '.' << counter.fetch_add(1);
  const auto tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp);
    out << j.dump();
  }
  std::error_code ec;
  std::filesystem::rename(tmp, dir_ / entry_name(fk), ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

std::size_t CoeffCache::size() const {
  std::size_t count = 0;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir_, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json") ++count;
  return count;
}

std::size_t CoeffCache::clear() const {
  std::size_t count = 0;
  std::error_code ec;
  std::vector<std::filesystem::path> victims;
  for (const auto& entry : std::filesystem::directory_iterator(dir_, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      victims.push_back(entry.path());
  for (const auto& p : victims)
    if (std::filesystem::remove(p, ec)) ++count;
  return count;
}

}  // namespace ttr
