#include "gring/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace gring {
namespace {

std::uint64_t fnv1a(std::string_view s, std::uint64_t h) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string caps_signature(const EngineLimits& lm) {
  std::string sig;
  for (std::uint64_t v :
       {static_cast<std::uint64_t>(lm.group_order_cap),
        static_cast<std::uint64_t>(lm.subgroup_count_cap),
        static_cast<std::uint64_t>(lm.ring_size_cap),
        static_cast<std::uint64_t>(lm.axiom_exhaustive_cap),
        static_cast<std::uint64_t>(lm.axiom_sample_count),
        static_cast<std::uint64_t>(lm.ideal_enum_cap),
        static_cast<std::uint64_t>(lm.property_cap),
        static_cast<std::uint64_t>(lm.oracle_cap),
        static_cast<std::uint64_t>(lm.oracle_ideal_guard), lm.seed}) {
    sig += std::to_string(v);
    sig += ',';
  }
  return sig;
}

}  // namespace

ResultCache::ResultCache(std::string dir, std::ostream* warn)
    : dir_(std::move(dir)), warn_(warn) {
  std::filesystem::create_directories(dir_);
}

std::string ResultCache::key(const std::string& expr, const std::string& op,
                             const EngineLimits& limits) const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a(kEngineVersion, h);
  h = fnv1a("\n", h);
  h = fnv1a(expr, h);
  h = fnv1a("\n", h);
  h = fnv1a(op, h);
  h = fnv1a("\n", h);
  h = fnv1a(caps_signature(limits), h);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<nlohmann::json> ResultCache::load(const std::string& key) const {
  std::filesystem::path p = std::filesystem::path(dir_) / (key + ".json");
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  nlohmann::json j = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    std::ostream& w = warn_ ? *warn_ : std::cerr;
    w << "warning: discarding corrupt cache entry " << p.string() << "\n";
    return std::nullopt;
  }
  return j;
}

void ResultCache::store(const std::string& key, const nlohmann::json& value) const {
  std::filesystem::path p = std::filesystem::path(dir_) / (key + ".json");
  std::filesystem::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << value.dump(2) << "\n";
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, p, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace gring
