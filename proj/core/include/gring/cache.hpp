#pragma once

#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "gring/common.hpp"

namespace gring {

// Content-addressed JSON result store. The key hashes the engine version,
// the instance expression, an operation designator and every cap that can
// change an answer, so a stale or foreign entry can never be served.
// Corrupt entries degrade to a miss with a warning; writes go through a
// temp file and an atomic rename.
class ResultCache {
public:
  explicit ResultCache(std::string dir, std::ostream* warn = nullptr);

  std::string key(const std::string& expr, const std::string& op,
                  const EngineLimits& limits) const;

  std::optional<nlohmann::json> load(const std::string& key) const;
  void store(const std::string& key, const nlohmann::json& value) const;

  const std::string& dir() const { return dir_; }

private:
  std::string dir_;
  std::ostream* warn_;
};

}  // namespace gring
