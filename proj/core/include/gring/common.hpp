#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace gring {

// Dense element id inside one finite structure. Ids are ranks in the
// structure's canonical element order; 0 is always the additive (or group)
// identity.
using ElemId = std::uint32_t;

inline constexpr const char* kEngineVersion = "gring 0.1.0";

// Soft wall-clock budget threaded through long-running searches. Loops poll
// expired() at coarse intervals; expiry surfaces as CapExceeded with a
// timeout reason, never as a silent skip.
class Deadline {
public:
  Deadline() = default;
  explicit Deadline(double seconds)
      : armed_(seconds > 0),
        end_(std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds > 0 ? seconds : 0))) {}

  bool expired() const {
    return armed_ && std::chrono::steady_clock::now() > end_;
  }

private:
  bool armed_ = false;
  std::chrono::steady_clock::time_point end_{};
};

// Every cap an engine entry point consults. Checks that exceed a cap throw
// CapExceeded; the theorem registry maps that to an undecided-cap verdict.
struct EngineLimits {
  std::size_t group_order_cap = 64;
  std::size_t subgroup_count_cap = 4096;
  std::size_t ring_size_cap = std::size_t{1} << 20;
  // Full |R| x |R| operation tables are only materialized up to this size;
  // larger rings compute operations on demand from provenance. (A table for
  // 2^16 elements would need 2^32 entries, hence the low threshold.)
  std::size_t table_cap = 512;
  // validate_ring_axioms scans all triples up to here, samples above.
  std::size_t axiom_exhaustive_cap = 4096;
  std::size_t axiom_sample_count = 200000;
  // Largest ring whose ideals may be materialized as member sets.
  std::size_t ideal_enum_cap = std::size_t{1} << 16;
  // Largest ring the principal-pair property engine will process.
  std::size_t property_cap = 4096;
  // Largest ring for the all-ideals oracle, plus an ideal-count explosion guard.
  std::size_t oracle_cap = 256;
  std::size_t oracle_ideal_guard = std::size_t{1} << 14;
  std::uint64_t seed = 0x672d72696e67ULL;
  unsigned jobs = 1;
  Deadline deadline{};

  void poll() const;
};

// A structural cap was hit (or the per-instance deadline expired). `what()`
// names the cap and the offending size so reports can carry the reason.
class CapExceeded : public std::runtime_error {
public:
  CapExceeded(std::string cap, std::size_t requested, std::size_t limit)
      : std::runtime_error(cap + " cap exceeded: " + std::to_string(requested) +
                           " > " + std::to_string(limit)),
        cap_(std::move(cap)) {}
  explicit CapExceeded(std::string reason)
      : std::runtime_error(reason), cap_("deadline") {}

  const std::string& cap() const { return cap_; }

private:
  std::string cap_;
};

inline void EngineLimits::poll() const {
  if (deadline.expired()) throw CapExceeded("instance deadline expired");
}

// Malformed descriptor text. `offset` is a byte position into the source
// string; `expected` names what the parser wanted there.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

}  // namespace gring
