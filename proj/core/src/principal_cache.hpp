#pragma once

#include <cstdint>
#include <mutex>
#include <vector>

#include "gring/ideal.hpp"

namespace gring {

// Per-ring cache of the distinct principal ideals. index_of maps each
// element to the index of the ideal it generates; canon_rep prefers the
// least idempotent generator so quotient-splitting witnesses read as
// (e, 1-e) pairs.
struct PrincipalCache {
  std::mutex mutex;
  bool built = false;
  std::vector<Ideal> ideals;
  std::vector<std::uint32_t> index_of;
  std::vector<ElemId> least_gen;
  std::vector<ElemId> canon_rep;
};

const PrincipalCache& built_principal_cache(const RingPtr& r,
                                            const EngineLimits& limits);

}  // namespace gring
