#pragma once

#include <cstdint>
#include <vector>

#include "cachelab/system.hpp"

namespace cachelab {

// Per-user coded cache contents. User k stores the N-1 pairwise XOR entries
// W_{i,k} ^ W_{i+1,k} for i = 1..N-1, each of F/K bits, filling the cache of
// capacity M*F = (N-1)*F/K exactly.
struct CacheContents {
  // per_user[k-1][i-1] = W_{i,k} ^ W_{i+1,k}
  std::vector<std::vector<BitBlock>> per_user;

  const std::vector<BitBlock>& user_cache(int user_index) const;      // 1-based
  const BitBlock& entry(int user_index, int chain_index) const;      // both 1-based
};

// Fills every cache from the library; deterministic, demand-oblivious.
CacheContents place_caches(const FileLibrary& library, const SystemConfig& config);

// Total cached bits of one user; asserts the count is uniform across users
// and returns (N-1)*F/K.
std::int64_t cached_bits_per_user(const CacheContents& caches);

}  // namespace cachelab
