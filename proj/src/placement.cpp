#include "cachelab/placement.hpp"

#include <stdexcept>

namespace cachelab {

const std::vector<BitBlock>& CacheContents::user_cache(int user_index) const {
  if (user_index < 1 || user_index > static_cast<int>(per_user.size())) {
    throw std::out_of_range("CacheContents: user index out of range");
  }
  return per_user[user_index - 1];
}

const BitBlock& CacheContents::entry(int user_index, int chain_index) const {
  const auto& cache = user_cache(user_index);
  if (chain_index < 1 || chain_index > static_cast<int>(cache.size())) {
    throw std::out_of_range("CacheContents: chain index out of range");
  }
  return cache[chain_index - 1];
}

CacheContents place_caches(const FileLibrary& library, const SystemConfig& config) {
  if (library.config() != config) {
    throw std::invalid_argument("place_caches: library does not match config");
  }
  CacheContents caches;
  caches.per_user.resize(config.n_users);
  for (int k = 1; k <= config.n_users; ++k) {
    auto& cache = caches.per_user[k - 1];
    cache.reserve(config.n_files - 1);
    for (int i = 1; i <= config.n_files - 1; ++i) {
      cache.push_back(xor_blocks(library.subfile(i, k), library.subfile(i + 1, k)));
    }
  }
  return caches;
}

std::int64_t cached_bits_per_user(const CacheContents& caches) {
  if (caches.per_user.empty()) throw std::invalid_argument("cached_bits_per_user: empty caches");
  std::int64_t bits = -1;
  for (const auto& cache : caches.per_user) {
    std::int64_t user_bits = 0;
    for (const auto& entry : cache) user_bits += static_cast<std::int64_t>(entry.size_bits());
    if (bits == -1) {
      bits = user_bits;
    } else if (bits != user_bits) {
      throw std::logic_error("cached_bits_per_user: non-uniform cache sizes");
    }
  }
  return bits;
}

}  // namespace cachelab
