#pragma once

#include <cstdint>
#include <vector>

#include "cachelab/bitblock.hpp"

namespace cachelab {

// File and user indices are 1-based everywhere in the public API; internal
// vectors are 0-based.

// Instance parameters: N files of F bits each, K users.
//
// F must be divisible by K * lcm(1..min(N,K)-1) so that every subfile split
// (into K parts) and every piece split (into n_prime-1 parts, for any number
// n_prime <= min(N,K) of distinct demands) lands on whole bits.
struct SystemConfig {
  int n_files = 0;       // N >= 2
  int n_users = 0;       // K >= 1
  std::int64_t file_bits = 0;  // F

  SystemConfig(int n_files, int n_users, std::int64_t file_bits);

  // Smallest admissible F for the given instance: K * lcm(1..min(N,K)-1).
  static std::int64_t min_file_bits(int n_files, int n_users);

  std::int64_t subfile_bits() const { return file_bits / n_users; }

  // Piece length when subfiles are split into (n_prime - 1) pieces.
  std::int64_t piece_bits(int n_prime) const;

  friend bool operator==(const SystemConfig&, const SystemConfig&) = default;
};

// The N file payloads, all of length F.
class FileLibrary {
 public:
  FileLibrary(SystemConfig config, std::vector<BitBlock> files);

  // Deterministic content keyed by (seed, file, bit position). The default
  // seed gives the fixed fill pattern used by the CLI.
  static FileLibrary generate(const SystemConfig& config, std::uint64_t seed = 0);

  const SystemConfig& config() const { return config_; }
  const BitBlock& file(int file_index) const;  // 1-based

  // Subfile j of file i: the j-th of K equal slices (both indices 1-based).
  BitBlock subfile(int file_index, int subfile_index) const;

  // Piece `level` of subfile (i, j) when subfiles split into n_prime-1 pieces.
  BitBlock piece(int file_index, int subfile_index, int level, int n_prime) const;

 private:
  SystemConfig config_;
  std::vector<BitBlock> files_;
};

// Subfile split per the placement scheme: k equal parts, concatenation in
// index order reproduces the input.
std::vector<BitBlock> partition_file(const BitBlock& file, std::size_t k);

// Piece split used by the delivery phase; identical contract at piece scale.
std::vector<BitBlock> partition_subfile(const BitBlock& subfile, std::size_t parts);

}  // namespace cachelab
