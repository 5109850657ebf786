#include "cachelab/system.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace cachelab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

SystemConfig::SystemConfig(int n_files_in, int n_users_in, std::int64_t file_bits_in)
    : n_files(n_files_in), n_users(n_users_in), file_bits(file_bits_in) {
  if (n_files < 2) throw std::invalid_argument("SystemConfig: at least 2 files required");
  if (n_users < 1) throw std::invalid_argument("SystemConfig: at least 1 user required");
  if (file_bits <= 0) throw std::invalid_argument("SystemConfig: file size must be positive");
  const std::int64_t granule = min_file_bits(n_files, n_users);
  if (file_bits % granule != 0) {
    throw std::invalid_argument("SystemConfig: file size " + std::to_string(file_bits) +
                                " not divisible by required granule " + std::to_string(granule));
  }
}

std::int64_t SystemConfig::min_file_bits(int n_files, int n_users) {
  const int top = std::min(n_files, n_users) - 1;
  std::int64_t l = 1;
  for (int i = 2; i <= top; ++i) l = std::lcm(l, static_cast<std::int64_t>(i));
  return static_cast<std::int64_t>(n_users) * l;
}

std::int64_t SystemConfig::piece_bits(int n_prime) const {
  if (n_prime < 2) throw std::invalid_argument("piece_bits: needs at least 2 distinct demands");
  if (n_prime > std::min(n_files, n_users)) {
    throw std::invalid_argument("piece_bits: n_prime exceeds min(N, K)");
  }
  return subfile_bits() / (n_prime - 1);
}

FileLibrary::FileLibrary(SystemConfig config, std::vector<BitBlock> files)
    : config_(config), files_(std::move(files)) {
  if (static_cast<int>(files_.size()) != config_.n_files) {
    throw std::invalid_argument("FileLibrary: expected exactly N files");
  }
  for (const auto& f : files_) {
    if (static_cast<std::int64_t>(f.size_bits()) != config_.file_bits) {
      throw std::invalid_argument("FileLibrary: all files must have length F");
    }
  }
}

FileLibrary FileLibrary::generate(const SystemConfig& config, std::uint64_t seed) {
  std::vector<BitBlock> files;
  files.reserve(config.n_files);
  for (int n = 1; n <= config.n_files; ++n) {
    BitBlock block = BitBlock::zeros(static_cast<std::size_t>(config.file_bits));
    const std::uint64_t file_key = splitmix64(seed ^ (0xA24BAED4963EE407ULL * n));
    std::uint64_t word = 0;
    for (std::int64_t b = 0; b < config.file_bits; ++b) {
      if (b % 64 == 0) word = splitmix64(file_key + static_cast<std::uint64_t>(b / 64));
      block.set_bit(static_cast<std::size_t>(b), (word >> (b % 64)) & 1);
    }
    files.push_back(std::move(block));
  }
  return FileLibrary(config, std::move(files));
}

const BitBlock& FileLibrary::file(int file_index) const {
  if (file_index < 1 || file_index > config_.n_files) {
    throw std::out_of_range("FileLibrary: file index out of range");
  }
  return files_[file_index - 1];
}

BitBlock FileLibrary::subfile(int file_index, int subfile_index) const {
  if (subfile_index < 1 || subfile_index > config_.n_users) {
    throw std::out_of_range("FileLibrary: subfile index out of range");
  }
  const std::int64_t len = config_.subfile_bits();
  return file(file_index).slice(static_cast<std::size_t>((subfile_index - 1) * len),
                                static_cast<std::size_t>(len));
}

BitBlock FileLibrary::piece(int file_index, int subfile_index, int level, int n_prime) const {
  const std::int64_t len = config_.piece_bits(n_prime);
  if (level < 1 || level > n_prime - 1) {
    throw std::out_of_range("FileLibrary: piece level out of range");
  }
  const std::int64_t base = (subfile_index - 1) * config_.subfile_bits() + (level - 1) * len;
  return file(file_index).slice(static_cast<std::size_t>(base), static_cast<std::size_t>(len));
}

std::vector<BitBlock> partition_file(const BitBlock& file, std::size_t k) {
  return partition_block(file, k);
}

std::vector<BitBlock> partition_subfile(const BitBlock& subfile, std::size_t parts) {
  return partition_block(subfile, parts);
}

}  // namespace cachelab
