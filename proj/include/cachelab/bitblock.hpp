#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cachelab {

// Fixed-length bit sequence stored as packed bytes (MSB-first within a byte).
// The length is immutable after construction and unused padding bits in the
// last byte are kept zero, so equality and XOR work bytewise.
class BitBlock {
 public:
  BitBlock() = default;

  static BitBlock zeros(std::size_t n_bits);
  static BitBlock from_bit_string(std::string_view bits);            // e.g. "0101"
  static BitBlock from_hex(std::string_view hex, std::size_t n_bits);

  std::size_t size_bits() const { return n_bits_; }
  bool empty() const { return n_bits_ == 0; }

  bool bit(std::size_t index) const;
  void set_bit(std::size_t index, bool value);

  // Sub-block [offset, offset + n_bits); bit granularity, bounds-checked.
  BitBlock slice(std::size_t offset, std::size_t n_bits) const;

  BitBlock& operator^=(const BitBlock& rhs);  // lengths must match
  friend BitBlock operator^(BitBlock lhs, const BitBlock& rhs) { return lhs ^= rhs; }

  friend bool operator==(const BitBlock& a, const BitBlock& b) = default;

  // Number of differing bits between two equal-length blocks.
  std::size_t mismatch_count(const BitBlock& other) const;

  std::string to_hex() const;
  std::string to_bit_string() const;

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t n_bits_ = 0;
};

// XOR of two equal-length blocks; length mismatch throws std::invalid_argument.
BitBlock xor_blocks(const BitBlock& a, const BitBlock& b);

// Splits a block into `parts` equal-length sub-blocks, in index order.
// The length must be divisible by `parts`.
std::vector<BitBlock> partition_block(const BitBlock& block, std::size_t parts);

BitBlock concat_blocks(std::span<const BitBlock> blocks);

}  // namespace cachelab
