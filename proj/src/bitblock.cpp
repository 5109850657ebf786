#include "cachelab/bitblock.hpp"

#include <bit>
#include <stdexcept>

namespace cachelab {

namespace {

std::size_t byte_count(std::size_t n_bits) { return (n_bits + 7) / 8; }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw std::invalid_argument("BitBlock: invalid hex digit");
}

constexpr char kHexDigits[] = "0123456789abcdef";

}  // namespace

BitBlock BitBlock::zeros(std::size_t n_bits) {
  BitBlock b;
  b.n_bits_ = n_bits;
  b.bytes_.assign(byte_count(n_bits), 0);
  return b;
}

BitBlock BitBlock::from_bit_string(std::string_view bits) {
  BitBlock b = zeros(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      b.set_bit(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("BitBlock: bit string must contain only 0/1");
    }
  }
  return b;
}

BitBlock BitBlock::from_hex(std::string_view hex, std::size_t n_bits) {
  if (hex.size() != 2 * byte_count(n_bits)) {
    throw std::invalid_argument("BitBlock: hex length does not match bit count");
  }
  BitBlock b = zeros(n_bits);
  for (std::size_t i = 0; i < b.bytes_.size(); ++i) {
    b.bytes_[i] = static_cast<std::uint8_t>(hex_value(hex[2 * i]) << 4 | hex_value(hex[2 * i + 1]));
  }
  // Clear padding so the canonical-form invariant holds for any input.
  if (n_bits % 8 != 0 && !b.bytes_.empty()) {
    b.bytes_.back() &= static_cast<std::uint8_t>(0xFF << (8 - n_bits % 8));
  }
  return b;
}

bool BitBlock::bit(std::size_t index) const {
  if (index >= n_bits_) throw std::out_of_range("BitBlock: bit index out of range");
  return (bytes_[index / 8] >> (7 - index % 8)) & 1;
}

void BitBlock::set_bit(std::size_t index, bool value) {
  if (index >= n_bits_) throw std::out_of_range("BitBlock: bit index out of range");
  const std::uint8_t mask = static_cast<std::uint8_t>(1u << (7 - index % 8));
  if (value) {
    bytes_[index / 8] |= mask;
  } else {
    bytes_[index / 8] &= static_cast<std::uint8_t>(~mask);
  }
}

BitBlock BitBlock::slice(std::size_t offset, std::size_t n_bits) const {
  if (offset + n_bits > n_bits_) throw std::out_of_range("BitBlock: slice out of range");
  BitBlock out = zeros(n_bits);
  if (offset % 8 == 0) {
    // Byte-aligned fast path; the trailing partial byte is handled bitwise.
    const std::size_t whole = n_bits / 8;
    for (std::size_t i = 0; i < whole; ++i) out.bytes_[i] = bytes_[offset / 8 + i];
    for (std::size_t i = whole * 8; i < n_bits; ++i) out.set_bit(i, bit(offset + i));
  } else {
    for (std::size_t i = 0; i < n_bits; ++i) out.set_bit(i, bit(offset + i));
  }
  return out;
}

BitBlock& BitBlock::operator^=(const BitBlock& rhs) {
  if (n_bits_ != rhs.n_bits_) {
    throw std::invalid_argument("BitBlock: XOR requires equal lengths");
  }
  for (std::size_t i = 0; i < bytes_.size(); ++i) bytes_[i] ^= rhs.bytes_[i];
  return *this;
}

std::size_t BitBlock::mismatch_count(const BitBlock& other) const {
  if (n_bits_ != other.n_bits_) {
    throw std::invalid_argument("BitBlock: mismatch_count requires equal lengths");
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < bytes_.size(); ++i) {
    count += std::popcount(static_cast<unsigned>(bytes_[i] ^ other.bytes_[i]));
  }
  return count;
}

std::string BitBlock::to_hex() const {
  std::string out;
  out.reserve(2 * bytes_.size());
  for (std::uint8_t b : bytes_) {
    out.push_back(kHexDigits[b >> 4]);
    out.push_back(kHexDigits[b & 0xF]);
  }
  return out;
}

std::string BitBlock::to_bit_string() const {
  std::string out;
  out.reserve(n_bits_);
  for (std::size_t i = 0; i < n_bits_; ++i) out.push_back(bit(i) ? '1' : '0');
  return out;
}

BitBlock xor_blocks(const BitBlock& a, const BitBlock& b) {
  return a ^ b;
}

std::vector<BitBlock> partition_block(const BitBlock& block, std::size_t parts) {
  if (parts == 0) throw std::invalid_argument("partition_block: parts must be positive");
  if (block.size_bits() % parts != 0) {
    throw std::invalid_argument("partition_block: length not divisible by part count");
  }
  const std::size_t part_bits = block.size_bits() / parts;
  std::vector<BitBlock> out;
  out.reserve(parts);
  for (std::size_t i = 0; i < parts; ++i) out.push_back(block.slice(i * part_bits, part_bits));
  return out;
}

BitBlock concat_blocks(std::span<const BitBlock> blocks) {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size_bits();
  BitBlock out = BitBlock::zeros(total);
  std::size_t pos = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size_bits(); ++i) out.set_bit(pos + i, b.bit(i));
    pos += b.size_bits();
  }
  return out;
}

}  // namespace cachelab
