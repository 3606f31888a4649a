#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tristego {

inline constexpr std::size_t kMaxTriBlockBits = 64;

/// A bit block for triangular encryption. Bit 0 is the most-significant bit
/// of the source byte. Length 1..=64.
class TriBlock {
 public:
  explicit TriBlock(std::vector<std::uint8_t> bits);
  static TriBlock from_byte(std::uint8_t value);

  /// Packs an 8-bit block back into a byte, bit 0 as MSB.
  std::uint8_t to_byte() const;

  std::size_t size() const noexcept { return bits_.size(); }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  bool operator==(const TriBlock&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// The XOR difference triangle: row 0 is the block, each later row is the
/// adjacent XOR of the previous, down to a single bit.
std::vector<std::vector<std::uint8_t>> triangle_rows(const TriBlock& block);

/// Left-edge readout: bit k of the result is the first bit of row k.
/// Equivalent to multiplying by the Pascal parity matrix over GF(2), and
/// self-inverse.
TriBlock tri_left(const TriBlock& block);

/// Right-edge readout: bit k is the last bit of row k. Equals tri_left of
/// the reversed block.
TriBlock tri_right(const TriBlock& block);

/// Inverts the readout chosen by `edge` (0 = left, 1 = right).
TriBlock tri_decrypt_block(const TriBlock& cipher, int edge);

/// Per-byte triangular encryption. Byte i is read off the left edge when
/// edge[i] is 0, the right edge when 1. Requires edge.size() >= data.size().
std::vector<std::uint8_t> encrypt_bytes(std::span<const std::uint8_t> data,
                                        std::span<const std::uint8_t> edge);

/// Exact inverse of encrypt_bytes under the same edge bits.
std::vector<std::uint8_t> decrypt_bytes(std::span<const std::uint8_t> data,
                                        std::span<const std::uint8_t> edge);

}  // namespace tristego
