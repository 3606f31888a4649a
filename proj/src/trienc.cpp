#include "tristego/trienc.hpp"

#include <algorithm>
#include <array>

#include "tristego/errors.hpp"

namespace tristego {
namespace {

// Byte-sized blocks dominate, so the four per-byte maps are table lookups.
struct ByteTables {
  std::array<std::uint8_t, 256> enc_left{};
  std::array<std::uint8_t, 256> enc_right{};
  std::array<std::uint8_t, 256> dec_left{};
  std::array<std::uint8_t, 256> dec_right{};
};

const ByteTables& tables() {
  static const ByteTables t = [] {
    ByteTables built;
    for (int v = 0; v < 256; ++v) {
      const auto b = static_cast<std::uint8_t>(v);
      const TriBlock block = TriBlock::from_byte(b);
      built.enc_left[v] = tri_left(block).to_byte();
      built.enc_right[v] = tri_right(block).to_byte();
      built.dec_left[v] = tri_decrypt_block(block, 0).to_byte();
      built.dec_right[v] = tri_decrypt_block(block, 1).to_byte();
    }
    return built;
  }();
  return t;
}

}  // namespace

TriBlock::TriBlock(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw Error("empty bit block");
  if (bits_.size() > kMaxTriBlockBits)
    throw Error("bit block longer than " + std::to_string(kMaxTriBlockBits));
  for (std::uint8_t b : bits_)
    if (b > 1) throw Error("bit values must be 0 or 1");
}

TriBlock TriBlock::from_byte(std::uint8_t value) {
  std::vector<std::uint8_t> bits(8);
  for (int k = 0; k < 8; ++k)
    bits[k] = static_cast<std::uint8_t>((value >> (7 - k)) & 1);
  return TriBlock(std::move(bits));
}

std::uint8_t TriBlock::to_byte() const {
  if (bits_.size() != 8) throw Error("block is not byte-sized");
  std::uint8_t v = 0;
  for (std::uint8_t b : bits_) v = static_cast<std::uint8_t>((v << 1) | b);
  return v;
}

std::vector<std::vector<std::uint8_t>> triangle_rows(const TriBlock& block) {
  std::vector<std::vector<std::uint8_t>> rows;
  rows.reserve(block.size());
  rows.push_back(block.bits());
  while (rows.back().size() > 1) {
    const auto& prev = rows.back();
    std::vector<std::uint8_t> next(prev.size() - 1);
    for (std::size_t j = 0; j + 1 < prev.size(); ++j)
      next[j] = prev[j] ^ prev[j + 1];
    rows.push_back(std::move(next));
  }
  return rows;
}

TriBlock tri_left(const TriBlock& block) {
  // Collapse the triangle in place, keeping the leading bit of each row.
  std::vector<std::uint8_t> row = block.bits();
  const std::size_t n = row.size();
  std::vector<std::uint8_t> out(n);
  out[0] = row[0];
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t j = 0; j < n - k; ++j) row[j] ^= row[j + 1];
    out[k] = row[0];
  }
  return TriBlock(std::move(out));
}

TriBlock tri_right(const TriBlock& block) {
  std::vector<std::uint8_t> row = block.bits();
  const std::size_t n = row.size();
  std::vector<std::uint8_t> out(n);
  out[0] = row[n - 1];
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t j = 0; j < n - k; ++j) row[j] ^= row[j + 1];
    out[k] = row[n - k - 1];
  }
  return TriBlock(std::move(out));
}

TriBlock tri_decrypt_block(const TriBlock& cipher, int edge) {
  if (edge != 0 && edge != 1) throw Error("edge must be 0 or 1");
  // Left readout is self-inverse; the right edge is the left edge of the
  // reversed block, so undo the reversal afterwards.
  TriBlock plain = tri_left(cipher);
  if (edge == 0) return plain;
  std::vector<std::uint8_t> bits = plain.bits();
  std::reverse(bits.begin(), bits.end());
  return TriBlock(std::move(bits));
}

std::vector<std::uint8_t> encrypt_bytes(std::span<const std::uint8_t> data,
                                        std::span<const std::uint8_t> edge) {
  if (edge.size() < data.size()) throw Error("not enough edge bits");
  const ByteTables& t = tables();
  std::vector<std::uint8_t> out(data.size());
  for (std::size_t i = 0; i < data.size(); ++i)
    out[i] = edge[i] ? t.enc_right[data[i]] : t.enc_left[data[i]];
  return out;
}

std::vector<std::uint8_t> decrypt_bytes(std::span<const std::uint8_t> data,
                                        std::span<const std::uint8_t> edge) {
  if (edge.size() < data.size()) throw Error("not enough edge bits");
  const ByteTables& t = tables();
  std::vector<std::uint8_t> out(data.size());
  for (std::size_t i = 0; i < data.size(); ++i)
    out[i] = edge[i] ? t.dec_right[data[i]] : t.dec_left[data[i]];
  return out;
}

}  // namespace tristego
