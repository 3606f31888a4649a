#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace tristego {

inline constexpr std::size_t kMaxPassphraseBytes = 1024;

/// User passphrase. Non-empty, at most kMaxPassphraseBytes bytes.
class SecretKey {
 public:
  explicit SecretKey(std::vector<std::uint8_t> passphrase);
  static SecretKey from_string(std::string_view s);

  const std::vector<std::uint8_t>& passphrase() const noexcept {
    return passphrase_;
  }

 private:
  std::vector<std::uint8_t> passphrase_;
};

/// The three independent stream seeds expanded from one passphrase.
struct KeySchedule {
  std::uint64_t seed_mask = 0;
  std::uint64_t seed_perm = 0;
  std::uint64_t seed_edge = 0;
};

/// SplitMix64 held as an immutable snapshot: next() returns the successor
/// state together with its output instead of mutating.
class Prng64 {
 public:
  explicit constexpr Prng64(std::uint64_t state) noexcept : state_(state) {}

  constexpr std::uint64_t state() const noexcept { return state_; }
  std::pair<Prng64, std::uint64_t> next() const noexcept;

 private:
  std::uint64_t state_;
};

/// FNV-1a, 64-bit.
std::uint64_t fnv1a64(std::span<const std::uint8_t> data) noexcept;

/// seed_mask/seed_perm/seed_edge = fnv1a64(passphrase || 0x01 / 0x02 / 0x03).
KeySchedule derive_schedule(const SecretKey& key);

/// First n bytes of the stream formed by serializing successive Prng64
/// outputs big-endian.
std::vector<std::uint8_t> keystream_bytes(std::uint64_t seed, std::size_t n);

/// XOR data with the keystream starting at stream byte `offset`. Applying it
/// twice with the same seed and offset restores the input.
std::vector<std::uint8_t> mask(std::span<const std::uint8_t> data,
                               std::uint64_t seed, std::uint64_t offset);

/// Bit k is the least-significant bit of the (k+1)-th Prng64 output.
/// 0 selects the left triangle edge, 1 the right.
std::vector<std::uint8_t> edge_bits(std::uint64_t seed, std::size_t n);

/// Seeded Fisher-Yates permutation of 0..frame_count-1: for i from
/// frame_count-1 down to 1, draw u, swap positions i and u mod (i+1).
std::vector<std::uint32_t> frame_permutation(std::uint64_t seed,
                                             std::size_t frame_count);

}  // namespace tristego
