#include "tristego/keycore.hpp"

#include <numeric>

#include "tristego/errors.hpp"

namespace tristego {
namespace {

constexpr std::uint64_t kSplitMixGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t splitmix_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// k-th output (0-based) of the stream started at `seed`. SplitMix64 state
// advances by a constant, so any position is addressable directly.
constexpr std::uint64_t stream_output(std::uint64_t seed,
                                      std::uint64_t k) noexcept {
  return splitmix_mix(seed + (k + 1) * kSplitMixGamma);
}

}  // namespace

SecretKey::SecretKey(std::vector<std::uint8_t> passphrase)
    : passphrase_(std::move(passphrase)) {
  if (passphrase_.empty()) throw Error("empty passphrase");
  if (passphrase_.size() > kMaxPassphraseBytes)
    throw Error("passphrase longer than " +
                std::to_string(kMaxPassphraseBytes) + " bytes");
}

SecretKey SecretKey::from_string(std::string_view s) {
  return SecretKey(std::vector<std::uint8_t>(s.begin(), s.end()));
}

std::pair<Prng64, std::uint64_t> Prng64::next() const noexcept {
  const std::uint64_t advanced = state_ + kSplitMixGamma;
  return {Prng64(advanced), splitmix_mix(advanced)};
}

std::uint64_t fnv1a64(std::span<const std::uint8_t> data) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint8_t b : data) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

KeySchedule derive_schedule(const SecretKey& key) {
  auto seed_for = [&key](std::uint8_t domain) {
    std::vector<std::uint8_t> buf = key.passphrase();
    buf.push_back(domain);
    return fnv1a64(buf);
  };
  return KeySchedule{seed_for(0x01), seed_for(0x02), seed_for(0x03)};
}

std::vector<std::uint8_t> keystream_bytes(std::uint64_t seed, std::size_t n) {
  std::vector<std::uint8_t> out(n);
  for (std::size_t i = 0; i < n; i += 8) {
    const std::uint64_t word = stream_output(seed, i / 8);
    for (std::size_t j = 0; j < 8 && i + j < n; ++j)
      out[i + j] = static_cast<std::uint8_t>(word >> (8 * (7 - j)));
  }
  return out;
}

std::vector<std::uint8_t> mask(std::span<const std::uint8_t> data,
                               std::uint64_t seed, std::uint64_t offset) {
  std::vector<std::uint8_t> out(data.size());
  std::uint64_t word = 0;
  std::uint64_t cached_block = ~0ULL;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const std::uint64_t pos = offset + i;
    if (pos / 8 != cached_block) {
      cached_block = pos / 8;
      word = stream_output(seed, cached_block);
    }
    out[i] = data[i] ^ static_cast<std::uint8_t>(word >> (8 * (7 - pos % 8)));
  }
  return out;
}

std::vector<std::uint8_t> edge_bits(std::uint64_t seed, std::size_t n) {
  std::vector<std::uint8_t> bits(n);
  for (std::size_t k = 0; k < n; ++k)
    bits[k] = static_cast<std::uint8_t>(stream_output(seed, k) & 1);
  return bits;
}

std::vector<std::uint32_t> frame_permutation(std::uint64_t seed,
                                             std::size_t frame_count) {
  if (frame_count == 0) throw Error("frame_count must be at least 1");
  if (frame_count > 0xffffffffULL) throw Error("frame_count too large");
  std::vector<std::uint32_t> perm(frame_count);
  std::iota(perm.begin(), perm.end(), 0u);
  Prng64 rng(seed);
  for (std::size_t i = frame_count - 1; i >= 1; --i) {
    auto [advanced, draw] = rng.next();
    rng = advanced;
    std::swap(perm[i], perm[draw % (i + 1)]);
  }
  return perm;
}

}  // namespace tristego
