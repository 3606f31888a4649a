#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tristego/keycore.hpp"
#include "tristego/videoio.hpp"

namespace tristego {

inline constexpr std::size_t kStegoHeaderBytes = 14;
inline constexpr std::uint64_t kStegoHeaderBits = 112;

/// 14-byte framing record carried ahead of the payload, wire layout:
///   magic "TLSB" | version 0x01 | flags 0x00 | payload_len u32 BE |
///   CRC-32 of the plaintext payload, u32 BE
/// The whole record travels through the same mask + triangular-encrypt
/// pipeline as the payload, so no plaintext signature appears in the LSB
/// plane. Magic and version are validated on extraction.
struct StegoHeader {
  static constexpr std::array<std::uint8_t, 4> kMagic{0x54, 0x4C, 0x53, 0x42};
  static constexpr std::uint8_t kVersion = 0x01;

  std::uint8_t flags = 0x00;
  std::uint32_t payload_len = 0;
  std::uint32_t payload_crc32 = 0;
};

/// CRC-32 (polynomial 0xEDB88320, init and final XOR 0xFFFFFFFF).
std::uint32_t crc32(std::span<const std::uint8_t> data) noexcept;

/// Serializes the framing record for `payload`. Rejects payloads longer
/// than 2^32 - 1 bytes.
std::array<std::uint8_t, kStegoHeaderBytes> encode_header(
    std::span<const std::uint8_t> payload);

/// Enumerates LSB slots: frames in the given permuted order, samples
/// 0..bytes_per_frame-1 within each frame. Each slot is visited once.
class BitCursor {
 public:
  BitCursor(std::vector<std::uint32_t> frame_order,
            std::size_t bytes_per_frame);

  std::uint64_t remaining() const noexcept;

  /// Next (frame index, sample index) slot, frame index in original order.
  std::pair<std::uint32_t, std::size_t> next();

 private:
  std::vector<std::uint32_t> order_;
  std::size_t bytes_per_frame_;
  std::size_t rank_ = 0;
  std::size_t sample_ = 0;
};

/// Slots consumed by a message of the given byte length: 112 + 8 * len.
std::uint64_t lsb_slots_used(std::uint64_t message_len) noexcept;

/// Maximum payload bytes the carrier can hold,
/// floor((total samples - 112) / 8); 0 when below the header size.
std::uint64_t capacity(const VideoSequence& video);

/// Hides `message` in a copy of `cover`: frames it with a header, masks,
/// triangular-encrypts, and writes the cipher bits MSB-first into the LSB
/// slots of key-permuted frames. Metadata, frame order and every non-LSB
/// bit are untouched.
VideoSequence embed(const VideoSequence& cover,
                    std::span<const std::uint8_t> message,
                    const SecretKey& key);

/// Inverse of embed: recovers the exact message bytes, or throws
/// BadKeyOrNoPayload / CorruptPayload / TruncatedCarrier.
std::vector<std::uint8_t> extract(const VideoSequence& stego,
                                  const SecretKey& key);

}  // namespace tristego
