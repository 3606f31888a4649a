#include "tristego/stego.hpp"

#include <algorithm>

#include "tristego/errors.hpp"
#include "tristego/trienc.hpp"

namespace tristego {
namespace {

const std::array<std::uint32_t, 256>& crc_table() {
  static const std::array<std::uint32_t, 256> table = [] {
    std::array<std::uint32_t, 256> t{};
    for (std::uint32_t i = 0; i < 256; ++i) {
      std::uint32_t c = i;
      for (int k = 0; k < 8; ++k)
        c = (c & 1) ? (0xEDB88320u ^ (c >> 1)) : (c >> 1);
      t[i] = c;
    }
    return t;
  }();
  return table;
}

void put_u32be(std::uint8_t* out, std::uint32_t v) {
  out[0] = static_cast<std::uint8_t>(v >> 24);
  out[1] = static_cast<std::uint8_t>(v >> 16);
  out[2] = static_cast<std::uint8_t>(v >> 8);
  out[3] = static_cast<std::uint8_t>(v);
}

std::uint32_t get_u32be(const std::uint8_t* in) {
  return (std::uint32_t(in[0]) << 24) | (std::uint32_t(in[1]) << 16) |
         (std::uint32_t(in[2]) << 8) | std::uint32_t(in[3]);
}

}  // namespace

std::uint32_t crc32(std::span<const std::uint8_t> data) noexcept {
  std::uint32_t c = 0xFFFFFFFFu;
  for (std::uint8_t b : data) c = crc_table()[(c ^ b) & 0xFF] ^ (c >> 8);
  return c ^ 0xFFFFFFFFu;
}

std::array<std::uint8_t, kStegoHeaderBytes> encode_header(
    std::span<const std::uint8_t> payload) {
  if (payload.size() > 0xFFFFFFFFull)
    throw Error("payload longer than 2^32 - 1 bytes");
  std::array<std::uint8_t, kStegoHeaderBytes> out{};
  std::copy(StegoHeader::kMagic.begin(), StegoHeader::kMagic.end(),
            out.begin());
  out[4] = StegoHeader::kVersion;
  out[5] = 0x00;  // flags, reserved
  put_u32be(&out[6], static_cast<std::uint32_t>(payload.size()));
  put_u32be(&out[10], crc32(payload));
  return out;
}

BitCursor::BitCursor(std::vector<std::uint32_t> frame_order,
                     std::size_t bytes_per_frame)
    : order_(std::move(frame_order)), bytes_per_frame_(bytes_per_frame) {
  if (order_.empty()) throw Error("empty frame order");
  if (bytes_per_frame_ == 0) throw Error("zero-sized frames");
}

std::uint64_t BitCursor::remaining() const noexcept {
  return std::uint64_t(order_.size() - rank_) * bytes_per_frame_ - sample_;
}

std::pair<std::uint32_t, std::size_t> BitCursor::next() {
  if (rank_ >= order_.size()) throw Error("bit cursor exhausted");
  const std::pair<std::uint32_t, std::size_t> slot{order_[rank_], sample_};
  if (++sample_ == bytes_per_frame_) {
    sample_ = 0;
    ++rank_;
  }
  return slot;
}

std::uint64_t lsb_slots_used(std::uint64_t message_len) noexcept {
  return kStegoHeaderBits + 8 * message_len;
}

std::uint64_t capacity(const VideoSequence& video) {
  video.validate();
  const std::uint64_t total = video.total_samples();
  return total < kStegoHeaderBits ? 0 : (total - kStegoHeaderBits) / 8;
}

VideoSequence embed(const VideoSequence& cover,
                    std::span<const std::uint8_t> message,
                    const SecretKey& key) {
  cover.validate();
  const std::uint64_t total = cover.total_samples();
  const std::uint64_t needed = lsb_slots_used(message.size());
  if (needed > total) throw CapacityError(needed, total);

  const KeySchedule schedule = derive_schedule(key);

  std::vector<std::uint8_t> stream;
  stream.reserve(kStegoHeaderBytes + message.size());
  const auto header = encode_header(message);
  stream.insert(stream.end(), header.begin(), header.end());
  stream.insert(stream.end(), message.begin(), message.end());

  stream = mask(stream, schedule.seed_mask, 0);
  stream = encrypt_bytes(stream, edge_bits(schedule.seed_edge, stream.size()));

  VideoSequence out = cover;
  BitCursor cursor(frame_permutation(schedule.seed_perm, cover.frames.size()),
                   cover.meta.bytes_per_frame());
  for (std::size_t bit = 0; bit < stream.size() * 8; ++bit) {
    const auto [frame, sample] = cursor.next();
    const std::uint8_t value = (stream[bit / 8] >> (7 - bit % 8)) & 1;
    std::uint8_t& s = out.frames[frame].samples[sample];
    s = static_cast<std::uint8_t>((s & ~std::uint8_t(1)) | value);
  }
  return out;
}

std::vector<std::uint8_t> extract(const VideoSequence& stego,
                                  const SecretKey& key) {
  stego.validate();
  const std::uint64_t total = stego.total_samples();
  if (total < kStegoHeaderBits) throw BadKeyOrNoPayload();

  const KeySchedule schedule = derive_schedule(key);
  BitCursor cursor(frame_permutation(schedule.seed_perm, stego.frames.size()),
                   stego.meta.bytes_per_frame());

  auto read_bytes = [&](std::size_t count) {
    std::vector<std::uint8_t> out(count, 0);
    for (std::size_t bit = 0; bit < count * 8; ++bit) {
      const auto [frame, sample] = cursor.next();
      const std::uint8_t lsb = stego.frames[frame].samples[sample] & 1;
      out[bit / 8] = static_cast<std::uint8_t>((out[bit / 8] << 1) | lsb);
    }
    return out;
  };

  const std::vector<std::uint8_t> cipher_header = read_bytes(kStegoHeaderBytes);
  const std::vector<std::uint8_t> masked_header = decrypt_bytes(
      cipher_header, edge_bits(schedule.seed_edge, kStegoHeaderBytes));
  const std::vector<std::uint8_t> header =
      mask(masked_header, schedule.seed_mask, 0);

  if (!std::equal(StegoHeader::kMagic.begin(), StegoHeader::kMagic.end(),
                  header.begin()) ||
      header[4] != StegoHeader::kVersion)
    throw BadKeyOrNoPayload();

  const std::uint32_t payload_len = get_u32be(&header[6]);
  const std::uint32_t expected_crc = get_u32be(&header[10]);
  const std::uint64_t needed = lsb_slots_used(payload_len);
  if (needed > total) throw TruncatedCarrier(needed, total);

  const std::vector<std::uint8_t> cipher_payload = read_bytes(payload_len);
  const std::vector<std::uint8_t> edges =
      edge_bits(schedule.seed_edge, kStegoHeaderBytes + payload_len);
  const std::vector<std::uint8_t> masked_payload = decrypt_bytes(
      cipher_payload, std::span(edges).subspan(kStegoHeaderBytes));
  std::vector<std::uint8_t> payload =
      mask(masked_payload, schedule.seed_mask, kStegoHeaderBytes);

  if (crc32(payload) != expected_crc) throw CorruptPayload();
  return payload;
}

}  // namespace tristego
