#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tristego {

/// Base class for everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File or stream could not be opened, read, or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed container input. Carries the byte offset where parsing failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t byte_offset)
      : Error(what + " (at byte " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Message does not fit into the carrier's LSB plane.
class CapacityError : public Error {
 public:
  CapacityError(std::uint64_t needed_bits, std::uint64_t available_bits)
      : Error("capacity exceeded: need " + std::to_string(needed_bits) +
              " bits, have " + std::to_string(available_bits)),
        needed_bits_(needed_bits),
        available_bits_(available_bits) {}

  std::uint64_t needed_bits() const noexcept { return needed_bits_; }
  std::uint64_t available_bits() const noexcept { return available_bits_; }

 private:
  std::uint64_t needed_bits_;
  std::uint64_t available_bits_;
};

/// The decoded framing header is invalid: wrong key, or the carrier was
/// never embedded into.
class BadKeyOrNoPayload : public Error {
 public:
  BadKeyOrNoPayload() : Error("bad key or no payload") {}
};

/// The payload failed its checksum after decryption.
class CorruptPayload : public Error {
 public:
  CorruptPayload() : Error("corrupt payload (CRC mismatch)") {}
};

/// The decoded header declares more payload than the carrier can hold.
class TruncatedCarrier : public Error {
 public:
  TruncatedCarrier(std::uint64_t needed_slots, std::uint64_t available_slots)
      : Error("truncated carrier: payload needs " +
              std::to_string(needed_slots) + " LSB slots, carrier has " +
              std::to_string(available_slots)) {}
};

}  // namespace tristego
