#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "tristego/errors.hpp"
#include "tristego/trienc.hpp"

using namespace tristego;

namespace {

TriBlock block_from(std::initializer_list<std::uint8_t> bits) {
  return TriBlock(std::vector<std::uint8_t>(bits));
}

// Enumerates every n-bit block as the bits of `value`, MSB first.
TriBlock block_from_value(std::uint64_t value, std::size_t n) {
  std::vector<std::uint8_t> bits(n);
  for (std::size_t k = 0; k < n; ++k)
    bits[k] = std::uint8_t((value >> (n - 1 - k)) & 1);
  return TriBlock(std::move(bits));
}

}  // namespace

TEST_CASE("TriBlock validation") {
  CHECK_THROWS_AS(TriBlock(std::vector<std::uint8_t>{}), Error);
  CHECK_THROWS_AS(TriBlock(std::vector<std::uint8_t>(65, 0)), Error);
  CHECK_THROWS_AS(block_from({0, 2}), Error);
  CHECK(TriBlock::from_byte(0xB2).to_byte() == 0xB2);
  CHECK_THROWS_AS(block_from({1, 0}).to_byte(), Error);
}

TEST_CASE("triangle_rows examples") {
  const auto rows = triangle_rows(block_from({1, 0, 1, 1}));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::uint8_t>{1, 0, 1, 1});
  CHECK(rows[1] == std::vector<std::uint8_t>{1, 1, 0});
  CHECK(rows[2] == std::vector<std::uint8_t>{0, 1});
  CHECK(rows[3] == std::vector<std::uint8_t>{1});

  const auto zero_rows = triangle_rows(block_from({0, 0, 0, 0, 0}));
  for (const auto& row : zero_rows)
    CHECK(std::all_of(row.begin(), row.end(),
                      [](std::uint8_t b) { return b == 0; }));

  const auto two = triangle_rows(block_from({1, 0}));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == std::vector<std::uint8_t>{1, 0});
  CHECK(two[1] == std::vector<std::uint8_t>{1});
}

TEST_CASE("edge readout examples") {
  CHECK(tri_left(TriBlock::from_byte(0xB2)).to_byte() == 0xDE);
  CHECK(tri_right(TriBlock::from_byte(0xB2)).to_byte() == 0x5E);
  CHECK(tri_left(block_from({1})) == block_from({1}));
  CHECK(tri_right(block_from({0})) == block_from({0}));
  CHECK(tri_left(block_from({0, 0, 0, 0})) == block_from({0, 0, 0, 0}));
  CHECK(tri_right(block_from({1, 1, 1, 1})) == block_from({1, 0, 0, 0}));
}

TEST_CASE("tri_decrypt_block examples") {
  CHECK(tri_decrypt_block(TriBlock::from_byte(0xDE), 0).to_byte() == 0xB2);
  CHECK(tri_decrypt_block(TriBlock::from_byte(0x5E), 1).to_byte() == 0xB2);
  CHECK(tri_decrypt_block(TriBlock::from_byte(0x00), 0).to_byte() == 0x00);
  CHECK(tri_decrypt_block(TriBlock::from_byte(0x00), 1).to_byte() == 0x00);
  CHECK_THROWS_AS(tri_decrypt_block(TriBlock::from_byte(1), 2), Error);
}

TEST_CASE("involution and edge duality, exhaustive n=1..12") {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint64_t v = 0; v < (1ULL << n); ++v) {
      const TriBlock b = block_from_value(v, n);
      REQUIRE(tri_left(tri_left(b)) == b);

      std::vector<std::uint8_t> reversed = b.bits();
      std::reverse(reversed.begin(), reversed.end());
      REQUIRE(tri_right(b) == tri_left(TriBlock(std::move(reversed))));

      REQUIRE(tri_decrypt_block(tri_left(b), 0) == b);
      REQUIRE(tri_decrypt_block(tri_right(b), 1) == b);
    }
  }
}

TEST_CASE("tri_left equals Pascal parity matrix multiplication, n=1..12") {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto matrix = testoracle::pascal_parity_matrix(n);
    for (std::uint64_t v = 0; v < (1ULL << n); ++v) {
      const TriBlock b = block_from_value(v, n);
      REQUIRE(tri_left(b).bits() == testoracle::gf2_matvec(matrix, b.bits()));
    }
  }
}

TEST_CASE("linearity over GF(2)") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const TriBlock a = block_from_value(rng(), n);
    const TriBlock b = block_from_value(rng(), n);
    std::vector<std::uint8_t> xored(n);
    for (std::size_t k = 0; k < n; ++k) xored[k] = a.bits()[k] ^ b.bits()[k];
    const TriBlock both(std::move(xored));

    for (auto* readout : {&tri_left, &tri_right}) {
      const auto ra = readout(a).bits();
      const auto rb = readout(b).bits();
      const auto rx = readout(both).bits();
      for (std::size_t k = 0; k < n; ++k) REQUIRE(rx[k] == (ra[k] ^ rb[k]));
    }
  }
}

TEST_CASE("encrypt_bytes / decrypt_bytes examples") {
  const std::vector<std::uint8_t> b2{0xB2};
  CHECK(encrypt_bytes(b2, std::vector<std::uint8_t>{0}) ==
        std::vector<std::uint8_t>{0xDE});
  CHECK(encrypt_bytes(b2, std::vector<std::uint8_t>{1}) ==
        std::vector<std::uint8_t>{0x5E});
  CHECK(decrypt_bytes(std::vector<std::uint8_t>{0xDE},
                      std::vector<std::uint8_t>{0}) == b2);
  CHECK(decrypt_bytes(std::vector<std::uint8_t>{0x5E},
                      std::vector<std::uint8_t>{1}) == b2);
  CHECK(encrypt_bytes({}, {}).empty());
  CHECK_THROWS_AS(encrypt_bytes(b2, {}), Error);
  CHECK_THROWS_AS(decrypt_bytes(b2, {}), Error);
}

TEST_CASE("decrypt inverts encrypt on random data") {
  std::mt19937_64 rng(42);
  std::size_t cases = 0;
  while (cases < 10000) {
    const std::size_t len = 1 + rng() % 64;
    std::vector<std::uint8_t> data(len);
    std::vector<std::uint8_t> edge(len);
    for (auto& b : data) b = std::uint8_t(rng());
    for (auto& e : edge) e = std::uint8_t(rng() & 1);
    REQUIRE(decrypt_bytes(encrypt_bytes(data, edge), edge) == data);
    cases += len;
  }
}
