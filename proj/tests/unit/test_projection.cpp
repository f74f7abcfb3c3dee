#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "pdec/constructions.hpp"
#include "pdec/oracle.hpp"
#include "pdec/projection.hpp"

using namespace pdec;

namespace {
const ByteArray4x10 kSampleArray(BinaryWord40::parse("1110 1000 1100 0101 1001 1100 0010 0100 1111 0110"));

QuaternaryWord q(const char* s) { return QuaternaryWord::parse(s); }
}  // namespace

TEST_CASE("array view round trip") {
  const auto text = fixtures::read_text("examples/example1_received.txt");
  const auto v = ByteArray4x10::parse(text);
  CHECK(v.to_string() == text);
  CHECK(ByteArray4x10(v.word()) == v);
  CHECK(v.bit(0, 1));
  CHECK(v.bit(1, 0));
  CHECK_FALSE(v.bit(0, 0));
  CHECK_THROWS_AS(ByteArray4x10::parse("0101\n"), std::invalid_argument);
  CHECK_THROWS_AS(ByteArray4x10::parse("012\n"), std::invalid_argument);
}

TEST_CASE("proj") {
  CHECK(proj(kSampleArray) == q("W01wW1w10W"));
  CHECK(proj(ByteArray4x10{}) == QuaternaryWord{});
  CHECK(proj_column(0b0110) == Gf4::omega_bar());
  for (unsigned nibble = 0; nibble < 16; ++nibble) {
    const auto value = proj_column(nibble);
    const auto& cands = column_candidates(value);
    int matches = 0;
    for (unsigned c : cands) matches += (c == nibble);
    CHECK(matches == 1);
    CHECK(parity_of(cands[0]) == Parity::even);
    CHECK(parity_of(cands[1]) == Parity::even);
    CHECK(parity_of(cands[2]) == Parity::odd);
    CHECK(parity_of(cands[3]) == Parity::odd);
  }
}

TEST_CASE("proj is additive") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 10000; ++i) {
    const BinaryWord40 u(rng());
    const BinaryWord40 v(rng());
    REQUIRE(proj(ByteArray4x10(u ^ v)) == proj(ByteArray4x10(u)) + proj(ByteArray4x10(v)));
  }
}

TEST_CASE("parity profile") {
  const auto p = parity_profile(kSampleArray);
  for (int c = 0; c < 10; ++c) {
    const bool odd = c == 0 || c == 1 || c == 6 || c == 7;
    CHECK(p.column_parities[c] == (odd ? Parity::odd : Parity::even));
  }
  CHECK(p.top_row_parity == Parity::even);
  CHECK(p.majority_parity == Parity::even);
  CHECK(p.minority_columns == std::vector<int>{0, 1, 6, 7});
  CHECK_FALSE(p.decodable());

  const auto zero = parity_profile(ByteArray4x10{});
  CHECK(zero.minority_columns.empty());
  CHECK(zero.top_row_parity == Parity::even);

  CHECK(parity_profile(fixtures::array("example2_received")).minority_columns == std::vector<int>{4});
}

TEST_CASE("projection O and E membership of generator rows") {
  const auto& e10 = e10_table();
  for (const auto& row : printed_c40_de().rows) CHECK(has_projection_O(row, e10));
  for (const auto& row : rho_B(build_E10()).rows) CHECK(has_projection_O(row, e10));
  for (const auto& row : printed_c40_se().rows) CHECK(has_projection_E(row, e10));
  for (const auto& row : rho_C(build_E10()).rows) CHECK(has_projection_E(row, e10));
  for (const auto& c : e10.codewords()) REQUIRE(has_projection_O(binmap(c), e10));
  CHECK(has_projection_O(build_eB(), e10));
  CHECK_FALSE(has_projection_E(build_eB(), e10));
  CHECK(has_projection_E(build_eC(), e10));
  CHECK_FALSE(has_projection_O(build_eC(), e10));
}

TEST_CASE("projection O characterizes the doubly-even code") {
  const auto& e10 = e10_table();
  const auto de = printed_c40_de();
  const auto se = printed_c40_se();
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t m = rng() & 0xFFFFF;
    REQUIRE(has_projection_O(de.encode(m), e10));
    REQUIRE(has_projection_E(se.encode(m), e10));
    const BinaryWord40 v(rng());
    REQUIRE(has_projection_O(v, e10) == de.contains(v));
    REQUIRE(has_projection_E(v, e10) == se.contains(v));
  }
}

TEST_CASE("even fiber over one E10 codeword has 512 elements, all codewords") {
  const auto de = printed_c40_de();
  const auto y = q("10101010wW");
  int count = 0;
  for (unsigned choice = 0; choice < 1024; ++choice) {
    BinaryWord40 v;
    for (int c = 0; c < 10; ++c) v.set_column(c, column_candidates(y[c])[(choice >> c) & 1u]);
    const auto profile = parity_profile(ByteArray4x10(v));
    if (profile.top_row_parity != Parity::even) continue;
    ++count;
    REQUIRE(de.contains(v));
  }
  CHECK(count == 512);
}

TEST_CASE("lift reproduces the worked corrections") {
  const auto r1 = fixtures::array("example1_received");
  const auto c1 = lift(r1, q("10101001Ww"), parity_profile(r1).majority_parity, TopRowRule::matches_columns);
  REQUIRE(c1);
  CHECK(ByteArray4x10(*c1) == fixtures::array("example1_corrected"));
  CHECK(differing_positions(r1.word(), *c1) == std::vector<int>{34, 35});

  const auto r4 = fixtures::array("example4_received");
  const auto target = parity_profile(r4).majority_parity;
  const auto c4 = lift(r4, q("WwWwwWwWwW"), target, TopRowRule::matches_columns);
  REQUIRE(c4);
  CHECK(ByteArray4x10(*c4) == fixtures::array("example4_corrected"));
  CHECK(differing_positions(r4.word(), *c4).size() == 3);

  const auto codeword = printed_c40_de().encode(0x5A5A5);
  const ByteArray4x10 a(codeword);
  CHECK(lift(a, proj(a), parity_profile(a).majority_parity, TopRowRule::matches_columns) == codeword);
}

TEST_CASE("lift refuses corrections beyond three flips") {
  // All four bits of one column flipped: same projection, top row parity off.
  auto v = printed_c40_de().encode(0x12345).bits() ^ (std::uint64_t{0xF} << 20);
  const ByteArray4x10 a{BinaryWord40(v)};
  CHECK_FALSE(lift(a, proj(a), parity_profile(a).majority_parity, TopRowRule::matches_columns));
}

TEST_CASE("lift inverts any correctable corruption when given the true projection") {
  const auto de = printed_c40_de();
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> pos(0, 39);
  for (int i = 0; i < 3000; ++i) {
    const auto c = de.encode(rng() & 0xFFFFF);
    auto v = c;
    const int weight = i % 4;
    while (distance(v, c) < weight) v.flip(pos(rng));
    const ByteArray4x10 a(v);
    const auto profile = parity_profile(a);
    const Parity true_parity = parity_of(c.column(0));
    if (profile.majority_parity != true_parity) continue;
    const auto lifted = lift(a, proj(ByteArray4x10(c)), true_parity, TopRowRule::matches_columns);
    REQUIRE(lifted);
    REQUIRE(*lifted == c);
    REQUIRE(distance(*lifted, v) <= 3);
    REQUIRE(has_projection_O(*lifted, e10_table()));
  }
}
