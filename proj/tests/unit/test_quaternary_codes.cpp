#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pdec/quaternary_codes.hpp"

using namespace pdec;

namespace {
QuaternaryWord q(const char* s) { return QuaternaryWord::parse(s); }

constexpr std::array<std::size_t, 11> kW10 = {1, 0, 0, 0, 30, 0, 300, 0, 585, 0, 108};
}  // namespace

TEST_CASE("E10 generator rows") {
  const auto g = build_E10();
  CHECK(g.rows[0] == q("1111000000"));
  CHECK(g.rows[4] == q("10101010wW"));
  CHECK(g.rows[9] == q("w0w0w0w0W1"));
  CHECK(g.has_omega_multiples());
  CHECK(g.is_trace_self_orthogonal());
  for (int i = 0; i < 5; ++i) CHECK(g.rows[i + 5] == g.rows[i].scaled(Gf4::omega()));
}

TEST_CASE("B10 generator rows") {
  const auto g = build_B10();
  CHECK(g.rows[1] == q("01wW100000"));
  CHECK(g.rows[4] == q("01Ww001Ww0"));
  CHECK(g.has_omega_multiples());
  CHECK(g.is_trace_self_orthogonal());
  for (const auto& a : g.rows)
    for (const auto& b : g.rows) CHECK_FALSE(trace_inner(a, b));
}

TEST_CASE("E10 and B10 weight enumerators") {
  const auto e10 = enumerate(build_E10());
  const auto b10 = enumerate(build_B10());
  CHECK(e10.size() == 1024);
  CHECK(b10.size() == 1024);
  CHECK(e10.weight_distribution() == kW10);
  CHECK(b10.weight_distribution() == kW10);
  CHECK(e10.minimum_weight() == 4);
  CHECK(b10.minimum_weight() == 4);
  CHECK(e10.contains(QuaternaryWord{}));
  CHECK(b10.contains(QuaternaryWord{}));
}

TEST_CASE("E10 is Hermitian self-orthogonal") {
  const auto g = build_E10();
  for (const auto& a : g.linear_rows())
    for (const auto& b : g.linear_rows()) CHECK(hermitian_inner(a, b) == Gf4::zero());
}

TEST_CASE("enumerate rejects dependent rows") {
  auto g = build_E10();
  g.rows[9] = g.rows[0];
  CHECK_THROWS_AS(enumerate(g), std::invalid_argument);
}

TEST_CASE("E10 is closed under addition") {
  const auto& t = e10_table();
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> pick(0, t.size() - 1);
  for (int i = 0; i < 10000; ++i) {
    const auto a = t.codewords()[pick(rng)];
    const auto b = t.codewords()[pick(rng)];
    REQUIRE(t.contains(a + b));
  }
}

TEST_CASE("code table text round trip") {
  const auto& t = e10_table();
  std::stringstream ss;
  write_code_table(ss, t);
  const auto words = read_code_words(ss);
  REQUIRE(words.size() == 1024);
  CHECK(std::equal(words.begin(), words.end(), t.codewords().begin()));
}

TEST_CASE("symmetry action examples") {
  const auto w = q("1111000000");
  CHECK(apply_symmetry(MonomialSymmetry::identity(), w) == w);

  MonomialSymmetry scale;
  scale.scalar = Gf4::omega();
  CHECK(apply_symmetry(scale, w) == q("wwww000000"));

  MonomialSymmetry swap12;
  swap12.block_permutation = {1, 0, 2, 3, 4};
  CHECK(apply_symmetry(swap12, q("1100000000")) == q("0011000000"));

  MonomialSymmetry odd;
  odd.intra_block_swaps[0] = true;
  CHECK_THROWS_AS(apply_symmetry(odd, w), std::invalid_argument);

  MonomialSymmetry zero;
  zero.scalar = Gf4::zero();
  CHECK_THROWS_AS(apply_symmetry(zero, w), std::invalid_argument);

  MonomialSymmetry bad;
  bad.block_permutation = {0, 0, 2, 3, 4};
  CHECK_THROWS_AS(apply_symmetry(bad, w), std::invalid_argument);
}

TEST_CASE("printed generators act as the stated permutations") {
  const auto gens = printed_generators();
  const auto x = q("01wW01wW1w");
  // (12)(34): swap inside blocks 1 and 2.
  CHECK(apply_symmetry(gens[0], x) == q("10Ww01wW1w"));
  // (13)(24): exchange blocks 1 and 2.
  CHECK(apply_symmetry(gens[1], x) == q("wW0101wW1w"));
  // (13579)(2468 10): each block moves one block to the right.
  CHECK(apply_symmetry(gens[2], x) == q("1w01wW01wW"));
}

TEST_CASE("the symmetry group preserves E10") {
  const auto& t = e10_table();
  const auto group = all_symmetries();
  CHECK(group.size() == 5760);

  std::mt19937_64 rng(7);
  const auto gens = printed_generators();
  std::vector<MonomialSymmetry> sample(gens.begin(), gens.end());
  std::sample(group.begin(), group.end(), std::back_inserter(sample), 100, rng);
  for (const auto& s : sample)
    for (const auto& c : t.codewords()) REQUIRE(t.contains(apply_symmetry(s, c)));
}

TEST_CASE("orbit types") {
  const auto& types = orbit_types();
  std::size_t total = 0;
  const std::array<std::size_t, 8> counts = {30, 240, 60, 15, 90, 480, 48, 60};
  const std::array<int, 8> weights = {4, 6, 6, 8, 8, 8, 10, 10};
  for (int i = 0; i < 8; ++i) {
    CHECK(types[i].type_id == i + 1);
    CHECK(types[i].expected_count == counts[i]);
    CHECK(types[i].weight == weights[i]);
    CHECK(types[i].representative.weight() == weights[i]);
    CHECK(e10_table().contains(types[i].representative));
    total += types[i].expected_count;
  }
  CHECK(total == 1023);
  CHECK(std::string(roman(6)) == "vi");
}

TEST_CASE("classify_type examples") {
  CHECK(classify_type(q("0Ww1w1W0w1")).type_id == 6);
  CHECK(classify_type(q("1111000000")).type_id == 1);
  CHECK(classify_type(q("WwWwwWwWwW")).type_id == 7);
  CHECK(classify_type(q("10101001Ww")).type_id == 2);
  CHECK_THROWS_AS(classify_type(QuaternaryWord{}), std::invalid_argument);
  CHECK_THROWS_AS(classify_type(q("10101001ww")), std::invalid_argument);
}

TEST_CASE("orbit census") {
  const auto census = orbit_census();
  const std::map<int, std::size_t> expected = {{1, 30}, {2, 240}, {3, 60}, {4, 15},
                                               {5, 90}, {6, 480}, {7, 48}, {8, 60}};
  CHECK(census == expected);
  for (const auto& c : e10_table().codewords()) {
    if (c.packed() == 0) continue;
    CHECK(classify_type(c).weight == c.weight());
  }
}
