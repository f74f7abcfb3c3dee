#include "doctest.h"

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "pdec/constructions.hpp"
#include "pdec/decoders.hpp"
#include "pdec/oracle.hpp"

using namespace pdec;

namespace {
QuaternaryWord q(const char* s) { return QuaternaryWord::parse(s); }

Syndrome syn(const char* s) {
  Syndrome out;
  for (int i = 0; i < 5; ++i) out[i] = Gf4::from_symbol(s[i]);
  return out;
}

struct Example {
  const char* name;
  CaseId case_id;
  const char* y;
  const char* y_corrected;
  const char* syndrome;
  std::vector<int> erasures;
  std::size_t flips;
};

const std::vector<Example> kExamples = {
    {"example1", CaseId::I, "10101001ww", "10101001Ww", "0001w", {}, 2},
    {"example2", CaseId::II, "10W1ww10wW", "10WwWw10wW", "wW101", {4}, 3},
    {"example3", CaseId::III, "wwWWww1100", "wwWW001100", "0000W", {4, 5}, 2},
    {"example4", CaseId::IV, "WwWw10wWwW", "WwWwwWwWwW", "0000w", {1, 4, 5}, 3},
};

const std::vector<int> kNone;
}  // namespace

TEST_CASE("case classification") {
  for (const auto& ex : kExamples) {
    const auto label = classify_case(fixtures::array(std::string(ex.name) + "_received"));
    REQUIRE(label);
    CHECK(label->case_id == ex.case_id);
    CHECK(label->erasure_columns == ex.erasures);
  }
  BinaryWord40 five_odd;
  for (int c = 0; c < 5; ++c) five_odd.set_column(c, 0b1000);
  CHECK_FALSE(classify_case(ByteArray4x10(five_odd)));
}

TEST_CASE("case table rows and the errors/erasures gate") {
  const auto& rows = case_table();
  REQUIRE(rows.size() == 21);
  int per_case[5] = {};
  for (const auto& row : rows) {
    ++per_case[static_cast<int>(row.case_id)];
    CHECK(row.budget.erasures == static_cast<int>(row.case_id) - 1);
    CHECK(static_cast<int>(row.minority_errors.size()) == row.budget.erasures);
    CHECK(static_cast<int>(row.majority_errors.size()) == row.budget.errors);
    const bool gate = 2 * row.budget.errors + row.budget.erasures < 4;
    CHECK(row.decodable == gate);
  }
  CHECK(per_case[1] == 5);
  CHECK(per_case[2] == 5);
  CHECK(per_case[3] == 5);
  CHECK(per_case[4] == 6);
  // Every decodable row satisfies the gate.
  for (const auto& row : rows)
    if (row.decodable) CHECK(2 * row.budget.errors + row.budget.erasures < 4);
  const auto* row = find_case_row(CaseId::II, {2}, {1});
  REQUIRE(row);
  CHECK(row->subcase == 3);
  CHECK(find_case_row(CaseId::I, {1}, {}) == nullptr);
}

TEST_CASE("syndrome") {
  const auto h = e10_parity_check();
  CHECK(syndrome(q("10101001ww"), h) == syn("0001w"));
  CHECK(syndrome(q("wwWWww1100"), h) == syn("0000W"));
  CHECK(syndrome(q("10W1ww10wW"), h) == syn("wW101"));
  CHECK(syndrome(q("WwWw10wWwW"), h) == syn("0000w"));
  for (const auto& c : e10_table().codewords()) REQUIRE(syndrome(c, h) == syn("00000"));
  CHECK(h.column(8) == syn("0001w"));
  CHECK(to_string(syn("0001w")) == "0001w");
}

TEST_CASE("solve_syndrome") {
  const auto h = e10_parity_check();
  CHECK(solve_syndrome(syn("0001w"), kNone, 1, h) == q("0000000010"));
  const std::vector<int> e2 = {4};
  CHECK(solve_syndrome(syn("wW101"), e2, 1, h) == q("000W100000"));
  CHECK(solve_syndrome(syn("00000"), kNone, 0, h) == QuaternaryWord{});
  const std::vector<int> e3 = {4, 5};
  CHECK(solve_syndrome(syn("0000W"), e3, 0, h) == q("0000ww0000"));
  const std::vector<int> e4 = {1, 4, 5};
  CHECK(solve_syndrome(syn("0000w"), e4, 0, h) == q("0000WW0000"));
  CHECK_FALSE(solve_syndrome(syn("0001w"), kNone, 0, h));
  CHECK_THROWS_AS(solve_syndrome(syn("0001w"), e3, 1, h), std::invalid_argument);
}

TEST_CASE("find_closest_in_E10 examples") {
  CHECK(find_closest_in_E10(q("10101001ww"), kNone, 1) == q("10101001Ww"));
  CHECK(find_closest_in_E10(q("10101010wW"), kNone, 0) == q("10101010wW"));
  const std::vector<int> e3 = {4, 5};
  CHECK(find_closest_in_E10(q("wwWWww1100"), e3, 0) == q("wwWW001100"));
  CHECK_FALSE(find_closest_in_E10(q("10101001ww"), kNone, 0));
  CHECK_THROWS_AS(find_closest_in_E10(q("10101001ww"), kNone, 2), std::invalid_argument);
  const std::vector<int> bad = {10};
  CHECK_THROWS_AS(find_closest_in_E10(q("10101001ww"), bad, 0), std::invalid_argument);
}

TEST_CASE("table scan and type matching agree") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 3000; ++i) {
    const auto y = QuaternaryWord::from_packed(static_cast<std::uint32_t>(rng()) & QuaternaryWord::mask);
    std::vector<int> erasures;
    const int k = static_cast<int>(rng() % 4);
    while (static_cast<int>(erasures.size()) < k) {
      const int c = static_cast<int>(rng() % 10);
      if (std::find(erasures.begin(), erasures.end(), c) == erasures.end()) erasures.push_back(c);
    }
    for (int errors = 0; 2 * errors + k < 4; ++errors)
      REQUIRE(find_closest_in_E10(y, erasures, errors) == find_closest_by_type(y, erasures, errors));
  }
}

TEST_CASE("worked examples decode under both algorithms") {
  for (const auto& ex : kExamples) {
    CAPTURE(ex.name);
    const auto received = fixtures::array(std::string(ex.name) + "_received");
    const auto corrected = fixtures::array(std::string(ex.name) + "_corrected");
    CHECK(proj(received) == q(ex.y));
    CHECK(syndrome(proj(received), e10_parity_check()) == syn(ex.syndrome));
    for (auto algorithm : {Algorithm::representation, Algorithm::syndrome}) {
      const auto out = decode(received, algorithm, CodeVariant::doubly_even);
      REQUIRE(out.ok());
      CHECK(out.correction->corrected_projection == q(ex.y_corrected));
      CHECK(ByteArray4x10(out.correction->codeword) == corrected);
      CHECK(out.correction->flipped_bits.size() == ex.flips);
      REQUIRE(out.case_label);
      CHECK(out.case_label->case_id == ex.case_id);
      CHECK(out.failure_reason.empty());
    }
  }
}

TEST_CASE("subcase labels of the worked examples") {
  const auto ex1 = represent_decode(fixtures::array("example1_received"));
  CHECK(describe(*ex1.case_label) == "I-(ii) [10; 0]");
  const auto ex2 = syndrome_decode(fixtures::array("example2_received"));
  CHECK(describe(*ex2.case_label) == "II-(iii) [9; 1]");
  const auto ex3 = represent_decode(fixtures::array("example3_received"));
  CHECK(describe(*ex3.case_label) == "III-(i) [8; 2]");
  const auto ex4 = syndrome_decode(fixtures::array("example4_received"));
  CHECK(describe(*ex4.case_label) == "IV-(i) [7; 3]");
}

TEST_CASE("codewords decode to themselves with no flips") {
  const auto de = printed_c40_de();
  const auto se = printed_c40_se();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t m = rng() & 0xFFFFF;
    for (auto alg : {Algorithm::representation, Algorithm::syndrome}) {
      const auto d = decode(ByteArray4x10(de.encode(m)), alg, CodeVariant::doubly_even);
      REQUIRE(d.ok());
      CHECK(d.correction->codeword == de.encode(m));
      CHECK(d.correction->flipped_bits.empty());
      const auto s = decode_se(ByteArray4x10(se.encode(m)), alg);
      REQUIRE(s.ok());
      CHECK(s.correction->codeword == se.encode(m));
    }
  }
}

TEST_CASE("declared failures") {
  const auto c = printed_c40_de().encode(0x0F0F0);
  // Four flips inside one column.
  const ByteArray4x10 same_column(BinaryWord40(c.bits() ^ (std::uint64_t{0xF} << 8)));
  // Two paired flips in two columns: parities kept, projection off in two places.
  const ByteArray4x10 paired(BinaryWord40(c.bits() ^ (std::uint64_t{0x3} << 36) ^ (std::uint64_t{0x5} << 28)));
  for (const auto& v : {same_column, paired}) {
    for (auto alg : {Algorithm::representation, Algorithm::syndrome}) {
      const auto out = decode(v, alg, CodeVariant::doubly_even);
      CHECK_FALSE(out.ok());
      CHECK(out.failure_reason == kFailureMessage);
      CHECK_FALSE(oracle_decode(v.word(), de_oracle(), 3));
    }
  }
}

TEST_CASE("singly-even variant") {
  const auto se = printed_c40_se();
  const auto c = se.encode(0xABCDE);
  auto v = c;
  v.flip(17);
  for (auto alg : {Algorithm::representation, Algorithm::syndrome}) {
    const auto out = decode_se(ByteArray4x10(v), alg);
    REQUIRE(out.ok());
    CHECK(out.correction->codeword == c);
  }
  const ByteArray4x10 paired(BinaryWord40(c.bits() ^ (std::uint64_t{0x3} << 36) ^ (std::uint64_t{0x5} << 28)));
  CHECK_FALSE(decode_se(paired, Algorithm::representation).ok());
  CHECK_FALSE(decode_se(paired, Algorithm::syndrome).ok());
}

TEST_CASE("decoders agree with the oracle on random corruptions") {
  const auto de = printed_c40_de();
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<int> pos(0, 39);
  for (int i = 0; i < 2000; ++i) {
    auto v = de.encode(rng() & 0xFFFFF);
    const int weight = i % 6;
    for (int k = 0; k < weight; ++k) v.flip(pos(rng));
    const auto truth = oracle_decode_indexed(v, de_oracle(), 3);
    const auto r = represent_decode(ByteArray4x10(v));
    const auto s = syndrome_decode(ByteArray4x10(v));
    REQUIRE(r.ok() == truth.has_value());
    REQUIRE(s.ok() == truth.has_value());
    if (truth) {
      CHECK(r.correction->codeword == *truth);
      CHECK(s.correction->codeword == *truth);
    }
  }
}
