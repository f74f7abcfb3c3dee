#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdec/binary.hpp"
#include "pdec/gf4.hpp"
#include "pdec/quaternary_codes.hpp"

namespace pdec {

// A BinaryWord40 viewed as 4 rows x 10 columns. Rows are labelled 0, 1, w, W
// from the top; column i holds positions 4i..4i+3.
class ByteArray4x10 {
 public:
  constexpr ByteArray4x10() = default;
  constexpr explicit ByteArray4x10(BinaryWord40 word) : word_(word) {}

  // Four lines of ten '0'/'1' characters, rows in label order; blank lines and
  // spaces inside a line are ignored. Throws std::invalid_argument.
  static ByteArray4x10 parse(std::string_view text);

  constexpr BinaryWord40 word() const { return word_; }
  constexpr unsigned column(int index) const { return word_.column(index); }
  constexpr bool bit(int row, int col) const { return (word_.column(col) >> (3 - row)) & 1u; }

  // Four lines of ten characters, each terminated by '\n'.
  std::string to_string() const;

  friend constexpr bool operator==(ByteArray4x10, ByteArray4x10) = default;

 private:
  BinaryWord40 word_;
};

enum class Parity { even = 0, odd = 1 };
constexpr Parity parity_of(unsigned bits) { return (std::popcount(bits) % 2) ? Parity::odd : Parity::even; }
constexpr Parity operator^(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}
const char* to_string(Parity p);

struct ParityProfile {
  std::array<Parity, 10> column_parities{};
  Parity top_row_parity = Parity::even;
  // Parity held by more columns; even on a 5/5 split.
  Parity majority_parity = Parity::even;
  // 0-based indices of columns holding the other parity, ascending.
  std::vector<int> minority_columns;

  bool decodable() const { return minority_columns.size() <= 3; }
};

// Per column: 0*v1 + 1*v2 + w*v3 + W*v4.
QuaternaryWord proj(ByteArray4x10 v);
Gf4 proj_column(unsigned nibble);

ParityProfile parity_profile(ByteArray4x10 v);

// How the top row parity of a codeword relates to its column parity.
enum class TopRowRule {
  matches_columns,  // projection O (doubly-even code)
  always_even,      // projection E (singly-even code)
};

Parity required_top_parity(TopRowRule rule, Parity column_parity);

bool has_projection(BinaryWord40 v, const CodeTable& code, TopRowRule rule);
bool has_projection_O(BinaryWord40 v, const CodeTable& code);
bool has_projection_E(BinaryWord40 v, const CodeTable& code);

// The four binary columns projecting to a GF(4) value: two even, then two odd.
const std::array<unsigned, 4>& column_candidates(Gf4 value);

// Rewrites columns of v so that the result projects to y_corrected, every
// column has target_parity and the top row obeys rule, flipping as few bits as
// possible. Returns nullopt when every such word is more than 3 bits from v.
// Throws std::logic_error if two different words achieve the same minimum
// within distance 3.
std::optional<BinaryWord40> lift(ByteArray4x10 v, QuaternaryWord y_corrected, Parity target_parity,
                                 TopRowRule rule);

}  // namespace pdec
