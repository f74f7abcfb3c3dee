#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pdec {

// A 40-bit binary vector. Position 0 (coordinate 1 in printed matrices) is the
// most significant of the 40 bits, so the bit string and the 10-digit hex form
// both read left to right. Each hex digit is one column of the 4x10 array.
class BinaryWord40 {
 public:
  static constexpr int length = 40;
  static constexpr std::uint64_t mask = (std::uint64_t{1} << length) - 1;

  constexpr BinaryWord40() = default;
  constexpr explicit BinaryWord40(std::uint64_t bits) : bits_(bits & mask) {}

  // Accepts 40 characters of '0'/'1' (spaces ignored) or "0x" followed by 10 hex digits.
  static BinaryWord40 parse(std::string_view text);

  constexpr std::uint64_t bits() const { return bits_; }

  // position in [0, 40)
  constexpr bool test(int position) const { return (bits_ >> (39 - position)) & 1u; }
  constexpr void flip(int position) { bits_ ^= std::uint64_t{1} << (39 - position); }

  // Column in [0, 10) as a nibble; bit 3 is the top row (label 0), bit 0 the W row.
  constexpr unsigned column(int index) const {
    return static_cast<unsigned>(bits_ >> (36 - 4 * index)) & 0xFu;
  }
  constexpr void set_column(int index, unsigned nibble) {
    const int shift = 36 - 4 * index;
    bits_ = (bits_ & ~(std::uint64_t{0xF} << shift)) | (std::uint64_t{nibble & 0xFu} << shift);
  }

  constexpr int weight() const { return std::popcount(bits_); }

  std::string to_string() const;
  std::string to_hex() const;

  friend constexpr BinaryWord40 operator^(BinaryWord40 a, BinaryWord40 b) {
    return BinaryWord40(a.bits_ ^ b.bits_);
  }
  BinaryWord40& operator^=(BinaryWord40 other) {
    bits_ ^= other.bits_;
    return *this;
  }
  friend constexpr bool operator==(BinaryWord40, BinaryWord40) = default;

 private:
  std::uint64_t bits_ = 0;
};

constexpr int distance(BinaryWord40 a, BinaryWord40 b) { return (a ^ b).weight(); }

// Positions (0-based) where a and b differ, ascending.
std::vector<int> differing_positions(BinaryWord40 a, BinaryWord40 b);

// Linear algebra over GF(2) on row vectors packed in the low bits of a word.
// Pivots are taken from the most significant bit down, which for 40-bit rows is
// coordinate 1 first.
namespace gf2 {

// Reduced row echelon form with zero rows removed.
std::vector<std::uint64_t> reduce(std::span<const std::uint64_t> rows);

int rank(std::span<const std::uint64_t> rows);

// `reduced` must come from reduce().
bool in_span(std::span<const std::uint64_t> reduced, std::uint64_t v);

bool same_span(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

// Calls f(word) for all 2^k elements of the span of `basis` (k = basis.size()),
// starting from zero and stepping in Gray-code order, one row XOR per step.
template <class F>
void for_each_in_span(std::span<const std::uint64_t> basis, F&& f) {
  const std::uint64_t count = std::uint64_t{1} << basis.size();
  std::uint64_t word = 0;
  f(word);
  for (std::uint64_t i = 1; i < count; ++i) {
    word ^= basis[std::countr_zero(i)];
    f(word);
  }
}

// XOR of basis[i] over the set bits i of message.
std::uint64_t combine(std::span<const std::uint64_t> basis, std::uint64_t message);

}  // namespace gf2

}  // namespace pdec
