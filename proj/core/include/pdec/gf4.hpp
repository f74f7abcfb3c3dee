#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace pdec {

// Element of GF(4) = {0, 1, w, W} with W = w^2 = w + 1.
// Stored in two bits (0 -> 00, 1 -> 01, w -> 10, W -> 11) so that addition
// is XOR of the encodings.
class Gf4 {
 public:
  constexpr Gf4() = default;

  static constexpr Gf4 zero() { return Gf4(0); }
  static constexpr Gf4 one() { return Gf4(1); }
  static constexpr Gf4 omega() { return Gf4(2); }
  static constexpr Gf4 omega_bar() { return Gf4(3); }
  static constexpr Gf4 from_bits(unsigned bits) { return Gf4(bits & 3u); }

  // Symbols used in text formats: '0', '1', 'w' (omega), 'W' (omega bar).
  static Gf4 from_symbol(char symbol);
  char symbol() const { return "01wW"[value_]; }

  constexpr unsigned bits() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr Gf4 operator+(Gf4 a, Gf4 b) { return Gf4(a.value_ ^ b.value_); }
  friend constexpr Gf4 operator*(Gf4 a, Gf4 b) {
    constexpr std::array<std::uint8_t, 16> table = {
        0, 0, 0, 0,  //
        0, 1, 2, 3,  //
        0, 2, 3, 1,  //
        0, 3, 1, 2,  //
    };
    return Gf4(table[a.value_ * 4 + b.value_]);
  }
  Gf4& operator+=(Gf4 other) { return *this = *this + other; }
  Gf4& operator*=(Gf4 other) { return *this = *this * other; }

  friend constexpr bool operator==(Gf4, Gf4) = default;

 private:
  constexpr explicit Gf4(unsigned value) : value_(static_cast<std::uint8_t>(value)) {}
  std::uint8_t value_ = 0;
};

constexpr Gf4 add(Gf4 a, Gf4 b) { return a + b; }
constexpr Gf4 mul(Gf4 a, Gf4 b) { return a * b; }
// Frobenius conjugate a^2.
constexpr Gf4 conj(Gf4 a) { return a * a; }
// Tr(a) = a + a^2, always 0 or 1.
constexpr bool trace(Gf4 a) { return !(a + a * a).is_zero(); }

inline constexpr std::array<Gf4, 4> kAllGf4 = {Gf4::zero(), Gf4::one(), Gf4::omega(),
                                              Gf4::omega_bar()};
inline constexpr std::array<Gf4, 3> kNonzeroGf4 = {Gf4::one(), Gf4::omega(), Gf4::omega_bar()};

// Length-10 vector over GF(4) packed into 20 bits; symbol i lives in bits 2i, 2i+1.
class QuaternaryWord {
 public:
  static constexpr int length = 10;
  static constexpr std::uint32_t mask = (1u << 20) - 1;

  constexpr QuaternaryWord() = default;
  constexpr explicit QuaternaryWord(const std::array<Gf4, length>& symbols) {
    for (int i = 0; i < length; ++i) set(i, symbols[i]);
  }
  static constexpr QuaternaryWord from_packed(std::uint32_t packed) {
    QuaternaryWord w;
    w.packed_ = packed & mask;
    return w;
  }
  // Ten symbols from {0,1,w,W}; whitespace is ignored.
  static QuaternaryWord parse(std::string_view text);

  constexpr std::uint32_t packed() const { return packed_; }

  constexpr Gf4 operator[](int i) const { return Gf4::from_bits(packed_ >> (2 * i)); }
  constexpr void set(int i, Gf4 value) {
    packed_ = (packed_ & ~(3u << (2 * i))) | (value.bits() << (2 * i));
  }

  constexpr int weight() const {
    std::uint32_t nz = (packed_ | (packed_ >> 1)) & 0x55555u;
    int count = 0;
    for (; nz != 0; nz &= nz - 1) ++count;
    return count;
  }

  constexpr QuaternaryWord scaled(Gf4 scalar) const {
    QuaternaryWord out;
    for (int i = 0; i < length; ++i) out.set(i, scalar * (*this)[i]);
    return out;
  }

  constexpr std::array<Gf4, length> symbols() const {
    std::array<Gf4, length> out{};
    for (int i = 0; i < length; ++i) out[i] = (*this)[i];
    return out;
  }

  std::string to_string() const;

  friend constexpr QuaternaryWord operator+(QuaternaryWord a, QuaternaryWord b) {
    return from_packed(a.packed_ ^ b.packed_);
  }
  QuaternaryWord& operator+=(QuaternaryWord other) { return *this = *this + other; }
  friend constexpr bool operator==(QuaternaryWord, QuaternaryWord) = default;

 private:
  std::uint32_t packed_ = 0;
};

constexpr int distance(QuaternaryWord a, QuaternaryWord b) { return (a + b).weight(); }

// <x, y> = sum x_i * conj(y_i). Throws std::invalid_argument on length mismatch.
Gf4 hermitian_inner(std::span<const Gf4> x, std::span<const Gf4> y);
// x * y = sum Tr(x_i * conj(y_i)). Throws std::invalid_argument on length mismatch.
bool trace_inner(std::span<const Gf4> x, std::span<const Gf4> y);

Gf4 hermitian_inner(QuaternaryWord x, QuaternaryWord y);
bool trace_inner(QuaternaryWord x, QuaternaryWord y);

}  // namespace pdec
