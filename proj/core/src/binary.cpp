#include "pdec/binary.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace pdec {

BinaryWord40 BinaryWord40::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    text.remove_prefix(2);
    if (text.size() != 10)
      throw std::invalid_argument("hex word must have 10 digits: " + std::string(text));
    std::uint64_t bits = 0;
    for (char c : text) {
      const int digit = std::isdigit(static_cast<unsigned char>(c)) ? c - '0'
                        : (c >= 'a' && c <= 'f')                    ? c - 'a' + 10
                        : (c >= 'A' && c <= 'F')                    ? c - 'A' + 10
                                                                    : -1;
      if (digit < 0) throw std::invalid_argument("invalid hex digit in: " + std::string(text));
      bits = (bits << 4) | static_cast<std::uint64_t>(digit);
    }
    return BinaryWord40(bits);
  }

  std::uint64_t bits = 0;
  int count = 0;
  for (char c : text) {
    if (c == ' ' || c == '_' || c == '\t') continue;
    if (c != '0' && c != '1')
      throw std::invalid_argument("invalid bit character in: " + std::string(text));
    if (++count > length) throw std::invalid_argument("bit string longer than 40: " + std::string(text));
    bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
  }
  if (count != length) throw std::invalid_argument("bit string must have 40 bits: " + std::string(text));
  return BinaryWord40(bits);
}

std::string BinaryWord40::to_string() const {
  std::string out(length, '0');
  for (int i = 0; i < length; ++i) out[i] = test(i) ? '1' : '0';
  return out;
}

std::string BinaryWord40::to_hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(10, '0');
  for (int i = 0; i < 10; ++i) out[i] = digits[column(i)];
  return out;
}

std::vector<int> differing_positions(BinaryWord40 a, BinaryWord40 b) {
  std::vector<int> out;
  const BinaryWord40 diff = a ^ b;
  for (int i = 0; i < BinaryWord40::length; ++i)
    if (diff.test(i)) out.push_back(i);
  return out;
}

namespace gf2 {

std::vector<std::uint64_t> reduce(std::span<const std::uint64_t> rows) {
  std::vector<std::uint64_t> m(rows.begin(), rows.end());
  std::size_t next = 0;
  for (int bit = 63; bit >= 0 && next < m.size(); --bit) {
    const std::uint64_t pivot_mask = std::uint64_t{1} << bit;
    auto it = std::find_if(m.begin() + static_cast<std::ptrdiff_t>(next), m.end(),
                           [&](std::uint64_t r) { return (r & pivot_mask) != 0; });
    if (it == m.end()) continue;
    std::iter_swap(m.begin() + static_cast<std::ptrdiff_t>(next), it);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != next && (m[i] & pivot_mask)) m[i] ^= m[next];
    ++next;
  }
  m.resize(next);
  return m;
}

int rank(std::span<const std::uint64_t> rows) { return static_cast<int>(reduce(rows).size()); }

bool in_span(std::span<const std::uint64_t> reduced, std::uint64_t v) {
  for (std::uint64_t row : reduced) {
    const std::uint64_t pivot = std::uint64_t{1} << (63 - std::countl_zero(row));
    if (v & pivot) v ^= row;
  }
  return v == 0;
}

bool same_span(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  const auto ra = reduce(a);
  const auto rb = reduce(b);
  if (ra.size() != rb.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](std::uint64_t v) { return in_span(rb, v); }) &&
         std::all_of(b.begin(), b.end(), [&](std::uint64_t v) { return in_span(ra, v); });
}

std::uint64_t combine(std::span<const std::uint64_t> basis, std::uint64_t message) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if ((message >> i) & 1u) out ^= basis[i];
  return out;
}

}  // namespace gf2
}  // namespace pdec
