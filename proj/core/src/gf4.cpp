#include "pdec/gf4.hpp"

#include <stdexcept>

namespace pdec {

Gf4 Gf4::from_symbol(char symbol) {
  switch (symbol) {
    case '0': return zero();
    case '1': return one();
    case 'w': return omega();
    case 'W': return omega_bar();
    default:
      throw std::invalid_argument(std::string("invalid GF(4) symbol '") + symbol + "'");
  }
}

QuaternaryWord QuaternaryWord::parse(std::string_view text) {
  QuaternaryWord word;
  int count = 0;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (count == length)
      throw std::invalid_argument("quaternary word longer than 10 symbols: " + std::string(text));
    word.set(count++, Gf4::from_symbol(c));
  }
  if (count != length)
    throw std::invalid_argument("quaternary word must have 10 symbols: " + std::string(text));
  return word;
}

std::string QuaternaryWord::to_string() const {
  std::string out(length, '0');
  for (int i = 0; i < length; ++i) out[i] = (*this)[i].symbol();
  return out;
}

Gf4 hermitian_inner(std::span<const Gf4> x, std::span<const Gf4> y) {
  if (x.size() != y.size()) throw std::invalid_argument("hermitian_inner: length mismatch");
  Gf4 sum;
  for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * conj(y[i]);
  return sum;
}

bool trace_inner(std::span<const Gf4> x, std::span<const Gf4> y) {
  if (x.size() != y.size()) throw std::invalid_argument("trace_inner: length mismatch");
  bool sum = false;
  for (std::size_t i = 0; i < x.size(); ++i) sum ^= trace(x[i] * conj(y[i]));
  return sum;
}

Gf4 hermitian_inner(QuaternaryWord x, QuaternaryWord y) {
  const auto xs = x.symbols();
  const auto ys = y.symbols();
  return hermitian_inner(std::span<const Gf4>(xs), std::span<const Gf4>(ys));
}

bool trace_inner(QuaternaryWord x, QuaternaryWord y) {
  const auto xs = x.symbols();
  const auto ys = y.symbols();
  return trace_inner(std::span<const Gf4>(xs), std::span<const Gf4>(ys));
}

}  // namespace pdec
