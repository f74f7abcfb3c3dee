#include "pdec/oracle.hpp"

#include <ostream>
#include <stdexcept>

namespace pdec {
namespace {

constexpr int kChunkBits = 10;

unsigned chunk_of(std::uint64_t word, int chunk) {
  return static_cast<unsigned>(word >> (30 - kChunkBits * chunk)) & 0x3FFu;
}

template <class Sink>
void for_each_byte(const OracleTable& t, Sink&& sink) {
  for (std::uint64_t w : t.codewords())
    for (int b = 0; b < 8; ++b) sink(static_cast<unsigned char>(w >> (8 * b)));
}

}  // namespace

OracleTable::OracleTable(const BinaryGeneratorMatrix& g) {
  const auto rows = g.packed();
  if (rows.size() != 20 || gf2::rank(rows) != 20)
    throw std::invalid_argument("oracle table needs 20 independent generator rows");

  codewords_.reserve(std::size_t{1} << 20);
  gf2::for_each_in_span(rows, [&](std::uint64_t w) { codewords_.push_back(w); });

  for (int chunk = 0; chunk < 4; ++chunk) {
    auto& offsets = offsets_[chunk];
    offsets.assign(1025, 0);
    for (std::uint64_t w : codewords_) ++offsets[chunk_of(w, chunk) + 1];
    for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
    auto cursor = offsets;
    buckets_[chunk].resize(codewords_.size());
    for (std::uint64_t w : codewords_) buckets_[chunk][cursor[chunk_of(w, chunk)]++] = w;
  }
}

std::span<const std::uint64_t> OracleTable::bucket(int chunk, unsigned value) const {
  const auto& offsets = offsets_[chunk];
  return std::span<const std::uint64_t>(buckets_[chunk]).subspan(offsets[value], offsets[value + 1] - offsets[value]);
}

OracleTable build_oracle(const BinaryGeneratorMatrix& g) { return OracleTable(g); }

const OracleTable& de_oracle() {
  static const OracleTable table(printed_c40_de());
  return table;
}

const OracleTable& se_oracle() {
  static const OracleTable table(printed_c40_se());
  return table;
}

std::optional<BinaryWord40> oracle_decode(BinaryWord40 v, const OracleTable& t, int radius) {
  const std::uint64_t bits = v.bits();
  int best_distance = BinaryWord40::length + 1;
  std::uint64_t best = 0;
  for (std::uint64_t c : t.codewords()) {
    const int d = std::popcount(c ^ bits);
    if (d < best_distance) {
      best_distance = d;
      best = c;
      if (radius <= 3 && d <= radius) break;
    }
  }
  if (best_distance > radius) return std::nullopt;
  return BinaryWord40(best);
}

std::optional<BinaryWord40> oracle_decode_indexed(BinaryWord40 v, const OracleTable& t, int radius) {
  if (radius > 3) throw std::invalid_argument("indexed oracle is exact only up to radius 3");
  const std::uint64_t bits = v.bits();
  for (int chunk = 0; chunk < 4; ++chunk) {
    for (std::uint64_t c : t.bucket(chunk, chunk_of(bits, chunk)))
      if (std::popcount(c ^ bits) <= radius) return BinaryWord40(c);
  }
  return std::nullopt;
}

void write_oracle_table(std::ostream& out, const OracleTable& t) {
  for_each_byte(t, [&](unsigned char byte) { out.put(static_cast<char>(byte)); });
}

std::uint64_t content_hash(const OracleTable& t) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for_each_byte(t, [&](unsigned char byte) {
    hash ^= byte;
    hash *= 0x100000001b3ull;
  });
  return hash;
}

}  // namespace pdec
