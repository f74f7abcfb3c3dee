#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "pdec/binary.hpp"
#include "pdec/constructions.hpp"

namespace pdec {

// Every codeword of a [40,20] code, in Gray-code order over the message bits
// of the given generator rows.
class OracleTable {
 public:
  // Throws std::invalid_argument unless the rows are 20 independent vectors.
  explicit OracleTable(const BinaryGeneratorMatrix& g);

  const std::vector<std::uint64_t>& codewords() const { return codewords_; }
  std::size_t size() const { return codewords_.size(); }

  // Codewords whose 10-bit chunk `chunk` (0..3, chunk 0 = positions 0..9)
  // equals `value`.
  std::span<const std::uint64_t> bucket(int chunk, unsigned value) const;

 private:
  std::vector<std::uint64_t> codewords_;
  std::array<std::vector<std::uint32_t>, 4> offsets_;
  std::array<std::vector<std::uint64_t>, 4> buckets_;
};

OracleTable build_oracle(const BinaryGeneratorMatrix& g);

// Shared tables for the doubly-even and singly-even codes from E10.
const OracleTable& de_oracle();
const OracleTable& se_oracle();

// Nearest codeword by a linear scan of the whole table, if within `radius`.
// For radius <= 3 the scan stops at the first codeword within range, which is
// then the unique one.
std::optional<BinaryWord40> oracle_decode(BinaryWord40 v, const OracleTable& t, int radius);

// Same answer for radius <= 3, restricted to the four buckets sharing a 10-bit
// chunk with v: with at most three differing bits, some chunk agrees exactly.
// Throws std::invalid_argument for radius > 3.
std::optional<BinaryWord40> oracle_decode_indexed(BinaryWord40 v, const OracleTable& t, int radius);

// Little-endian 64-bit words, 8 MiB for a full table.
void write_oracle_table(std::ostream& out, const OracleTable& t);
// FNV-1a over the bytes written by write_oracle_table.
std::uint64_t content_hash(const OracleTable& t);

}  // namespace pdec
