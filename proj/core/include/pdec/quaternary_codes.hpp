#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "pdec/gf4.hpp"

namespace pdec {

// GF(2)-basis of a length-10 additive code. For the two Hermitian self-dual
// codes here, rows 5..9 are omega times rows 0..4 and rows 0..4 span the code
// over GF(4).
struct QuaternaryGeneratorMatrix {
  std::array<QuaternaryWord, 10> rows{};

  std::span<const QuaternaryWord, 5> linear_rows() const {
    return std::span<const QuaternaryWord, 5>(rows.data(), 5);
  }
  // Rows 5..9 equal omega * rows 0..4.
  bool has_omega_multiples() const;
  // All row pairs are orthogonal under the trace inner product.
  bool is_trace_self_orthogonal() const;
};

QuaternaryGeneratorMatrix build_E10();
QuaternaryGeneratorMatrix build_B10();

// All 2^10 GF(2) combinations of a generator matrix. codewords[m] is the sum
// of rows selected by the bits of m.
class CodeTable {
 public:
  // Throws std::invalid_argument if the rows are not independent over GF(2).
  explicit CodeTable(const QuaternaryGeneratorMatrix& g);

  const std::vector<QuaternaryWord>& codewords() const { return codewords_; }
  const std::array<std::size_t, 11>& weight_distribution() const { return weight_distribution_; }
  std::size_t size() const { return codewords_.size(); }
  bool contains(QuaternaryWord w) const { return membership_[w.packed()]; }
  int minimum_weight() const;

 private:
  std::vector<QuaternaryWord> codewords_;
  std::vector<bool> membership_;
  std::array<std::size_t, 11> weight_distribution_{};
};

CodeTable enumerate(const QuaternaryGeneratorMatrix& g);

// Shared tables for E10, built on first use.
const CodeTable& e10_table();

// One word per line in the {0,1,w,W} alphabet.
void write_code_table(std::ostream& out, const CodeTable& table);
std::vector<QuaternaryWord> read_code_words(std::istream& in);

// Element of the monomial group of E10 acting on the blocks
// {1,2},{3,4},{5,6},{7,8},{9,10}: block b moves to block_permutation[b]
// (0-based), swapped internally first if intra_block_swaps[b], then every
// symbol is multiplied by scalar.
struct MonomialSymmetry {
  std::array<std::uint8_t, 5> block_permutation{0, 1, 2, 3, 4};
  std::array<bool, 5> intra_block_swaps{};
  Gf4 scalar = Gf4::one();

  static MonomialSymmetry identity() { return {}; }
};

// Throws std::invalid_argument for an odd number of swaps, a zero scalar or a
// block_permutation that is not a permutation.
QuaternaryWord apply_symmetry(const MonomialSymmetry& s, QuaternaryWord w);

// All 5! * 2^4 * 3 = 5760 group elements.
std::vector<MonomialSymmetry> all_symmetries();

// (12)(34), (13)(24) and (13579)(2 4 6 8 10) as MonomialSymmetry values.
std::array<MonomialSymmetry, 3> printed_generators();

struct OrbitType {
  int type_id = 0;  // 1..8 for rows (i)..(viii)
  QuaternaryWord representative;
  std::size_t expected_count = 0;
  int weight = 0;
};

// The eight codeword types of E10 with their printed representatives.
const std::array<OrbitType, 8>& orbit_types();

// Roman numeral for a type id, "i" .. "viii".
const char* roman(int type_id);

// Lookup from every word of GF(4)^10 to its orbit type, built by expanding each
// representative under the full symmetry group. Membership here is derived from
// the eight representatives only, independent of the generator matrix.
class OrbitClassifier {
 public:
  OrbitClassifier();

  // Type id 1..8, or 0 for the zero word and for words outside E10.
  int type_of(QuaternaryWord w) const { return lookup_[w.packed()]; }
  bool is_codeword(QuaternaryWord w) const { return w.packed() == 0 || lookup_[w.packed()] != 0; }

 private:
  std::vector<std::uint8_t> lookup_;
};

const OrbitClassifier& orbit_classifier();

// Throws std::invalid_argument for the zero word or a word outside E10.
const OrbitType& classify_type(QuaternaryWord w);

// Number of nonzero E10 codewords of each type id. Throws std::logic_error if a
// codeword cannot be classified.
std::map<int, std::size_t> orbit_census();

}  // namespace pdec
