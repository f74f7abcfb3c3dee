#include "pdec/quaternary_codes.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "pdec/binary.hpp"

namespace pdec {
namespace {

QuaternaryGeneratorMatrix from_linear_rows(const std::array<const char*, 5>& rows) {
  QuaternaryGeneratorMatrix g;
  for (int i = 0; i < 5; ++i) {
    g.rows[i] = QuaternaryWord::parse(rows[i]);
    g.rows[i + 5] = g.rows[i].scaled(Gf4::omega());
  }
  return g;
}

}  // namespace

bool QuaternaryGeneratorMatrix::has_omega_multiples() const {
  for (int i = 0; i < 5; ++i)
    if (rows[i + 5] != rows[i].scaled(Gf4::omega())) return false;
  return true;
}

bool QuaternaryGeneratorMatrix::is_trace_self_orthogonal() const {
  for (const auto& a : rows)
    for (const auto& b : rows)
      if (trace_inner(a, b)) return false;
  return true;
}

QuaternaryGeneratorMatrix build_E10() {
  return from_linear_rows({
      "1111000000",
      "0011110000",
      "0000111100",
      "0000001111",
      "10101010wW",
  });
}

QuaternaryGeneratorMatrix build_B10() {
  return from_linear_rows({
      "1111000000",
      "01wW100000",
      "0000011110",
      "0000001wW1",
      "01Ww001Ww0",
  });
}

CodeTable::CodeTable(const QuaternaryGeneratorMatrix& g) : membership_(std::size_t{1} << 20) {
  std::array<std::uint64_t, 10> basis{};
  for (int i = 0; i < 10; ++i) basis[i] = g.rows[i].packed();
  if (gf2::rank(basis) != 10)
    throw std::invalid_argument("generator rows are not independent over GF(2)");

  codewords_.reserve(1024);
  for (std::uint64_t m = 0; m < 1024; ++m) {
    const auto w = QuaternaryWord::from_packed(static_cast<std::uint32_t>(gf2::combine(basis, m)));
    codewords_.push_back(w);
    membership_[w.packed()] = true;
    ++weight_distribution_[w.weight()];
  }
}

int CodeTable::minimum_weight() const {
  for (int w = 1; w <= 10; ++w)
    if (weight_distribution_[w] != 0) return w;
  return 0;
}

CodeTable enumerate(const QuaternaryGeneratorMatrix& g) { return CodeTable(g); }

const CodeTable& e10_table() {
  static const CodeTable table(build_E10());
  return table;
}

void write_code_table(std::ostream& out, const CodeTable& table) {
  for (const auto& w : table.codewords()) out << w.to_string() << '\n';
}

std::vector<QuaternaryWord> read_code_words(std::istream& in) {
  std::vector<QuaternaryWord> words;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    words.push_back(QuaternaryWord::parse(line));
  }
  return words;
}

QuaternaryWord apply_symmetry(const MonomialSymmetry& s, QuaternaryWord w) {
  const int swaps = static_cast<int>(std::count(s.intra_block_swaps.begin(), s.intra_block_swaps.end(), true));
  if (swaps % 2 != 0) throw std::invalid_argument("odd number of intra-block swaps");
  if (s.scalar.is_zero()) throw std::invalid_argument("symmetry scalar must be nonzero");
  auto sorted = s.block_permutation;
  std::sort(sorted.begin(), sorted.end());
  for (std::uint8_t i = 0; i < 5; ++i)
    if (sorted[i] != i) throw std::invalid_argument("block_permutation is not a permutation");

  QuaternaryWord out;
  for (int b = 0; b < 5; ++b) {
    Gf4 first = w[2 * b];
    Gf4 second = w[2 * b + 1];
    if (s.intra_block_swaps[b]) std::swap(first, second);
    const int dest = s.block_permutation[b];
    out.set(2 * dest, s.scalar * first);
    out.set(2 * dest + 1, s.scalar * second);
  }
  return out;
}

std::vector<MonomialSymmetry> all_symmetries() {
  std::vector<MonomialSymmetry> group;
  group.reserve(5760);
  std::array<std::uint8_t, 5> perm{0, 1, 2, 3, 4};
  do {
    for (unsigned pattern = 0; pattern < 32; ++pattern) {
      if (std::popcount(pattern) % 2 != 0) continue;
      for (Gf4 scalar : kNonzeroGf4) {
        MonomialSymmetry s;
        s.block_permutation = perm;
        for (int b = 0; b < 5; ++b) s.intra_block_swaps[b] = (pattern >> b) & 1u;
        s.scalar = scalar;
        group.push_back(s);
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return group;
}

std::array<MonomialSymmetry, 3> printed_generators() {
  MonomialSymmetry swap_two;  // (12)(34)
  swap_two.intra_block_swaps = {true, true, false, false, false};
  MonomialSymmetry block_swap;  // (13)(24)
  block_swap.block_permutation = {1, 0, 2, 3, 4};
  MonomialSymmetry cycle;  // (13579)(2 4 6 8 10)
  cycle.block_permutation = {1, 2, 3, 4, 0};
  return {swap_two, block_swap, cycle};
}

const std::array<OrbitType, 8>& orbit_types() {
  static const std::array<OrbitType, 8> types = {{
      {1, QuaternaryWord::parse("1111000000"), 30, 4},
      {2, QuaternaryWord::parse("10101010wW"), 240, 6},
      {3, QuaternaryWord::parse("wwWW110000"), 60, 6},
      {4, QuaternaryWord::parse("1111111100"), 15, 8},
      {5, QuaternaryWord::parse("1111wwww00"), 90, 8},
      {6, QuaternaryWord::parse("WwWw1010wW"), 480, 8},
      {7, QuaternaryWord::parse("WwWwwWwWwW"), 48, 10},
      {8, QuaternaryWord::parse("111111WWww"), 60, 10},
  }};
  return types;
}

const char* roman(int type_id) {
  static constexpr const char* names[] = {"?", "i", "ii", "iii", "iv", "v", "vi", "vii", "viii"};
  return (type_id >= 1 && type_id <= 8) ? names[type_id] : names[0];
}

OrbitClassifier::OrbitClassifier() : lookup_(std::size_t{1} << 20, 0) {
  const auto group = all_symmetries();
  for (const auto& type : orbit_types()) {
    for (const auto& s : group) {
      const auto image = apply_symmetry(s, type.representative);
      auto& slot = lookup_[image.packed()];
      if (slot != 0 && slot != type.type_id)
        throw std::logic_error("orbit types overlap at " + image.to_string());
      slot = static_cast<std::uint8_t>(type.type_id);
    }
  }
}

const OrbitClassifier& orbit_classifier() {
  static const OrbitClassifier classifier;
  return classifier;
}

const OrbitType& classify_type(QuaternaryWord w) {
  if (w.packed() == 0) throw std::invalid_argument("the zero word has no orbit type");
  const int id = orbit_classifier().type_of(w);
  if (id == 0) throw std::invalid_argument("not a nonzero codeword of E10: " + w.to_string());
  return orbit_types()[id - 1];
}

std::map<int, std::size_t> orbit_census() {
  std::map<int, std::size_t> counts;
  for (int id = 1; id <= 8; ++id) counts[id] = 0;
  for (const auto& w : e10_table().codewords()) {
    if (w.packed() == 0) continue;
    const int id = orbit_classifier().type_of(w);
    if (id == 0) throw std::logic_error("unclassified E10 codeword " + w.to_string());
    ++counts[id];
  }
  return counts;
}

}  // namespace pdec
