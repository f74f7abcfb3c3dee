#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pdec/binary.hpp"
#include "pdec/gf4.hpp"
#include "pdec/quaternary_codes.hpp"

namespace pdec {

struct BinaryGeneratorMatrix {
  std::vector<BinaryWord40> rows;

  std::vector<std::uint64_t> packed() const;
  int rank() const;
  // G * G^T == 0 over GF(2).
  bool is_self_orthogonal() const;
  bool contains(BinaryWord40 v) const;
  bool same_code(const BinaryGeneratorMatrix& other) const;
  // message bit i selects rows[i]
  BinaryWord40 encode(std::uint64_t message) const;
};

// Per-symbol 4-tuples 0 -> 0000, 1 -> 0011, w -> 0101, W -> 0110.
BinaryWord40 binmap(QuaternaryWord w);

// The ten single-block generators 1111 of d4^10.
std::array<BinaryWord40, 10> build_d4n();
// Nine adjacent double blocks (blocks i and i+1 all ones) spanning (d4^10)_0.
std::array<BinaryWord40, 9> build_d4n0();
// 1000 repeated nine times, then 0111.
BinaryWord40 build_eB();
// 1000 repeated ten times.
BinaryWord40 build_eC();

// Lifts of a self-dual additive (10, 2^10) code to length 40, returned as a
// reduced basis. Each throws std::domain_error if the span is not 20-dimensional.
BinaryGeneratorMatrix rho_A(const QuaternaryGeneratorMatrix& c);
BinaryGeneratorMatrix rho_B(const QuaternaryGeneratorMatrix& c);
BinaryGeneratorMatrix rho_C(const QuaternaryGeneratorMatrix& c);

// The generator matrix of the doubly-even [40,20,8] code from E10 with the
// printed row order, and its singly-even sibling (last row replaced by e_C).
BinaryGeneratorMatrix printed_c40_de();
BinaryGeneratorMatrix printed_c40_se();

enum class SelfDualType { doubly_even, singly_even, not_self_dual };
const char* to_string(SelfDualType type);

struct CertificationReport {
  int rank = 0;
  bool self_orthogonal = false;  // G G^T = 0
  bool self_dual = false;        // self-orthogonal and rank 20
  int min_distance = 0;
  std::array<std::uint64_t, 41> weight_distribution{};
  SelfDualType type = SelfDualType::not_self_dual;
  std::vector<std::string> failures;

  std::uint64_t count(int weight) const { return weight_distribution[weight]; }
};

// Enumerates the whole span (Gray code over a reduced basis).
CertificationReport certify(const BinaryGeneratorMatrix& g);

std::string format_report(const CertificationReport& report);

// 20 lines of 40 characters in {0,1}; whitespace inside a line is ignored.
void write_matrix(std::ostream& out, const BinaryGeneratorMatrix& g);
// Throws std::invalid_argument on malformed input.
BinaryGeneratorMatrix read_matrix(std::istream& in);

}  // namespace pdec
