#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pdec/binary.hpp"
#include "pdec/gf4.hpp"
#include "pdec/projection.hpp"
#include "pdec/quaternary_codes.hpp"

namespace pdec {

inline constexpr std::string_view kFailureMessage = "more than three errors occurred";

// Column-parity cases: I = [10; 0], II = [9; 1], III = [8; 2], IV = [7; 3].
enum class CaseId { I = 1, II = 2, III = 3, IV = 4 };
const char* to_string(CaseId id);

// (errors at unknown positions, erasures) in the projected E10 word.
struct ErrorBudget {
  int errors = 0;
  int erasures = 0;
  friend bool operator==(const ErrorBudget&, const ErrorBudget&) = default;
};

struct CaseLabel {
  CaseId case_id = CaseId::I;
  // Row of the case table (1-based, i.e. (i), (ii), ...); 0 until a decode
  // has fixed the error pattern.
  int subcase = 0;
  std::vector<int> erasure_columns;  // 0-based minority columns
  ErrorBudget budget;
};

// "II-(iii) [9; 1]" style description; erasure columns are not included.
std::string describe(const CaseLabel& label);

// One row of the table of error patterns for each parity case. Errors per
// column are listed for the majority-parity columns and for the minority
// columns separately, both in descending order.
struct CaseTableRow {
  CaseId case_id;
  int subcase;
  std::vector<int> majority_errors;
  std::vector<int> minority_errors;
  ErrorBudget budget;
  bool decodable;

  int total_errors() const;
};

// All 21 rows (I: 5, II: 5, III: 5, IV: 6).
const std::vector<CaseTableRow>& case_table();

// Row matching an observed pattern, or nullptr.
const CaseTableRow* find_case_row(CaseId id, std::vector<int> majority_errors, std::vector<int> minority_errors);

// Maps the parity profile to Case I..IV; nullopt for four or more minority columns.
std::optional<CaseLabel> classify_case(ByteArray4x10 v);

enum class CodeVariant { doubly_even, singly_even };
enum class Algorithm { representation, syndrome };
const char* to_string(CodeVariant variant);
const char* to_string(Algorithm algorithm);
TopRowRule top_row_rule(CodeVariant variant);

struct Correction {
  BinaryWord40 codeword;
  QuaternaryWord corrected_projection;
  std::vector<int> flipped_bits;  // 0-based positions
};

struct DecodeOutcome {
  std::optional<Correction> correction;
  std::string failure_reason;
  std::optional<CaseLabel> case_label;
  QuaternaryWord projection;

  bool ok() const { return correction.has_value(); }
};

// Closest E10 codeword agreeing with y outside `erasures` except in at most
// max_errors positions, by a scan of the codeword table. Throws
// std::invalid_argument if 2*max_errors + |erasures| >= 4 and std::logic_error
// if more than one codeword qualifies.
std::optional<QuaternaryWord> find_closest_in_E10(QuaternaryWord y, std::span<const int> erasures, int max_errors,
                                                  const CodeTable& table = e10_table());

// Same contract, answered by trying the candidate fillings of y and matching
// them against the eight codeword types under the symmetry group.
std::optional<QuaternaryWord> find_closest_by_type(QuaternaryWord y, std::span<const int> erasures, int max_errors);

using Syndrome = std::array<Gf4, 5>;
std::string to_string(const Syndrome& s);

// H = the five GF(4)-linear rows of G(E10).
struct ParityCheckMatrix {
  std::array<QuaternaryWord, 5> rows;

  Syndrome column(int index) const;
};
ParityCheckMatrix e10_parity_check();

// s = H * conj(y)^T; zero iff y is in E10.
Syndrome syndrome(QuaternaryWord y, const ParityCheckMatrix& h);

// Error word e with H * conj(e)^T = s, supported on `erasures` plus at most
// max_extra further columns. nullopt if none exists; std::logic_error if
// several do; std::invalid_argument for budgets outside 2*max_extra + |erasures| < 4.
std::optional<QuaternaryWord> solve_syndrome(const Syndrome& s, std::span<const int> erasures, int max_extra,
                                             const ParityCheckMatrix& h);

DecodeOutcome represent_decode(ByteArray4x10 v, CodeVariant variant = CodeVariant::doubly_even);
DecodeOutcome syndrome_decode(ByteArray4x10 v, CodeVariant variant = CodeVariant::doubly_even);
DecodeOutcome decode_se(ByteArray4x10 v, Algorithm algorithm = Algorithm::representation);
DecodeOutcome decode(ByteArray4x10 v, Algorithm algorithm, CodeVariant variant);

}  // namespace pdec
