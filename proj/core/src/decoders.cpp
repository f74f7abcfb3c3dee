#include "pdec/decoders.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pdec {
namespace {

constexpr std::array<const char*, 7> kRoman = {"?", "i", "ii", "iii", "iv", "v", "vi"};

void check_budget(std::span<const int> erasures, int max_errors) {
  if (max_errors < 0 || 2 * max_errors + static_cast<int>(erasures.size()) >= 4)
    throw std::invalid_argument("errors/erasures budget outside 2*errors + erasures < 4");
  for (int e : erasures)
    if (e < 0 || e >= QuaternaryWord::length) throw std::invalid_argument("erasure column out of range");
}

// Symbol positions where a and b differ, excluding erased ones.
int unerased_differences(QuaternaryWord a, QuaternaryWord b, std::span<const int> erasures) {
  std::uint32_t diff = (a + b).packed();
  for (int e : erasures) diff &= ~(3u << (2 * e));
  return QuaternaryWord::from_packed(diff).weight();
}

template <class Visit>
void for_each_filling(QuaternaryWord y, std::span<const int> erasures, std::size_t index, Visit&& visit) {
  if (index == erasures.size()) {
    visit(y);
    return;
  }
  for (Gf4 value : kAllGf4) {
    y.set(erasures[index], value);
    for_each_filling(y, erasures, index + 1, visit);
  }
}

bool is_erased(std::span<const int> erasures, int column) {
  return std::find(erasures.begin(), erasures.end(), column) != erasures.end();
}

void resolve_subcase(CaseLabel& label, ByteArray4x10 received, BinaryWord40 codeword) {
  std::vector<int> majority;
  std::vector<int> minority;
  for (int c = 0; c < 10; ++c) {
    const int flips = std::popcount(received.column(c) ^ codeword.column(c));
    if (is_erased(label.erasure_columns, c))
      minority.push_back(flips);
    else if (flips != 0)
      majority.push_back(flips);
  }
  if (const auto* row = find_case_row(label.case_id, majority, minority)) {
    label.subcase = row->subcase;
    label.budget = row->budget;
  }
}

using Search = std::function<std::optional<QuaternaryWord>(QuaternaryWord, std::span<const int>, int)>;

DecodeOutcome run(ByteArray4x10 v, CodeVariant variant, const Search& search) {
  DecodeOutcome outcome;
  outcome.projection = proj(v);
  outcome.failure_reason = std::string(kFailureMessage);

  auto label = classify_case(v);
  if (!label) return outcome;
  outcome.case_label = label;

  const Parity target = parity_profile(v).majority_parity;
  const std::span<const int> erasures(label->erasure_columns);
  // Cases I and II first try to match with no unknown errors, then allow one.
  const int max_errors = (label->case_id == CaseId::I || label->case_id == CaseId::II) ? 1 : 0;

  for (int errors = 0; errors <= max_errors; ++errors) {
    const auto corrected = search(outcome.projection, erasures, errors);
    if (!corrected) continue;
    const auto codeword = lift(v, *corrected, target, top_row_rule(variant));
    if (!codeword) return outcome;

    resolve_subcase(*outcome.case_label, v, *codeword);
    outcome.correction = Correction{*codeword, *corrected, differing_positions(v.word(), *codeword)};
    outcome.failure_reason.clear();
    return outcome;
  }
  return outcome;
}

}  // namespace

const char* to_string(CaseId id) {
  switch (id) {
    case CaseId::I: return "I";
    case CaseId::II: return "II";
    case CaseId::III: return "III";
    case CaseId::IV: return "IV";
  }
  return "?";
}

std::string describe(const CaseLabel& label) {
  const int minority = static_cast<int>(label.erasure_columns.size());
  std::string out = to_string(label.case_id);
  if (label.subcase > 0 && label.subcase < static_cast<int>(kRoman.size()))
    out += std::string("-(") + kRoman[label.subcase] + ")";
  out += " [" + std::to_string(10 - minority) + "; " + std::to_string(minority) + "]";
  return out;
}

int CaseTableRow::total_errors() const {
  int total = 0;
  for (int e : majority_errors) total += e;
  for (int e : minority_errors) total += e;
  return total;
}

const std::vector<CaseTableRow>& case_table() {
  static const std::vector<CaseTableRow> rows = {
      {CaseId::I, 1, {}, {}, {0, 0}, true},
      {CaseId::I, 2, {2}, {}, {1, 0}, true},
      {CaseId::I, 3, {4}, {}, {1, 0}, true},
      {CaseId::I, 4, {2, 2}, {}, {2, 0}, false},
      {CaseId::I, 5, {2, 2, 2}, {}, {3, 0}, false},
      {CaseId::II, 1, {}, {1}, {0, 1}, true},
      {CaseId::II, 2, {}, {3}, {0, 1}, true},
      {CaseId::II, 3, {2}, {1}, {1, 1}, true},
      {CaseId::II, 4, {2, 2}, {1}, {2, 1}, false},
      {CaseId::II, 5, {2, 2, 2}, {1}, {3, 1}, false},
      {CaseId::III, 1, {}, {1, 1}, {0, 2}, true},
      {CaseId::III, 2, {}, {3, 1}, {0, 2}, true},
      {CaseId::III, 3, {2}, {1, 1}, {1, 2}, false},
      {CaseId::III, 4, {2}, {3, 1}, {1, 2}, false},
      {CaseId::III, 5, {2, 2}, {1, 1}, {2, 2}, false},
      {CaseId::IV, 1, {}, {1, 1, 1}, {0, 3}, true},
      {CaseId::IV, 2, {}, {3, 1, 1}, {0, 3}, true},
      {CaseId::IV, 3, {2}, {1, 1, 1}, {1, 3}, false},
      {CaseId::IV, 4, {2}, {3, 3, 1}, {1, 3}, false},
      {CaseId::IV, 5, {2}, {3, 1, 1}, {1, 3}, false},
      {CaseId::IV, 6, {2, 2}, {1, 1, 1}, {2, 3}, false},
  };
  return rows;
}

const CaseTableRow* find_case_row(CaseId id, std::vector<int> majority_errors, std::vector<int> minority_errors) {
  std::sort(majority_errors.rbegin(), majority_errors.rend());
  std::sort(minority_errors.rbegin(), minority_errors.rend());
  for (const auto& row : case_table())
    if (row.case_id == id && row.majority_errors == majority_errors && row.minority_errors == minority_errors)
      return &row;
  return nullptr;
}

std::optional<CaseLabel> classify_case(ByteArray4x10 v) {
  const auto profile = parity_profile(v);
  if (!profile.decodable()) return std::nullopt;
  CaseLabel label;
  label.case_id = static_cast<CaseId>(profile.minority_columns.size() + 1);
  label.erasure_columns = profile.minority_columns;
  label.budget = {0, static_cast<int>(profile.minority_columns.size())};
  return label;
}

const char* to_string(CodeVariant variant) {
  return variant == CodeVariant::doubly_even ? "DE" : "SE";
}

const char* to_string(Algorithm algorithm) {
  return algorithm == Algorithm::representation ? "representation" : "syndrome";
}

TopRowRule top_row_rule(CodeVariant variant) {
  return variant == CodeVariant::doubly_even ? TopRowRule::matches_columns : TopRowRule::always_even;
}

std::optional<QuaternaryWord> find_closest_in_E10(QuaternaryWord y, std::span<const int> erasures, int max_errors,
                                                  const CodeTable& table) {
  check_budget(erasures, max_errors);
  std::optional<QuaternaryWord> found;
  for (const auto& c : table.codewords()) {
    if (unerased_differences(c, y, erasures) > max_errors) continue;
    if (found) throw std::logic_error("find_closest_in_E10: more than one codeword within budget");
    found = c;
  }
  return found;
}

std::optional<QuaternaryWord> find_closest_by_type(QuaternaryWord y, std::span<const int> erasures, int max_errors) {
  check_budget(erasures, max_errors);
  const auto& classifier = orbit_classifier();
  std::optional<QuaternaryWord> found;
  auto consider = [&](QuaternaryWord candidate) {
    if (!classifier.is_codeword(candidate)) return;
    if (found && *found != candidate)
      throw std::logic_error("find_closest_by_type: more than one codeword within budget");
    found = candidate;
  };

  for_each_filling(y, erasures, 0, [&](QuaternaryWord filled) {
    consider(filled);
    if (max_errors == 0) return;
    for (int pos = 0; pos < QuaternaryWord::length; ++pos) {
      if (is_erased(erasures, pos)) continue;
      for (Gf4 delta : kNonzeroGf4) {
        QuaternaryWord changed = filled;
        changed.set(pos, filled[pos] + delta);
        consider(changed);
      }
    }
  });
  return found;
}

std::string to_string(const Syndrome& s) {
  std::string out;
  for (Gf4 x : s) out.push_back(x.symbol());
  return out;
}

Syndrome ParityCheckMatrix::column(int index) const {
  Syndrome out;
  for (int j = 0; j < 5; ++j) out[j] = rows[j][index];
  return out;
}

ParityCheckMatrix e10_parity_check() {
  const auto g = build_E10();
  ParityCheckMatrix h;
  std::copy(g.rows.begin(), g.rows.begin() + 5, h.rows.begin());
  return h;
}

Syndrome syndrome(QuaternaryWord y, const ParityCheckMatrix& h) {
  Syndrome s;
  for (int j = 0; j < 5; ++j) s[j] = hermitian_inner(h.rows[j], y);
  return s;
}

std::optional<QuaternaryWord> solve_syndrome(const Syndrome& s, std::span<const int> erasures, int max_extra,
                                             const ParityCheckMatrix& h) {
  check_budget(erasures, max_extra);
  std::optional<QuaternaryWord> found;
  auto consider = [&](QuaternaryWord e) {
    if (syndrome(e, h) != s) return;
    if (found && *found != e) throw std::logic_error("solve_syndrome: more than one error word within budget");
    found = e;
  };

  for_each_filling(QuaternaryWord{}, erasures, 0, [&](QuaternaryWord e) {
    consider(e);
    if (max_extra == 0) return;
    for (int pos = 0; pos < QuaternaryWord::length; ++pos) {
      if (is_erased(erasures, pos)) continue;
      for (Gf4 value : kNonzeroGf4) {
        QuaternaryWord extended = e;
        extended.set(pos, value);
        consider(extended);
      }
    }
  });
  return found;
}

DecodeOutcome represent_decode(ByteArray4x10 v, CodeVariant variant) {
  return run(v, variant, [](QuaternaryWord y, std::span<const int> erasures, int errors) {
    return find_closest_by_type(y, erasures, errors);
  });
}

DecodeOutcome syndrome_decode(ByteArray4x10 v, CodeVariant variant) {
  static const ParityCheckMatrix h = e10_parity_check();
  return run(v, variant,
             [](QuaternaryWord y, std::span<const int> erasures, int errors) -> std::optional<QuaternaryWord> {
               const auto e = solve_syndrome(syndrome(y, h), erasures, errors, h);
               if (!e) return std::nullopt;
               return y + *e;
             });
}

DecodeOutcome decode_se(ByteArray4x10 v, Algorithm algorithm) {
  return decode(v, algorithm, CodeVariant::singly_even);
}

DecodeOutcome decode(ByteArray4x10 v, Algorithm algorithm, CodeVariant variant) {
  return algorithm == Algorithm::representation ? represent_decode(v, variant) : syndrome_decode(v, variant);
}

}  // namespace pdec
