#include "pdec/projection.hpp"

#include <limits>
#include <stdexcept>

namespace pdec {
namespace {

constexpr std::array<std::array<unsigned, 4>, 4> kCandidates = {{
    {0b0000, 0b1111, 0b1000, 0b0111},  // 0
    {0b1100, 0b0011, 0b0100, 0b1011},  // 1
    {0b1010, 0b0101, 0b0010, 0b1101},  // w
    {0b1001, 0b0110, 0b0001, 0b1110},  // W
}};

unsigned top_bit(unsigned nibble) { return (nibble >> 3) & 1u; }

}  // namespace

ByteArray4x10 ByteArray4x10::parse(std::string_view text) {
  std::vector<std::string> rows;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) rows.push_back(current);
    current.clear();
  };
  for (char c : text) {
    if (c == '\n') {
      flush();
    } else if (c == '0' || c == '1') {
      current.push_back(c);
    } else if (c != ' ' && c != '\t' && c != '\r') {
      throw std::invalid_argument(std::string("invalid character in array: '") + c + "'");
    }
  }
  flush();
  if (rows.size() != 4) throw std::invalid_argument("array must have 4 rows");
  BinaryWord40 word;
  for (int r = 0; r < 4; ++r) {
    if (rows[r].size() != 10) throw std::invalid_argument("array rows must have 10 columns");
    for (int c = 0; c < 10; ++c)
      if (rows[r][c] == '1') word.flip(4 * c + r);
  }
  return ByteArray4x10(word);
}

std::string ByteArray4x10::to_string() const {
  std::string out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 10; ++c) out.push_back(bit(r, c) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

Gf4 proj_column(unsigned nibble) {
  Gf4 sum;
  if (nibble & 0b0100) sum += Gf4::one();
  if (nibble & 0b0010) sum += Gf4::omega();
  if (nibble & 0b0001) sum += Gf4::omega_bar();
  return sum;
}

QuaternaryWord proj(ByteArray4x10 v) {
  QuaternaryWord out;
  for (int i = 0; i < 10; ++i) out.set(i, proj_column(v.column(i)));
  return out;
}

ParityProfile parity_profile(ByteArray4x10 v) {
  ParityProfile profile;
  int odd = 0;
  unsigned top = 0;
  for (int i = 0; i < 10; ++i) {
    profile.column_parities[i] = parity_of(v.column(i));
    odd += profile.column_parities[i] == Parity::odd;
    top ^= top_bit(v.column(i));
  }
  profile.top_row_parity = top ? Parity::odd : Parity::even;
  profile.majority_parity = odd > 5 ? Parity::odd : Parity::even;
  for (int i = 0; i < 10; ++i)
    if (profile.column_parities[i] != profile.majority_parity) profile.minority_columns.push_back(i);
  return profile;
}

Parity required_top_parity(TopRowRule rule, Parity column_parity) {
  return rule == TopRowRule::matches_columns ? column_parity : Parity::even;
}

bool has_projection(BinaryWord40 v, const CodeTable& code, TopRowRule rule) {
  const ByteArray4x10 array(v);
  if (!code.contains(proj(array))) return false;
  const auto profile = parity_profile(array);
  if (!profile.minority_columns.empty()) return false;
  return profile.top_row_parity == required_top_parity(rule, profile.majority_parity);
}

bool has_projection_O(BinaryWord40 v, const CodeTable& code) {
  return has_projection(v, code, TopRowRule::matches_columns);
}

bool has_projection_E(BinaryWord40 v, const CodeTable& code) {
  return has_projection(v, code, TopRowRule::always_even);
}

const std::array<unsigned, 4>& column_candidates(Gf4 value) { return kCandidates[value.bits()]; }

std::optional<BinaryWord40> lift(ByteArray4x10 v, QuaternaryWord y_corrected, Parity target_parity,
                                 TopRowRule rule) {
  // Minimum-flip choice per column under a global top-row parity constraint:
  // a two-state DP over the running top-row parity that also counts optima.
  struct State {
    int cost = std::numeric_limits<int>::max() / 2;
    int ways = 0;
    std::array<unsigned, 10> columns{};
  };
  std::array<State, 2> states;
  states[0].cost = 0;
  states[0].ways = 1;

  const int offset = target_parity == Parity::even ? 0 : 2;
  for (int i = 0; i < 10; ++i) {
    const auto& options = kCandidates[y_corrected[i].bits()];
    std::array<State, 2> next;
    for (int top = 0; top < 2; ++top) {
      if (states[top].ways == 0) continue;
      for (int k = 0; k < 2; ++k) {
        const unsigned candidate = options[offset + k];
        const int cost = states[top].cost + std::popcount(candidate ^ v.column(i));
        State& dest = next[top ^ static_cast<int>(top_bit(candidate))];
        if (cost < dest.cost) {
          dest.cost = cost;
          dest.ways = states[top].ways;
          dest.columns = states[top].columns;
          dest.columns[i] = candidate;
        } else if (cost == dest.cost) {
          dest.ways += states[top].ways;
        }
      }
    }
    states = next;
  }

  const State& best = states[static_cast<int>(required_top_parity(rule, target_parity))];
  if (best.ways == 0 || best.cost > 3) return std::nullopt;
  if (best.ways > 1) throw std::logic_error("lift: multiple words at minimum distance within radius 3");

  BinaryWord40 out;
  for (int i = 0; i < 10; ++i) out.set_column(i, best.columns[i]);
  return out;
}

}  // namespace pdec
