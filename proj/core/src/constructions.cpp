#include "pdec/constructions.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pdec {
namespace {

constexpr std::array<unsigned, 4> kSymbolNibble = {0x0, 0x3, 0x5, 0x6};

BinaryGeneratorMatrix from_packed(const std::vector<std::uint64_t>& rows) {
  BinaryGeneratorMatrix g;
  for (auto r : rows) g.rows.emplace_back(r);
  return g;
}

BinaryGeneratorMatrix lift(const QuaternaryGeneratorMatrix& c, const std::vector<BinaryWord40>& extra,
                           const char* name) {
  std::vector<std::uint64_t> rows;
  for (const auto& r : c.rows) rows.push_back(binmap(r).bits());
  for (const auto& e : extra) rows.push_back(e.bits());
  auto reduced = gf2::reduce(rows);
  if (reduced.size() != 20)
    throw std::domain_error(std::string(name) + ": span has dimension " + std::to_string(reduced.size()) +
                            ", expected 20");
  return from_packed(reduced);
}

}  // namespace

std::vector<std::uint64_t> BinaryGeneratorMatrix::packed() const {
  std::vector<std::uint64_t> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.bits());
  return out;
}

int BinaryGeneratorMatrix::rank() const { return gf2::rank(packed()); }

bool BinaryGeneratorMatrix::is_self_orthogonal() const {
  for (const auto& a : rows)
    for (const auto& b : rows)
      if (std::popcount(a.bits() & b.bits()) % 2 != 0) return false;
  return true;
}

bool BinaryGeneratorMatrix::contains(BinaryWord40 v) const {
  return gf2::in_span(gf2::reduce(packed()), v.bits());
}

bool BinaryGeneratorMatrix::same_code(const BinaryGeneratorMatrix& other) const {
  return gf2::same_span(packed(), other.packed());
}

BinaryWord40 BinaryGeneratorMatrix::encode(std::uint64_t message) const {
  return BinaryWord40(gf2::combine(packed(), message));
}

BinaryWord40 binmap(QuaternaryWord w) {
  BinaryWord40 out;
  for (int i = 0; i < QuaternaryWord::length; ++i) out.set_column(i, kSymbolNibble[w[i].bits()]);
  return out;
}

std::array<BinaryWord40, 10> build_d4n() {
  std::array<BinaryWord40, 10> out{};
  for (int i = 0; i < 10; ++i) out[i].set_column(i, 0xF);
  return out;
}

std::array<BinaryWord40, 9> build_d4n0() {
  std::array<BinaryWord40, 9> out{};
  for (int i = 0; i < 9; ++i) {
    out[i].set_column(i, 0xF);
    out[i].set_column(i + 1, 0xF);
  }
  return out;
}

BinaryWord40 build_eB() {
  BinaryWord40 out;
  for (int i = 0; i < 9; ++i) out.set_column(i, 0x8);
  out.set_column(9, 0x7);
  return out;
}

BinaryWord40 build_eC() {
  BinaryWord40 out;
  for (int i = 0; i < 10; ++i) out.set_column(i, 0x8);
  return out;
}

BinaryGeneratorMatrix rho_A(const QuaternaryGeneratorMatrix& c) {
  const auto d4 = build_d4n();
  return lift(c, {d4.begin(), d4.end()}, "rho_A");
}

BinaryGeneratorMatrix rho_B(const QuaternaryGeneratorMatrix& c) {
  const auto d40 = build_d4n0();
  std::vector<BinaryWord40> extra(d40.begin(), d40.end());
  extra.push_back(build_eB());
  return lift(c, extra, "rho_B");
}

BinaryGeneratorMatrix rho_C(const QuaternaryGeneratorMatrix& c) {
  const auto d40 = build_d4n0();
  std::vector<BinaryWord40> extra(d40.begin(), d40.end());
  extra.push_back(build_eC());
  return lift(c, extra, "rho_C");
}

BinaryGeneratorMatrix printed_c40_de() {
  static constexpr const char* rows[20] = {
      "0011001100110011000000000000000000000000",
      "0000000000110011001100110000000000000000",
      "0000000000000000001100110011001100000000",
      "0000000000000000000000000011001100110011",
      "0011000000110000001100000011000001010110",
      "0101010101010101000000000000000000000000",
      "0000000001010101010101010000000000000000",
      "0000000000000000010101010101010100000000",
      "0000000000000000000000000101010101010101",
      "0101000001010000010100000101000001100011",
      "1111111100000000000000000000000000000000",
      "1111000011110000000000000000000000000000",
      "1111000000001111000000000000000000000000",
      "1111000000000000111100000000000000000000",
      "1111000000000000000011110000000000000000",
      "1111000000000000000000001111000000000000",
      "1111000000000000000000000000111100000000",
      "1111000000000000000000000000000011110000",
      "1111000000000000000000000000000000001111",
      "1000100010001000100010001000100010000111",
  };
  BinaryGeneratorMatrix g;
  for (const char* r : rows) g.rows.push_back(BinaryWord40::parse(r));
  return g;
}

BinaryGeneratorMatrix printed_c40_se() {
  auto g = printed_c40_de();
  g.rows.back() = build_eC();
  return g;
}

const char* to_string(SelfDualType type) {
  switch (type) {
    case SelfDualType::doubly_even: return "doubly-even";
    case SelfDualType::singly_even: return "singly-even";
    case SelfDualType::not_self_dual: return "not self-dual";
  }
  return "?";
}

CertificationReport certify(const BinaryGeneratorMatrix& g) {
  CertificationReport report;
  const auto basis = gf2::reduce(g.packed());
  report.rank = static_cast<int>(basis.size());
  report.self_orthogonal = g.is_self_orthogonal();
  report.self_dual = report.self_orthogonal && report.rank == 20;

  gf2::for_each_in_span(basis, [&](std::uint64_t word) { ++report.weight_distribution[std::popcount(word)]; });

  for (int w = 1; w <= 40; ++w) {
    if (report.weight_distribution[w] != 0) {
      report.min_distance = w;
      break;
    }
  }

  bool all_even = true;
  bool all_doubly = true;
  for (int w = 0; w <= 40; ++w) {
    if (report.weight_distribution[w] == 0) continue;
    if (w % 2 != 0) all_even = false;
    if (w % 4 != 0) all_doubly = false;
  }

  if (!report.self_orthogonal) report.failures.emplace_back("G G^T != 0");
  if (report.rank != 20) report.failures.emplace_back("rank " + std::to_string(report.rank) + " != 20");
  if (report.self_dual) {
    report.type = all_doubly ? SelfDualType::doubly_even
                  : all_even ? SelfDualType::singly_even
                             : SelfDualType::not_self_dual;
    if (!all_even) report.failures.emplace_back("odd-weight codeword in a self-dual code");
  }
  return report;
}

std::string format_report(const CertificationReport& report) {
  std::ostringstream out;
  out << "rank: " << report.rank << '\n';
  out << "self-orthogonal: " << (report.self_orthogonal ? "yes" : "no") << '\n';
  out << "self-dual: " << (report.self_dual ? "yes" : "no") << '\n';
  out << "type: " << to_string(report.type) << '\n';
  out << "minimum distance: " << report.min_distance << '\n';
  out << "weight distribution:\n";
  for (int w = 0; w <= 40; ++w)
    if (report.weight_distribution[w] != 0) out << "  A" << w << " = " << report.weight_distribution[w] << '\n';
  if (report.failures.empty()) {
    out << "status: ok\n";
  } else {
    for (const auto& f : report.failures) out << "failure: " << f << '\n';
  }
  return out.str();
}

void write_matrix(std::ostream& out, const BinaryGeneratorMatrix& g) {
  for (const auto& r : g.rows) out << r.to_string() << '\n';
}

BinaryGeneratorMatrix read_matrix(std::istream& in) {
  BinaryGeneratorMatrix g;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.front() == '#') continue;
    std::string bits;
    for (char c : line)
      if (c != ' ' && c != '\t' && c != '\r') bits.push_back(c);
    try {
      g.rows.push_back(BinaryWord40::parse(bits));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("matrix line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (g.rows.size() != 20)
    throw std::invalid_argument("matrix must have 20 rows, found " + std::to_string(g.rows.size()));
  return g;
}

}  // namespace pdec
