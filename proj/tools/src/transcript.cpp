#include <sstream>

#include "pdec/oracle.hpp"
#include "pdec_cli/commands.hpp"

namespace pdec::cli {
namespace {

constexpr const char* kRowLabels[4] = {"0 ", "1 ", "w ", "W "};

std::string cell(const std::string& s) { return std::string(3 - s.size(), ' ') + s; }

void print_array(std::ostream& out, ByteArray4x10 v, QuaternaryWord y, const char* y_label) {
  out << "   |";
  for (int c = 1; c <= 10; ++c) out << cell(std::to_string(c));
  out << "\n---+" << std::string(30, '-') << '\n';
  for (int r = 0; r < 4; ++r) {
    out << kRowLabels[r] << " |";
    for (int c = 0; c < 10; ++c) out << cell(v.bit(r, c) ? "1" : "0");
    out << '\n';
  }
  out << "---+" << std::string(30, '-') << '\n';
  out << y_label << " |";
  for (int c = 0; c < 10; ++c) out << cell(std::string(1, y[c].symbol()));
  out << '\n';
}

std::string tuple(QuaternaryWord y) {
  std::string out = "(";
  for (int i = 0; i < 10; ++i) {
    if (i) out += ',';
    out += y[i].symbol();
  }
  return out + ")";
}

std::string tuple(const Syndrome& s) {
  std::string out = "(";
  for (int i = 0; i < 5; ++i) {
    if (i) out += ',';
    out += s[i].symbol();
  }
  return out + ")";
}

std::string one_based(const std::vector<int>& positions) {
  if (positions.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(positions[i] + 1);
  }
  return out;
}

DecodeOutcome oracle_outcome(BinaryWord40 word, CodeVariant code) {
  DecodeOutcome outcome;
  outcome.projection = proj(ByteArray4x10(word));
  outcome.case_label = classify_case(ByteArray4x10(word));
  const auto& table = code == CodeVariant::doubly_even ? de_oracle() : se_oracle();
  if (const auto c = oracle_decode(word, table, 3)) {
    outcome.correction = Correction{*c, proj(ByteArray4x10(*c)), differing_positions(word, *c)};
  } else {
    outcome.failure_reason = std::string(kFailureMessage);
  }
  return outcome;
}

}  // namespace

Transcript cmd_decode(BinaryWord40 word, DecoderChoice algorithm, CodeVariant code) {
  Transcript t;
  t.algorithm = algorithm;
  t.code = code;
  t.received = word;
  const ByteArray4x10 v(word);
  t.projection = proj(v);
  t.profile = parity_profile(v);
  switch (algorithm) {
    case DecoderChoice::representation:
      t.outcome = decode(v, Algorithm::representation, code);
      break;
    case DecoderChoice::syndrome:
      t.outcome = decode(v, Algorithm::syndrome, code);
      break;
    case DecoderChoice::oracle:
      t.outcome = oracle_outcome(word, code);
      break;
  }
  t.case_label = t.outcome.case_label;
  if (t.outcome.correction) t.corrected_projection = t.outcome.correction->corrected_projection;
  return t;
}

std::string format_transcript(const Transcript& t, bool verbose) {
  std::ostringstream out;
  if (!verbose) {
    if (t.outcome.correction) {
      out << "codeword: " << t.outcome.correction->codeword.to_string() << '\n';
      out << "flipped: " << one_based(t.outcome.correction->flipped_bits) << '\n';
    } else {
      out << t.outcome.failure_reason << '\n';
    }
    return out.str();
  }

  out << "algorithm: " << to_string(t.algorithm) << '\n';
  out << "code: " << to_string(t.code) << '\n';
  out << "received v:\n";
  print_array(out, ByteArray4x10(t.received), t.projection, "y ");

  out << "column parity:";
  for (Parity p : t.profile.column_parities) out << ' ' << (p == Parity::even ? 'e' : 'o');
  out << '\n';
  out << "top row parity: " << to_string(t.profile.top_row_parity) << '\n';
  if (t.case_label) {
    out << "case: " << describe(*t.case_label) << '\n';
    out << "erasures: " << one_based(t.case_label->erasure_columns) << '\n';
  } else {
    out << "case: none (" << t.profile.minority_columns.size() << " minority columns)\n";
  }

  if (t.algorithm == DecoderChoice::syndrome) {
    static const ParityCheckMatrix h = e10_parity_check();
    out << "syndrome: " << tuple(syndrome(t.projection, h)) << '\n';
    if (t.corrected_projection) out << "error e: " << tuple(*t.corrected_projection + t.projection) << '\n';
  }

  if (const auto& c = t.outcome.correction) {
    if (t.algorithm == DecoderChoice::representation) {
      if (c->corrected_projection.packed() == 0) {
        out << "type: zero word\n";
      } else {
        const auto& type = classify_type(c->corrected_projection);
        out << "type: " << roman(type.type_id) << " (weight " << type.weight << ")\n";
      }
    }
    out << "y': " << tuple(c->corrected_projection) << '\n';
    out << "corrected v:\n";
    print_array(out, ByteArray4x10(c->codeword), c->corrected_projection, "y'");
    out << "flipped: " << one_based(c->flipped_bits) << '\n';
    out << "result: codeword " << c->codeword.to_hex() << '\n';
  } else {
    out << "result: " << t.outcome.failure_reason << '\n';
  }
  return out.str();
}

}  // namespace pdec::cli
