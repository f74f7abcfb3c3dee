#include "pdec_cli/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "pdec/oracle.hpp"

namespace pdec::cli {

CodeVariant parse_code(std::string_view name) {
  if (name == "DE" || name == "de") return CodeVariant::doubly_even;
  if (name == "SE" || name == "se") return CodeVariant::singly_even;
  throw UsageError("unknown code '" + std::string(name) + "' (expected DE or SE)");
}

DecoderChoice parse_decoder(std::string_view name) {
  if (name == "repr") return DecoderChoice::representation;
  if (name == "synd") return DecoderChoice::syndrome;
  if (name == "oracle") return DecoderChoice::oracle;
  throw UsageError("unknown algorithm '" + std::string(name) + "' (expected repr, synd or oracle)");
}

const char* to_string(DecoderChoice choice) {
  switch (choice) {
    case DecoderChoice::representation: return "representation";
    case DecoderChoice::syndrome: return "syndrome";
    case DecoderChoice::oracle: return "oracle";
  }
  return "?";
}

BinaryWord40 parse_word_argument(const std::string& text) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(text, ec)) {
    std::ifstream in(text);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      return ByteArray4x10::parse(ss.str()).word();
    } catch (const std::invalid_argument& e) {
      throw UsageError(text + ": " + e.what());
    }
  }
  try {
    return BinaryWord40::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

const BinaryGeneratorMatrix& generator(CodeVariant code) {
  static const BinaryGeneratorMatrix de = printed_c40_de();
  static const BinaryGeneratorMatrix se = printed_c40_se();
  return code == CodeVariant::doubly_even ? de : se;
}

BinaryWord40 cmd_encode(std::string_view message, CodeVariant code) {
  if (message.size() != 20) throw UsageError("message must have exactly 20 bits");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < message.size(); ++i) {
    if (message[i] != '0' && message[i] != '1') throw UsageError("message must consist of 0 and 1");
    if (message[i] == '1') bits |= std::uint64_t{1} << i;
  }
  return generator(code).encode(bits);
}

BinaryWord40 cmd_corrupt(BinaryWord40 word, std::span<const int> positions) {
  std::vector<int> seen;
  for (int p : positions) {
    if (p < 1 || p > 40) throw UsageError("position " + std::to_string(p) + " outside 1..40");
    if (std::find(seen.begin(), seen.end(), p) != seen.end())
      throw UsageError("duplicate position " + std::to_string(p));
    seen.push_back(p);
    word.flip(p - 1);
  }
  return word;
}

BinaryWord40 cmd_corrupt_random(BinaryWord40 word, int weight, std::uint64_t seed) {
  if (weight < 0 || weight > 40) throw UsageError("weight must be in 0..40");
  std::mt19937_64 rng(seed);
  std::array<int, 40> all{};
  std::iota(all.begin(), all.end(), 1);
  std::vector<int> chosen;
  std::sample(all.begin(), all.end(), std::back_inserter(chosen), weight, rng);
  return cmd_corrupt(word, chosen);
}

CertificationReport cmd_certify(const std::string& matrix_path) {
  std::ifstream in(matrix_path);
  if (!in) throw UsageError("cannot open " + matrix_path);
  try {
    return certify(read_matrix(in));
  } catch (const std::invalid_argument& e) {
    throw UsageError(matrix_path + ": " + e.what());
  }
}

FuzzSummary cmd_fuzz(std::uint64_t trials, std::uint64_t seed, int max_weight, CodeVariant code) {
  if (trials == 0) throw UsageError("trials must be positive");
  if (max_weight < 0 || max_weight > 40) throw UsageError("max-weight must be in 0..40");
  const auto& g = generator(code);
  const auto& oracle = code == CodeVariant::doubly_even ? de_oracle() : se_oracle();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight_dist(0, max_weight);
  std::array<int, 40> all{};
  std::iota(all.begin(), all.end(), 0);

  FuzzSummary s;
  s.trials = trials;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const auto c = g.encode(rng() & 0xFFFFF);
    std::vector<int> flips;
    std::sample(all.begin(), all.end(), std::back_inserter(flips), weight_dist(rng), rng);
    auto v = c;
    for (int p : flips) v.flip(p);

    const ByteArray4x10 a(v);
    const auto r = decode(a, Algorithm::representation, code);
    const auto y = decode(a, Algorithm::syndrome, code);
    const auto truth = oracle_decode_indexed(v, oracle, 3);
    auto verdict = [](const DecodeOutcome& o) {
      return o.correction ? std::optional<BinaryWord40>(o.correction->codeword) : std::nullopt;
    };
    if (verdict(r) != truth || verdict(y) != truth) {
      ++s.mismatches;
    } else if (!truth) {
      ++s.declared_failures;
    } else if (*truth == c) {
      ++s.corrected;
      if (r.correction->flipped_bits.empty()) ++s.zero_flip;
    } else {
      ++s.miscorrected;
    }
  }
  return s;
}

std::string format_fuzz(const FuzzSummary& s) {
  std::ostringstream out;
  auto pct = [&](std::uint64_t n) {
    std::ostringstream p;
    p << std::fixed << std::setprecision(2) << 100.0 * static_cast<double>(n) / static_cast<double>(s.trials) << '%';
    return p.str();
  };
  out << "trials: " << s.trials << '\n';
  out << "corrected: " << s.corrected << " (" << pct(s.corrected) << ")\n";
  out << "zero-flip: " << s.zero_flip << " (" << pct(s.zero_flip) << ")\n";
  out << "declared failures: " << s.declared_failures << " (" << pct(s.declared_failures) << ")\n";
  out << "miscorrected: " << s.miscorrected << " (" << pct(s.miscorrected) << ")\n";
  out << "mismatches: " << s.mismatches << '\n';
  return out.str();
}

std::string cmd_census() {
  const auto census = orbit_census();
  std::ostringstream out;
  out << "type  representative  weight  expected  counted\n";
  std::size_t total = 0;
  for (const auto& type : orbit_types()) {
    const auto counted = census.at(type.type_id);
    total += counted;
    out << std::left << std::setw(6) << roman(type.type_id) << std::setw(16) << type.representative.to_string()
        << std::setw(8) << type.weight << std::setw(10) << type.expected_count << counted << '\n';
  }
  out << "total: " << total << '\n';
  return out.str();
}

std::string cmd_tables() {
  std::ostringstream out;
  auto quaternary = [&](const char* name, const QuaternaryGeneratorMatrix& g) {
    out << "# " << name << '\n';
    for (const auto& row : g.rows) out << row.to_string() << '\n';
    out << '\n';
  };
  quaternary("G(E10)", build_E10());
  quaternary("G(B10)", build_B10());
  out << "# G(DE)\n";
  write_matrix(out, generator(CodeVariant::doubly_even));
  out << "\n# G(SE)\n";
  write_matrix(out, generator(CodeVariant::singly_even));
  return out.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Projection decoding of the [40,20,8] self-dual codes built from E10"};
  app.require_subcommand(1);

  std::string code_name = "DE";
  auto add_code = [&](CLI::App* sub) {
    sub->add_option("--code", code_name, "DE (doubly-even) or SE (singly-even)")->capture_default_str();
  };

  auto* encode = app.add_subcommand("encode", "Multiply a 20-bit message by the generator matrix");
  std::string message;
  bool hex = false;
  encode->add_option("message", message, "20 characters of 0/1")->required();
  encode->add_flag("--hex", hex, "Print the codeword in hex");
  add_code(encode);

  auto* corrupt = app.add_subcommand("corrupt", "Flip bits of a 40-bit word");
  std::string word_text;
  std::vector<int> positions;
  int random_weight = -1;
  std::uint64_t seed = 1;
  corrupt->add_option("word", word_text, "40-bit word (bits or 0x hex)")->required();
  auto* pos_opt = corrupt->add_option("--positions,-p", positions, "1-based positions to flip")->delimiter(',');
  corrupt->add_option("--random-weight", random_weight, "Flip this many random positions")->excludes(pos_opt);
  corrupt->add_option("--seed", seed, "Seed for --random-weight")->capture_default_str();
  corrupt->add_flag("--hex", hex, "Print the result in hex");

  auto* decode_cmd = app.add_subcommand("decode", "Decode a received word");
  std::string algorithm = "repr";
  bool verbose = false;
  decode_cmd->add_option("word", word_text, "40-bit word (bits or 0x hex) or a 4x10 array file")->required();
  decode_cmd->add_option("--algorithm,-a", algorithm, "repr, synd or oracle")->capture_default_str();
  decode_cmd->add_flag("--verbose,-v", verbose, "Print the full decoding transcript");
  add_code(decode_cmd);

  auto* certify_cmd = app.add_subcommand("certify", "Certify a 20x40 generator matrix file");
  std::string matrix_path;
  certify_cmd->add_option("matrix", matrix_path, "20 lines of 40 characters")->required();

  auto* fuzz = app.add_subcommand("fuzz", "Compare both decoders against the oracle on random corruptions");
  std::uint64_t trials = 10000;
  int max_weight = 3;
  fuzz->add_option("--trials", trials)->capture_default_str();
  fuzz->add_option("--seed", seed)->capture_default_str();
  fuzz->add_option("--max-weight", max_weight)->capture_default_str();
  add_code(fuzz);

  auto* census = app.add_subcommand("census", "Classify all nonzero E10 codewords into the eight types");
  auto* tables = app.add_subcommand("tables", "Print the quaternary and binary generator matrices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (encode->parsed()) {
      const auto c = cmd_encode(message, parse_code(code_name));
      out << (hex ? c.to_hex() : c.to_string()) << '\n';
      return kSuccess;
    }
    if (corrupt->parsed()) {
      const auto w = parse_word_argument(word_text);
      const auto v = random_weight >= 0 ? cmd_corrupt_random(w, random_weight, seed) : cmd_corrupt(w, positions);
      out << (hex ? v.to_hex() : v.to_string()) << '\n';
      return kSuccess;
    }
    if (decode_cmd->parsed()) {
      const auto t = cmd_decode(parse_word_argument(word_text), parse_decoder(algorithm), parse_code(code_name));
      out << format_transcript(t, verbose);
      return t.outcome.ok() ? kSuccess : kDeclaredFailure;
    }
    if (certify_cmd->parsed()) {
      const auto report = cmd_certify(matrix_path);
      out << format_report(report);
      return report.failures.empty() ? kSuccess : kDeclaredFailure;
    }
    if (fuzz->parsed()) {
      const auto s = cmd_fuzz(trials, seed, max_weight, parse_code(code_name));
      out << format_fuzz(s);
      return s.mismatches == 0 ? kSuccess : kDeclaredFailure;
    }
    if (census->parsed()) {
      out << cmd_census();
      return kSuccess;
    }
    if (tables->parsed()) {
      out << cmd_tables();
      return kSuccess;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternalError;
  }
  return kUsageError;
}

}  // namespace pdec::cli
