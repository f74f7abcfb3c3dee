#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pdec/constructions.hpp"
#include "pdec/decoders.hpp"

namespace pdec::cli {

enum ExitCode : int { kSuccess = 0, kDeclaredFailure = 1, kUsageError = 2, kInternalError = 3 };

// Bad user input: reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DecoderChoice { representation, syndrome, oracle };

CodeVariant parse_code(std::string_view name);         // "DE" | "SE"
DecoderChoice parse_decoder(std::string_view name);    // "repr" | "synd" | "oracle"
const char* to_string(DecoderChoice choice);

// 40-character bit string or 0x + 10 hex digits; a path to a 4x10 array file
// is accepted when `text` names an existing file.
BinaryWord40 parse_word_argument(const std::string& text);

const BinaryGeneratorMatrix& generator(CodeVariant code);

// message: 20 characters of 0/1; character i selects row i+1 of the generator matrix.
BinaryWord40 cmd_encode(std::string_view message, CodeVariant code);

// positions are 1-based and distinct.
BinaryWord40 cmd_corrupt(BinaryWord40 word, std::span<const int> positions);
// Flips `weight` distinct random positions drawn from a seeded mt19937_64.
BinaryWord40 cmd_corrupt_random(BinaryWord40 word, int weight, std::uint64_t seed);

struct Transcript {
  DecoderChoice algorithm = DecoderChoice::representation;
  CodeVariant code = CodeVariant::doubly_even;
  BinaryWord40 received;
  QuaternaryWord projection;
  ParityProfile profile;
  std::optional<CaseLabel> case_label;
  std::optional<QuaternaryWord> corrected_projection;
  DecodeOutcome outcome;
};

Transcript cmd_decode(BinaryWord40 word, DecoderChoice algorithm, CodeVariant code);

// Verbose form prints 4x10 arrays with the projected word underneath.
std::string format_transcript(const Transcript& t, bool verbose);

CertificationReport cmd_certify(const std::string& matrix_path);

struct FuzzSummary {
  std::uint64_t trials = 0;
  std::uint64_t corrected = 0;          // both decoders returned the transmitted word
  std::uint64_t zero_flip = 0;          // success with no flipped bits
  std::uint64_t declared_failures = 0;  // oracle and both decoders report failure
  std::uint64_t miscorrected = 0;       // agreed on a codeword other than the transmitted one
  std::uint64_t mismatches = 0;         // decoders and oracle disagree
};

FuzzSummary cmd_fuzz(std::uint64_t trials, std::uint64_t seed, int max_weight, CodeVariant code);
std::string format_fuzz(const FuzzSummary& s);

std::string cmd_census();
std::string cmd_tables();

// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pdec::cli
