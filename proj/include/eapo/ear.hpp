#pragma once

// Evidence-augmented four-stage response format:
//   <analysis>...</analysis><evidence>...</evidence>
//   <reasoning>...</reasoning><answer>...</answer>
// Exactly one occurrence of each tag pair, in that order. Text before
// <analysis> and whitespace after </answer> are tolerated; anything else
// invalidates. Tag matching is case-sensitive and exact.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eapo::ear {

inline constexpr std::string_view kAnalysisOpen = "<analysis>";
inline constexpr std::string_view kAnalysisClose = "</analysis>";
inline constexpr std::string_view kEvidenceOpen = "<evidence>";
inline constexpr std::string_view kEvidenceClose = "</evidence>";
inline constexpr std::string_view kReasoningOpen = "<reasoning>";
inline constexpr std::string_view kReasoningClose = "</reasoning>";
inline constexpr std::string_view kAnswerOpen = "<answer>";
inline constexpr std::string_view kAnswerClose = "</answer>";

// All eight literals in canonical document order.
inline constexpr std::array<std::string_view, 8> kTagLiterals = {
    kAnalysisOpen, kAnalysisClose, kEvidenceOpen,  kEvidenceClose,
    kReasoningOpen, kReasoningClose, kAnswerOpen, kAnswerClose};

struct EvidenceSegment {
  std::string text;  // nonempty after trim
  int ordinal = 0;   // consecutive from 0
};

// Half-open [begin, end) character range into the source string.
struct SectionSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct EarResponse {
  std::string analysis;
  std::vector<EvidenceSegment> evidence;
  std::string reasoning;
  std::string answer;
  // Body spans for analysis, evidence, reasoning, answer, in that order;
  // source.substr(span) reconstructs the section body exactly.
  std::array<SectionSpan, 4> section_spans;
};

enum class Violation {
  kMissingTag,
  kDuplicateTag,
  kOutOfOrderTag,
  kEmptyAnswer,
  kTrailingText,
};

struct FormatVerdict {
  bool valid = false;
  // First rule broken, e.g. "missing <evidence>". Violations are detected in
  // canonical tag order: per tag, missing before duplicated; then ordering;
  // then trailing text; then the empty-answer rule.
  std::optional<std::string> violation;
  std::optional<Violation> violation_kind;
};

struct EarParse {
  FormatVerdict verdict;
  std::optional<EarResponse> response;  // engaged iff verdict.valid
};

// Never throws on malformed input; the verdict names the first broken rule.
EarParse parse_ear(std::string_view source);

// 1 iff the format verdict is valid, else 0.
double format_reward(const FormatVerdict& verdict);

// Inverse of parse_ear for clean payloads: tight concatenation of the four
// tagged sections, evidence items one per line. Throws std::invalid_argument
// when a payload embeds a tag literal or an evidence item cannot round-trip
// (empty after trim, contains a newline, or carries outer whitespace), or
// when a required payload is empty.
std::string render_ear(std::string_view analysis,
                       const std::vector<std::string>& evidence,
                       std::string_view reasoning, std::string_view answer);

}  // namespace eapo::ear
