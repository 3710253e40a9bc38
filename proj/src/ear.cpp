#include "eapo/ear.hpp"

#include <stdexcept>

#include "eapo/text.hpp"

namespace eapo::ear {
namespace {

std::vector<std::size_t> find_all(std::string_view haystack,
                                  std::string_view needle) {
  std::vector<std::size_t> hits;
  std::size_t pos = haystack.find(needle);
  while (pos != std::string_view::npos) {
    hits.push_back(pos);
    pos = haystack.find(needle, pos + 1);
  }
  return hits;
}

EarParse invalid(Violation kind, std::string message) {
  EarParse out;
  out.verdict.valid = false;
  out.verdict.violation = std::move(message);
  out.verdict.violation_kind = kind;
  return out;
}

}  // namespace

EarParse parse_ear(std::string_view source) {
  std::array<std::size_t, 8> pos{};
  for (std::size_t i = 0; i < kTagLiterals.size(); ++i) {
    const std::vector<std::size_t> hits = find_all(source, kTagLiterals[i]);
    if (hits.empty())
      return invalid(Violation::kMissingTag,
                     "missing " + std::string(kTagLiterals[i]));
    if (hits.size() > 1)
      return invalid(Violation::kDuplicateTag,
                     "duplicated " + std::string(kTagLiterals[i]));
    pos[i] = hits.front();
  }

  // The eight unique tag positions must be strictly increasing; this covers
  // both reordered and overlapping sections.
  for (std::size_t i = 1; i < pos.size(); ++i) {
    if (pos[i] <= pos[i - 1])
      return invalid(Violation::kOutOfOrderTag,
                     "out-of-order " + std::string(kTagLiterals[i]));
  }

  const std::size_t after_answer = pos[7] + kAnswerClose.size();
  if (!text::is_blank(source.substr(after_answer)))
    return invalid(Violation::kTrailingText,
                   "non-whitespace text after " + std::string(kAnswerClose));

  EarResponse resp;
  const auto body_span = [&](std::size_t open_idx, std::size_t close_idx) {
    return SectionSpan{pos[open_idx] + kTagLiterals[open_idx].size(),
                       pos[close_idx]};
  };
  resp.section_spans = {body_span(0, 1), body_span(2, 3), body_span(4, 5),
                        body_span(6, 7)};
  const auto body = [&](int section) {
    const SectionSpan s = resp.section_spans[static_cast<std::size_t>(section)];
    return std::string(source.substr(s.begin, s.end - s.begin));
  };

  resp.analysis = body(0);
  resp.reasoning = body(2);
  resp.answer = body(3);
  if (text::is_blank(resp.answer))
    return invalid(Violation::kEmptyAnswer, "empty <answer> body");

  // Evidence: one segment per nonblank line, trimmed.
  int ordinal = 0;
  for (const std::string& line : text::split_lines(body(1))) {
    std::string seg = text::trim(line);
    if (seg.empty()) continue;
    resp.evidence.push_back({std::move(seg), ordinal++});
  }

  EarParse out;
  out.verdict.valid = true;
  out.response = std::move(resp);
  return out;
}

double format_reward(const FormatVerdict& verdict) {
  return verdict.valid ? 1.0 : 0.0;
}

std::string render_ear(std::string_view analysis,
                       const std::vector<std::string>& evidence,
                       std::string_view reasoning, std::string_view answer) {
  const auto check_no_tags = [](std::string_view payload, const char* what) {
    for (std::string_view tag : kTagLiterals) {
      if (payload.find(tag) != std::string_view::npos)
        throw std::invalid_argument(std::string("render_ear: ") + what +
                                    " contains tag literal " + std::string(tag));
    }
  };
  if (analysis.empty()) throw std::invalid_argument("render_ear: empty analysis");
  if (reasoning.empty()) throw std::invalid_argument("render_ear: empty reasoning");
  if (text::is_blank(answer)) throw std::invalid_argument("render_ear: empty answer");
  check_no_tags(analysis, "analysis");
  check_no_tags(reasoning, "reasoning");
  check_no_tags(answer, "answer");

  std::string evidence_body;
  for (std::size_t i = 0; i < evidence.size(); ++i) {
    const std::string& item = evidence[i];
    check_no_tags(item, "evidence item");
    if (item.find('\n') != std::string::npos)
      throw std::invalid_argument("render_ear: evidence item contains newline");
    if (item != text::trim(item) || item.empty())
      throw std::invalid_argument(
          "render_ear: evidence item empty or not trimmed");
    if (i > 0) evidence_body.push_back('\n');
    evidence_body += item;
  }

  std::string out;
  out.reserve(analysis.size() + evidence_body.size() + reasoning.size() +
              answer.size() + 96);
  out += kAnalysisOpen;
  out += analysis;
  out += kAnalysisClose;
  out += kEvidenceOpen;
  out += evidence_body;
  out += kEvidenceClose;
  out += kReasoningOpen;
  out += reasoning;
  out += kReasoningClose;
  out += kAnswerOpen;
  out += answer;
  out += kAnswerClose;
  return out;
}

}  // namespace eapo::ear
