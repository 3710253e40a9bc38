#pragma once

// Shared text utilities: one tokenizer for the whole pipeline so that
// lexical scoring, grading, ROUGE and the environment all agree on what
// a "token" is.

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace eapo::text {

// Lowercases and splits on runs of non-alphanumeric characters.
// "Vault Zeta-42" -> {"vault", "zeta", "42"}.
inline std::vector<std::string> tokenize(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (unsigned char c : s) {
    if (std::isalnum(c)) {
      cur.push_back(static_cast<char>(std::tolower(c)));
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

inline const std::unordered_set<std::string>& stopwords() {
  static const std::unordered_set<std::string> kStop = {
      "the", "a",  "an", "of",  "is",   "are", "was",  "what", "which",
      "for", "to", "in", "on",  "at",   "and", "by",   "does", "do",
      "it",  "its", "be", "this", "that", "with", "after"};
  return kStop;
}

// tokenize() minus stopwords; the term set used for query coverage.
inline std::vector<std::string> content_tokens(std::string_view s) {
  std::vector<std::string> toks = tokenize(s);
  std::erase_if(toks, [](const std::string& t) { return stopwords().contains(t); });
  return toks;
}

// Fraction of distinct query content terms that appear in `candidate`.
// Returns 0 when the query has no content terms.
inline double query_coverage(std::string_view query, std::string_view candidate) {
  std::vector<std::string> qterms = content_tokens(query);
  std::sort(qterms.begin(), qterms.end());
  qterms.erase(std::unique(qterms.begin(), qterms.end()), qterms.end());
  if (qterms.empty()) return 0.0;
  std::vector<std::string> ctoks = tokenize(candidate);
  std::unordered_set<std::string> cset(ctoks.begin(), ctoks.end());
  std::size_t hit = 0;
  for (const std::string& t : qterms)
    if (cset.contains(t)) ++hit;
  return static_cast<double>(hit) / static_cast<double>(qterms.size());
}

// Collapses whitespace runs to single spaces and trims the ends.
inline std::string normalize_ws(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool in_ws = true;  // swallow leading whitespace
  for (unsigned char c : s) {
    if (std::isspace(c)) {
      in_ws = true;
    } else {
      if (in_ws && !out.empty()) out.push_back(' ');
      out.push_back(static_cast<char>(c));
      in_ws = false;
    }
  }
  return out;
}

inline std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

// True if `needle` occurs as a (not necessarily contiguous) subsequence of
// `haystack`.
inline bool is_token_subsequence(const std::vector<std::string>& needle,
                                 const std::vector<std::string>& haystack) {
  std::size_t i = 0;
  for (const std::string& h : haystack) {
    if (i < needle.size() && needle[i] == h) ++i;
  }
  return i == needle.size();
}

inline std::size_t count_ws_tokens(std::string_view s) {
  std::size_t n = 0;
  bool in_tok = false;
  for (unsigned char c : s) {
    if (std::isspace(c)) {
      in_tok = false;
    } else if (!in_tok) {
      ++n;
      in_tok = true;
    }
  }
  return n;
}

inline std::vector<std::string> split_lines(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t nl = s.find('\n', start);
    if (nl == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      break;
    }
    out.emplace_back(s.substr(start, nl - start));
    start = nl + 1;
  }
  return out;
}

}  // namespace eapo::text
