// Wordlist ingestion: text lines in, deduplicated normalized words out,
// with every rejected line accounted for.

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "word.hpp"

namespace wordex {

struct rejected_line {
  std::uint64_t line_number = 0;  // 1-based
  std::string raw_text;           // line content, CR stripped
  normalize_fault reason = normalize_fault::empty;
};

/// Every input line lands in exactly one bucket:
/// accepted_count + duplicate_count + rejects.size() == lines read.
struct ingest_report {
  std::uint64_t accepted_count = 0;
  std::uint64_t duplicate_count = 0;
  std::vector<rejected_line> rejects;

  std::uint64_t total_lines() const noexcept {
    return accepted_count + duplicate_count + rejects.size();
  }
};

struct wordlist {
  std::vector<word> words;  // first-seen order, no duplicates
  ingest_report report;
};

/// Reads one word per line (LF or CRLF). Case-folds, dedupes (first
/// occurrence wins) and reports rejected lines instead of dropping them.
inline wordlist load_wordlist(std::istream& in) {
  wordlist out;
  std::unordered_set<std::string> seen;
  std::string line;
  std::uint64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    normalize_issue issue;
    auto w = try_normalize(line, issue);
    if (!w) {
      out.report.rejects.push_back({line_number, line, issue.fault});
      continue;
    }
    if (!seen.insert(std::string(w->codes())).second) {
      ++out.report.duplicate_count;
      continue;
    }
    ++out.report.accepted_count;
    out.words.push_back(std::move(*w));
  }
  if (in.bad()) throw io_error("wordlist: stream read failed");
  return out;
}

inline wordlist load_wordlist_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open wordlist: " + path.string());
  return load_wordlist(in);
}

}  // namespace wordex
