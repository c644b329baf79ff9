// Letter-coded word keys and text normalization.
//
// The index only accepts words over the 26-letter lowercase alphabet,
// stored as letter codes 0..25 ('a'=0 .. 'z'=25). Everything else is
// rejected at the boundary by normalize().

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace wordex {

using letter = std::uint8_t;

inline constexpr std::size_t alphabet_size = 26;

/// Longest word normalize() accepts, in letters. Caps table depth so a
/// hostile wordlist cannot force pathological nesting.
inline constexpr std::size_t max_word_length = 64;

/// Generic file/stream failure (missing file, short write, bad stream).
class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A validated word: a non-empty sequence of letter codes in [0, 26).
class word {
public:
  /// Takes ownership of a code sequence. Each byte must be a letter code;
  /// throws std::invalid_argument otherwise or when the sequence is empty.
  explicit word(std::string letter_codes) : codes_(std::move(letter_codes)) {
    if (codes_.empty())
      throw std::invalid_argument("word: empty letter sequence");
    for (unsigned char c : codes_)
      if (c >= alphabet_size)
        throw std::invalid_argument("word: letter code out of range");
  }

  std::size_t size() const noexcept { return codes_.size(); }

  letter operator[](std::size_t i) const noexcept {
    return static_cast<letter>(codes_[i]);
  }

  /// Raw code bytes; ordered and hashed like the word itself.
  std::string_view codes() const noexcept { return codes_; }

  /// Lowercase ASCII spelling.
  std::string text() const {
    std::string out(codes_.size(), '\0');
    for (std::size_t i = 0; i < codes_.size(); ++i)
      out[i] = static_cast<char>('a' + codes_[i]);
    return out;
  }

  friend bool operator==(const word&, const word&) = default;
  friend auto operator<=>(const word&, const word&) = default;

private:
  std::string codes_;
};

enum class normalize_fault { empty, non_letter, too_long };

inline const char* to_string(normalize_fault f) noexcept {
  switch (f) {
    case normalize_fault::empty: return "empty";
    case normalize_fault::non_letter: return "non-letter";
    case normalize_fault::too_long: return "too-long";
  }
  return "?";
}

/// Why a piece of text failed to normalize. position/offending are only
/// meaningful for non_letter.
struct normalize_issue {
  normalize_fault fault = normalize_fault::empty;
  std::size_t position = 0;
  char offending = '\0';
};

class normalize_error : public std::runtime_error {
public:
  explicit normalize_error(const normalize_issue& issue)
      : std::runtime_error(describe(issue)), issue_(issue) {}

  const normalize_issue& issue() const noexcept { return issue_; }

  static std::string describe(const normalize_issue& i) {
    switch (i.fault) {
      case normalize_fault::empty:
        return "empty input";
      case normalize_fault::too_long:
        return "word exceeds " + std::to_string(max_word_length) + " letters";
      case normalize_fault::non_letter: {
        std::string c;
        if (i.offending >= 0x20 && i.offending < 0x7f) {
          c = {'\'', i.offending, '\''};
        } else {
          static constexpr char hex[] = "0123456789abcdef";
          unsigned char u = static_cast<unsigned char>(i.offending);
          c = {'0', 'x', hex[u >> 4], hex[u & 0xf]};
        }
        return "non-letter character " + c + " at position " +
               std::to_string(i.position);
      }
    }
    return "invalid word";
  }

private:
  normalize_issue issue_;
};

/// Case-folds ASCII letters and maps them to codes. On failure returns
/// nullopt and fills `issue`.
inline std::optional<word> try_normalize(std::string_view text,
                                         normalize_issue& issue) noexcept {
  if (text.empty()) {
    issue = {normalize_fault::empty, 0, '\0'};
    return std::nullopt;
  }
  if (text.size() > max_word_length) {
    issue = {normalize_fault::too_long, 0, '\0'};
    return std::nullopt;
  }
  std::string codes;
  codes.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
    if (c < 'a' || c > 'z') {
      issue = {normalize_fault::non_letter, i, text[i]};
      return std::nullopt;
    }
    codes.push_back(static_cast<char>(c - 'a'));
  }
  return word(std::move(codes));
}

/// Throwing form of try_normalize().
inline word normalize(std::string_view text) {
  normalize_issue issue;
  if (auto w = try_normalize(text, issue)) return std::move(*w);
  throw normalize_error(issue);
}

}  // namespace wordex

template <>
struct std::hash<wordex::word> {
  std::size_t operator()(const wordex::word& w) const noexcept {
    return std::hash<std::string_view>{}(w.codes());
  }
};
