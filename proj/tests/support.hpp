// Shared test helpers: word builders, independent membership/prefix
// oracles, structural walks, and scratch files.

#pragma once

#include <unistd.h>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include <wordex/detail/rng.hpp>
#include <wordex/index.hpp>
#include <wordex/word.hpp>

namespace support {

inline wordex::word w(std::string_view text) { return wordex::normalize(text); }

/// Uniform random words, letters and lengths independent.
inline std::vector<wordex::word> random_words(wordex::detail::splitmix64& rng,
                                              std::size_t count,
                                              std::size_t min_len,
                                              std::size_t max_len,
                                              bool distinct = false) {
  std::vector<wordex::word> out;
  out.reserve(count);
  std::unordered_set<std::string> seen;
  while (out.size() < count) {
    const std::size_t len = min_len + rng.bounded(max_len - min_len + 1);
    std::string codes(len, '\0');
    for (std::size_t i = 0; i < len; ++i)
      codes[i] = static_cast<char>(rng.bounded(wordex::alphabet_size));
    if (distinct && !seen.insert(codes).second) continue;
    out.emplace_back(std::move(codes));
  }
  return out;
}

/// Brute-force membership oracle.
struct set_oracle {
  std::unordered_set<std::string> members;

  explicit set_oracle(const std::vector<wordex::word>& words) {
    for (const auto& x : words) members.emplace(x.codes());
  }

  bool contains(const wordex::word& q) const {
    return members.contains(std::string(q.codes()));
  }
};

/// Literal linear-scan prefix oracle: does any word start with p?
inline bool scan_has_prefix(const std::vector<wordex::word>& words,
                            const wordex::word& p) {
  return std::any_of(words.begin(), words.end(), [&](const wordex::word& x) {
    return x.codes().substr(0, p.size()) == p.codes();
  });
}

/// Sorted-list prefix oracle: the first word >= p starts with p iff any
/// word does. Same answers as scan_has_prefix at a usable speed; the two
/// are cross-checked in the unit tests.
struct sorted_prefix_oracle {
  std::vector<std::string> keys;

  explicit sorted_prefix_oracle(const std::vector<wordex::word>& words) {
    keys.reserve(words.size());
    for (const auto& x : words) keys.emplace_back(x.codes());
    std::sort(keys.begin(), keys.end());
  }

  bool has_prefix(const wordex::word& p) const {
    const auto it = std::lower_bound(keys.begin(), keys.end(), p.codes());
    return it != keys.end() &&
           std::string_view(*it).substr(0, p.size()) == p.codes();
  }
};

/// Every distinct non-empty proper prefix of the given words, as code
/// strings. The oracle for table counts: tables = 1 + this set's size.
inline std::unordered_set<std::string> proper_prefixes(
    const std::vector<wordex::word>& words) {
  std::unordered_set<std::string> out;
  for (const auto& x : words)
    for (std::size_t len = 1; len < x.size(); ++len)
      out.emplace(x.codes().substr(0, len));
  return out;
}

/// Calls fn(prefix_codes, table) for every allocated table, root first.
template <typename Fn>
void walk_tables(const wordex::word_index& index, Fn&& fn) {
  struct frame {
    const wordex::letter_table* table;
    std::string prefix;
  };
  std::vector<frame> todo{{&index.root(), ""}};
  while (!todo.empty()) {
    frame f = std::move(todo.back());
    todo.pop_back();
    fn(f.prefix, *f.table);
    for (wordex::letter c = 0; c < wordex::alphabet_size; ++c) {
      if (const wordex::letter_table* child = f.table->child(c))
        todo.push_back({child, f.prefix + static_cast<char>(c)});
    }
  }
}

/// The tables a contains() walk inspects for this word, in order.
inline std::vector<const wordex::letter_table*> lookup_path(
    const wordex::word_index& index, const wordex::word& q) {
  std::vector<const wordex::letter_table*> path{&index.root()};
  const wordex::letter_table* t = &index.root();
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    if (!t->continuation(q[i])) break;
    t = t->child(q[i]);
    path.push_back(t);
  }
  return path;
}

/// Self-deleting scratch directory.
class temp_dir {
public:
  temp_dir() {
    static std::uint64_t counter = 0;
    const auto base = std::filesystem::temp_directory_path();
    path_ = base / ("wordex-test-" + std::to_string(::getpid()) + "-" +
                    std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }

  ~temp_dir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }

  const std::filesystem::path& path() const noexcept { return path_; }

  std::filesystem::path file(std::string_view name) const {
    return path_ / name;
  }

private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path,
                       std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace support
