// The word-existence index: nested 26-slot letter tables.
//
// Every table serves exactly one prefix. A slot holds two flags: the
// continuation flag (some stored word extends through this letter) and the
// existence flag (a stored word ends exactly here). Child tables are
// allocated lazily, the moment a word first continues through a slot, so a
// table exists if and only if its prefix is a proper prefix of some stored
// word. Lookups walk one table per letter and stop early as soon as a
// continuation flag is clear.

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "word.hpp"

namespace wordex {

/// Thrown when insert() is called on a frozen index.
class frozen_error : public std::logic_error {
public:
  frozen_error() : std::logic_error("index is frozen") {}
};

enum class insert_outcome { inserted, already_present };

enum class stop_reason { existence_hit, existence_miss, continuation_stop };

inline const char* to_string(stop_reason r) noexcept {
  switch (r) {
    case stop_reason::existence_hit: return "existence-hit";
    case stop_reason::existence_miss: return "existence-miss";
    case stop_reason::continuation_stop: return "continuation-stop";
  }
  return "?";
}

/// Instrumented lookup result. `visits` counts tables inspected; it equals
/// the word length on a hit and never exceeds it.
struct lookup_trace {
  bool found = false;
  std::size_t visits = 0;
  stop_reason reason = stop_reason::continuation_stop;
};

struct index_stats {
  std::uint64_t word_count = 0;
  std::uint64_t table_count = 0;
  std::uint64_t occupied_slot_count = 0;  // slots with continuation or existence set
  std::uint64_t max_depth = 0;            // longest inserted word, in letters
  std::uint64_t estimated_bytes = 0;
};

/// One 26-slot table. Flags are kept as two letter-indexed bitmaps; child
/// pointers live in a fixed array so a lookup is a direct index, never a
/// probe.
class letter_table {
public:
  /// The two flags plus child link stored for one letter.
  struct slot {
    bool continuation = false;
    bool existence = false;
    const letter_table* child = nullptr;
  };

  bool continuation(letter c) const noexcept { return (cont_ >> c) & 1u; }
  bool existence(letter c) const noexcept { return (exist_ >> c) & 1u; }

  const letter_table* child(letter c) const noexcept {
    return children_[c].get();
  }

  slot slot_at(letter c) const noexcept {
    return {continuation(c), existence(c), child(c)};
  }

  /// Bit i set iff slot i's continuation flag is set.
  std::uint32_t continuation_bits() const noexcept { return cont_; }
  /// Bit i set iff slot i's existence flag is set.
  std::uint32_t existence_bits() const noexcept { return exist_; }

  letter_table() = default;
  letter_table(letter_table&&) noexcept = default;
  letter_table& operator=(letter_table&&) noexcept = default;
  letter_table(const letter_table&) = delete;
  letter_table& operator=(const letter_table&) = delete;

private:
  friend class word_index;

  std::uint32_t cont_ = 0;
  std::uint32_t exist_ = 0;
  std::array<std::unique_ptr<letter_table>, alphabet_size> children_{};
};

/// The whole structure: the root table (empty prefix, always present) plus
/// bookkeeping. Move-only; a moved-from index is reset to empty.
///
/// Build single-threaded, then freeze(); a frozen index never mutates, so
/// any number of threads may query it concurrently.
class word_index {
public:
  word_index() = default;

  word_index(word_index&& other) noexcept
      : root_(std::move(other.root_)),
        word_count_(other.word_count_),
        table_count_(other.table_count_),
        max_depth_(other.max_depth_),
        frozen_(other.frozen_) {
    other.reset();
  }

  word_index& operator=(word_index&& other) noexcept {
    if (this != &other) {
      dispose(root_);
      root_ = std::move(other.root_);
      word_count_ = other.word_count_;
      table_count_ = other.table_count_;
      max_depth_ = other.max_depth_;
      frozen_ = other.frozen_;
      other.reset();
    }
    return *this;
  }

  word_index(const word_index&) = delete;
  word_index& operator=(const word_index&) = delete;

  ~word_index() { dispose(root_); }

  /// Marks the word as present. Allocates child tables for the word's
  /// proper prefixes only; nothing is allocated past the final letter.
  insert_outcome insert(const word& w) {
    if (frozen_) throw frozen_error();
    letter_table* t = &root_;
    const std::size_t last = w.size() - 1;
    for (std::size_t i = 0; i < last; ++i) {
      const letter c = w[i];
      auto& child = t->children_[c];
      if (!child) {
        child = std::make_unique<letter_table>();
        ++table_count_;
      }
      t->cont_ |= 1u << c;
      t = child.get();
    }
    const letter c = w[last];
    if (t->existence(c)) return insert_outcome::already_present;
    t->exist_ |= 1u << c;
    ++word_count_;
    max_depth_ = std::max<std::uint64_t>(max_depth_, w.size());
    return insert_outcome::inserted;
  }

  /// True iff the word was inserted. Walks one table per letter; a clear
  /// continuation flag before the final letter ends the search early.
  bool contains(const word& w) const noexcept {
    const letter_table* t = &root_;
    const std::size_t last = w.size() - 1;
    for (std::size_t i = 0; i < last; ++i) {
      const letter c = w[i];
      if (!t->continuation(c)) return false;
      t = t->child(c);
    }
    return t->existence(w[last]);
  }

  /// contains() plus the table-visit count and why the walk stopped.
  lookup_trace contains_traced(const word& w) const noexcept {
    const letter_table* t = &root_;
    const std::size_t last = w.size() - 1;
    for (std::size_t i = 0; i < last; ++i) {
      const letter c = w[i];
      if (!t->continuation(c))
        return {false, i + 1, stop_reason::continuation_stop};
      t = t->child(c);
    }
    const bool found = t->existence(w[last]);
    return {found, last + 1,
            found ? stop_reason::existence_hit : stop_reason::existence_miss};
  }

  /// True iff some inserted word starts with `prefix` (the word itself
  /// counts). The final slot answers via continuation OR existence.
  bool has_prefix(const word& prefix) const noexcept {
    const letter_table* t = &root_;
    const std::size_t last = prefix.size() - 1;
    for (std::size_t i = 0; i < last; ++i) {
      const letter c = prefix[i];
      if (!t->continuation(c)) return false;
      t = t->child(c);
    }
    const letter c = prefix[last];
    return t->continuation(c) || t->existence(c);
  }

  /// Ends the build phase. Queries stay valid, insert() is rejected.
  /// Idempotent.
  void freeze() noexcept { frozen_ = true; }

  bool frozen() const noexcept { return frozen_; }

  std::uint64_t word_count() const noexcept { return word_count_; }
  std::uint64_t table_count() const noexcept { return table_count_; }

  /// The table for the empty prefix. Entry point for structural walks
  /// (stats, serialization, integrity checks).
  const letter_table& root() const noexcept { return root_; }

  index_stats stats() const {
    index_stats s;
    s.word_count = word_count_;
    s.table_count = table_count_;
    s.max_depth = max_depth_;
    s.estimated_bytes =
        sizeof(word_index) + table_count_ * sizeof(letter_table);
    std::vector<const letter_table*> todo{&root_};
    while (!todo.empty()) {
      const letter_table* t = todo.back();
      todo.pop_back();
      s.occupied_slot_count +=
          std::popcount(t->continuation_bits() | t->existence_bits());
      std::uint32_t bits = t->continuation_bits();
      while (bits) {
        const int c = std::countr_zero(bits);
        bits &= bits - 1;
        todo.push_back(t->child(static_cast<letter>(c)));
      }
    }
    return s;
  }

private:
  void reset() noexcept {
    root_ = letter_table{};
    word_count_ = 0;
    table_count_ = 1;
    max_depth_ = 0;
    frozen_ = false;
  }

  // Tears the subtree down iteratively; the tree can be as deep as the
  // longest inserted word and recursion depth must not track that.
  static void dispose(letter_table& t) noexcept {
    std::vector<std::unique_ptr<letter_table>> pending;
    for (auto& child : t.children_)
      if (child) pending.push_back(std::move(child));
    while (!pending.empty()) {
      std::unique_ptr<letter_table> node = std::move(pending.back());
      pending.pop_back();
      for (auto& child : node->children_)
        if (child) pending.push_back(std::move(child));
    }
  }

  letter_table root_;
  std::uint64_t word_count_ = 0;
  std::uint64_t table_count_ = 1;  // root always exists
  std::uint64_t max_depth_ = 0;
  bool frozen_ = false;
};

}  // namespace wordex
