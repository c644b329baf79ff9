// Canonical binary image of a frozen index ("WEX1" format).
//
// Layout, all integers little-endian:
//
//   offset  size  field
//   0       4     magic "WEX1"
//   4       1     version, currently 1
//   5       8     word count, uint64
//   13      8*T   T tables, depth-first preorder from the root
//
// Each table is two uint32 bitmaps: continuation flags first, existence
// flags second, bit i = letter i ('a'=0), bits 26..31 zero. The child
// table for each set continuation bit follows immediately, recursively,
// in ascending letter order. One logical index has exactly one image.

#pragma once

#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "index.hpp"
#include "word.hpp"

namespace wordex {

inline constexpr char image_magic[4] = {'W', 'E', 'X', '1'};
inline constexpr std::uint8_t image_version = 1;

/// Thrown when serialize() is handed an index still in its build phase.
class unfrozen_error : public std::logic_error {
public:
  unfrozen_error() : std::logic_error("index must be frozen before serialization") {}
};

/// A stream that is not a well-formed index image.
class image_error : public std::runtime_error {
public:
  enum class code {
    bad_magic,
    unsupported_version,
    truncated_stream,
    malformed_bitmap,
    word_count_mismatch,
  };

  image_error(code kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  code kind() const noexcept { return kind_; }

private:
  code kind_;
};

namespace detail {

inline void put_u32le(std::ostream& out, std::uint32_t v) {
  const char b[4] = {
      static_cast<char>(v & 0xff),
      static_cast<char>((v >> 8) & 0xff),
      static_cast<char>((v >> 16) & 0xff),
      static_cast<char>((v >> 24) & 0xff),
  };
  out.write(b, 4);
}

inline void put_u64le(std::ostream& out, std::uint64_t v) {
  put_u32le(out, static_cast<std::uint32_t>(v));
  put_u32le(out, static_cast<std::uint32_t>(v >> 32));
}

inline void read_exact(std::istream& in, char* buf, std::size_t n) {
  in.read(buf, static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(in.gcount()) != n) {
    if (in.bad()) throw io_error("index image: stream read failed");
    throw image_error(image_error::code::truncated_stream,
                      "index image: truncated stream");
  }
}

inline std::uint32_t get_u32le(const char* b) {
  return static_cast<std::uint32_t>(static_cast<unsigned char>(b[0])) |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[1])) << 8 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[2])) << 16 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[3])) << 24;
}

inline constexpr std::uint32_t letter_mask = (1u << alphabet_size) - 1;

}  // namespace detail

/// Writes the canonical image; returns the byte count. The index must be
/// frozen so the bytes cannot be invalidated by a later insert.
inline std::uint64_t serialize(const word_index& index, std::ostream& sink) {
  if (!index.frozen()) throw unfrozen_error();

  sink.write(image_magic, 4);
  sink.put(static_cast<char>(image_version));
  detail::put_u64le(sink, index.word_count());
  std::uint64_t bytes = 13;

  // Preorder walk with an explicit stack; each frame tracks the
  // continuation bits whose children are still unwritten.
  struct frame {
    const letter_table* table;
    std::uint32_t pending;
  };
  auto emit = [&](const letter_table& t) {
    detail::put_u32le(sink, t.continuation_bits());
    detail::put_u32le(sink, t.existence_bits());
    bytes += 8;
  };
  emit(index.root());
  std::vector<frame> stack{{&index.root(), index.root().continuation_bits()}};
  while (!stack.empty()) {
    frame& f = stack.back();
    if (f.pending == 0) {
      stack.pop_back();
      continue;
    }
    const int c = std::countr_zero(f.pending);
    f.pending &= f.pending - 1;
    const letter_table* child = f.table->child(static_cast<letter>(c));
    emit(*child);
    stack.push_back({child, child->continuation_bits()});
  }

  if (!sink) throw io_error("index image: sink write failed");
  return bytes;
}

/// Reads an image and rebuilds the index it encodes. The result is frozen,
/// answers every query like the original, and re-serializes byte-for-byte.
inline word_index deserialize(std::istream& source) {
  char header[13];
  detail::read_exact(source, header, sizeof header);
  if (header[0] != image_magic[0] || header[1] != image_magic[1] ||
      header[2] != image_magic[2] || header[3] != image_magic[3]) {
    throw image_error(image_error::code::bad_magic,
                      "index image: bad magic");
  }
  const auto version = static_cast<std::uint8_t>(header[4]);
  if (version != image_version) {
    throw image_error(image_error::code::unsupported_version,
                      "index image: unsupported version " +
                          std::to_string(version));
  }
  const std::uint64_t declared_count =
      static_cast<std::uint64_t>(detail::get_u32le(header + 5)) |
      static_cast<std::uint64_t>(detail::get_u32le(header + 9)) << 32;

  // Decode the table stream into the word set it encodes. The structure is
  // a pure function of that set, so reinserting the words reproduces the
  // exact table layout of a canonical image.
  std::vector<word> words;
  auto read_table = [&source]() -> std::pair<std::uint32_t, std::uint32_t> {
    char buf[8];
    detail::read_exact(source, buf, sizeof buf);
    const std::uint32_t cont = detail::get_u32le(buf);
    const std::uint32_t exist = detail::get_u32le(buf + 4);
    if ((cont & ~detail::letter_mask) || (exist & ~detail::letter_mask)) {
      throw image_error(image_error::code::malformed_bitmap,
                        "index image: bitmap uses bits past 'z'");
    }
    return {cont, exist};
  };

  std::string path;  // letter codes of the current table's prefix
  auto collect = [&words, &path](std::uint32_t exist) {
    while (exist) {
      const int c = std::countr_zero(exist);
      exist &= exist - 1;
      std::string codes = path;
      codes.push_back(static_cast<char>(c));
      words.emplace_back(std::move(codes));
    }
  };

  auto [root_cont, root_exist] = read_table();
  collect(root_exist);
  std::vector<std::uint32_t> pending{root_cont};
  while (!pending.empty()) {
    if (pending.back() == 0) {
      pending.pop_back();
      if (!path.empty()) path.pop_back();
      continue;
    }
    const int c = std::countr_zero(pending.back());
    pending.back() &= pending.back() - 1;
    path.push_back(static_cast<char>(c));
    auto [cont, exist] = read_table();
    collect(exist);
    pending.push_back(cont);
  }

  if (words.size() != declared_count) {
    throw image_error(image_error::code::word_count_mismatch,
                      "index image: header declares " +
                          std::to_string(declared_count) + " words, stream holds " +
                          std::to_string(words.size()));
  }

  word_index index;
  for (const word& w : words) index.insert(w);
  index.freeze();
  return index;
}

inline std::uint64_t save_index(const word_index& index,
                                const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error("cannot create index file: " + path.string());
  const std::uint64_t n = serialize(index, out);
  out.flush();
  if (!out) throw io_error("cannot write index file: " + path.string());
  return n;
}

inline word_index load_index(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open index file: " + path.string());
  return deserialize(in);
}

}  // namespace wordex
