// Benchmark harness: the word-existence index against the two conventional
// membership structures, sorted-array binary search and a hash set, on an
// identical deterministic workload. Every run cross-checks all answers;
// timings are reported, never judged.

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "detail/rng.hpp"
#include "index.hpp"
#include "word.hpp"
#include "wordlist.hpp"

namespace wordex {

struct bench_config {
  std::filesystem::path corpus_path;
  std::uint64_t query_count = 100'000;
  double hit_ratio = 0.5;
  std::uint64_t seed = 42;
  std::vector<std::uint64_t> sizes = {1'000, 10'000, 50'000};
};

struct bench_row {
  std::string structure;
  std::uint64_t size = 0;
  std::uint64_t build_nanos = 0;
  std::uint64_t median_hit_nanos = 0;
  std::uint64_t median_miss_nanos = 0;
  std::uint64_t p99_hit_nanos = 0;
  std::uint64_t estimated_bytes = 0;
  double median_visits = 0.0;  // word-existence rows only
};

struct bench_report {
  std::vector<bench_row> rows;
};

/// The three structures returned different answers for the same query.
class bench_mismatch_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Baselines
// ---------------------------------------------------------------------------

/// Sorted vector of code strings, membership by binary search.
class sorted_word_list {
public:
  explicit sorted_word_list(const std::vector<word>& words) {
    keys_.reserve(words.size());
    for (const word& w : words) keys_.emplace_back(w.codes());
    std::sort(keys_.begin(), keys_.end());
  }

  bool contains(const word& w) const {
    return std::binary_search(keys_.begin(), keys_.end(), w.codes());
  }

  std::uint64_t estimated_bytes() const {
    std::uint64_t heap = 0;
    const std::size_t sso = std::string().capacity();
    for (const std::string& k : keys_)
      if (k.capacity() > sso) heap += k.capacity() + 1;
    return sizeof(*this) + keys_.capacity() * sizeof(std::string) + heap;
  }

private:
  std::vector<std::string> keys_;
};

/// std::unordered_set of code strings with transparent lookup.
class hashed_word_set {
public:
  explicit hashed_word_set(const std::vector<word>& words) {
    set_.reserve(words.size());
    for (const word& w : words) set_.emplace(w.codes());
  }

  bool contains(const word& w) const { return set_.contains(w.codes()); }

  std::uint64_t estimated_bytes() const {
    // Structural estimate: bucket array + one node per element (next
    // pointer, cached hash, the string) + string heap spill.
    std::uint64_t heap = 0;
    const std::size_t sso = std::string().capacity();
    for (const std::string& k : set_)
      if (k.capacity() > sso) heap += k.capacity() + 1;
    const std::uint64_t node =
        sizeof(void*) + sizeof(std::size_t) + sizeof(std::string);
    return sizeof(*this) + set_.bucket_count() * sizeof(void*) +
           set_.size() * node + heap;
  }

private:
  struct sv_hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::unordered_set<std::string, sv_hash, std::equal_to<>> set_;
};

// ---------------------------------------------------------------------------
// Workload
// ---------------------------------------------------------------------------

/// query_count queries, hit_ratio of them drawn from `words` with
/// replacement, the rest near-miss mutations guaranteed absent from the
/// set, all shuffled. A pure function of (words, config).
inline std::vector<word> generate_queries(const std::vector<word>& words,
                                          const bench_config& config) {
  if (words.empty())
    throw std::invalid_argument("generate_queries: word list is empty");
  if (config.query_count < 1)
    throw std::invalid_argument("generate_queries: query_count must be >= 1");
  if (config.hit_ratio < 0.0 || config.hit_ratio > 1.0)
    throw std::invalid_argument("generate_queries: hit_ratio outside [0,1]");

  detail::splitmix64 rng(config.seed);
  const std::uint64_t hits = std::min<std::uint64_t>(
      config.query_count,
      static_cast<std::uint64_t>(
          std::llround(config.hit_ratio * static_cast<double>(config.query_count))));

  std::unordered_set<std::string> member;
  member.reserve(words.size() * 2);
  for (const word& w : words) member.emplace(w.codes());

  std::vector<word> queries;
  queries.reserve(config.query_count);
  for (std::uint64_t i = 0; i < hits; ++i)
    queries.push_back(words[rng.bounded(words.size())]);

  for (std::uint64_t i = hits; i < config.query_count; ++i) {
    for (;;) {
      const word& base = words[rng.bounded(words.size())];
      std::string codes(base.codes());
      if (rng.chance(1, 2)) {
        // Flip one letter to a different one.
        const std::size_t pos = rng.bounded(codes.size());
        codes[pos] = static_cast<char>(
            (static_cast<unsigned>(codes[pos]) + 1 + rng.bounded(alphabet_size - 1)) %
            alphabet_size);
      } else {
        codes.push_back(static_cast<char>(rng.bounded(alphabet_size)));
      }
      if (!member.contains(codes)) {
        queries.emplace_back(std::move(codes));
        break;
      }
    }
  }

  for (std::size_t i = queries.size(); i > 1; --i)
    std::swap(queries[i - 1], queries[rng.bounded(i)]);
  return queries;
}

// ---------------------------------------------------------------------------
// Measurement
// ---------------------------------------------------------------------------

namespace detail {

template <typename T>
inline void do_not_optimize(const T& value) {
  asm volatile("" : : "r,m"(value) : "memory");
}

inline std::uint64_t now_ns() {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now().time_since_epoch())
          .count());
}

inline std::uint64_t order_stat(std::vector<std::uint64_t>& v, std::size_t k) {
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
  return v[k];
}

inline std::uint64_t median_of(std::vector<std::uint64_t> v) {
  if (v.empty()) return 0;
  return order_stat(v, v.size() / 2);
}

inline std::uint64_t p99_of(std::vector<std::uint64_t> v) {
  if (v.empty()) return 0;
  return order_stat(v, std::min(v.size() - 1, v.size() * 99 / 100));
}

template <class Structure>
std::vector<char> answer_all(const Structure& s,
                             const std::vector<word>& queries) {
  std::vector<char> answers(queries.size());
  for (std::size_t i = 0; i < queries.size(); ++i)
    answers[i] = s.contains(queries[i]) ? 1 : 0;
  return answers;
}

struct latency_sample {
  std::vector<std::uint64_t> hit_ns;
  std::vector<std::uint64_t> miss_ns;
};

template <class Structure>
latency_sample timed_sweep(const Structure& s,
                           const std::vector<word>& queries,
                           const std::vector<char>& is_hit) {
  latency_sample out;
  out.hit_ns.reserve(queries.size());
  out.miss_ns.reserve(queries.size());
  for (std::size_t i = 0; i < queries.size(); ++i) {
    const std::uint64_t t0 = now_ns();
    const bool r = s.contains(queries[i]);
    const std::uint64_t t1 = now_ns();
    do_not_optimize(r);
    (is_hit[i] ? out.hit_ns : out.miss_ns).push_back(t1 - t0);
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Runner
// ---------------------------------------------------------------------------

/// Runs the full comparison on an already-loaded corpus. For each size the
/// three structures are built from the same first-N words and answer the
/// same query list; any disagreement aborts the run.
inline bench_report run_benchmark(const std::vector<word>& corpus,
                                  const bench_config& config) {
  if (config.sizes.empty())
    throw std::invalid_argument("bench: no corpus sizes given");
  for (std::uint64_t size : config.sizes) {
    if (size < 1 || size > corpus.size())
      throw std::invalid_argument(
          "bench: size " + std::to_string(size) + " exceeds corpus of " +
          std::to_string(corpus.size()) + " words");
  }

  bench_report report;
  for (std::uint64_t size : config.sizes) {
    const std::vector<word> subset(corpus.begin(),
                                   corpus.begin() + static_cast<std::ptrdiff_t>(size));
    const std::vector<word> queries = generate_queries(subset, config);

    std::uint64_t t0 = detail::now_ns();
    word_index index;
    for (const word& w : subset) index.insert(w);
    index.freeze();
    const std::uint64_t trie_build = detail::now_ns() - t0;

    t0 = detail::now_ns();
    const sorted_word_list sorted(subset);
    const std::uint64_t sorted_build = detail::now_ns() - t0;

    t0 = detail::now_ns();
    const hashed_word_set hashed(subset);
    const std::uint64_t hashed_build = detail::now_ns() - t0;

    // Warm-up sweeps double as the differential record.
    const std::vector<char> trie_ans = detail::answer_all(index, queries);
    const std::vector<char> sorted_ans = detail::answer_all(sorted, queries);
    const std::vector<char> hashed_ans = detail::answer_all(hashed, queries);
    for (std::size_t i = 0; i < queries.size(); ++i) {
      if (trie_ans[i] != sorted_ans[i] || trie_ans[i] != hashed_ans[i]) {
        throw bench_mismatch_error(
            "structures disagree on query \"" + queries[i].text() +
            "\" at size " + std::to_string(size) +
            " (word-existence=" + std::to_string(trie_ans[i]) +
            " sorted-array=" + std::to_string(sorted_ans[i]) +
            " hash-set=" + std::to_string(hashed_ans[i]) + ")");
      }
    }
    const std::vector<char>& is_hit = hashed_ans;

    std::vector<std::uint64_t> visits;
    visits.reserve(queries.size());
    for (const word& q : queries) visits.push_back(index.contains_traced(q).visits);
    const double median_visits =
        static_cast<double>(detail::median_of(std::move(visits)));

    auto push_row = [&](std::string name, std::uint64_t build,
                        detail::latency_sample lat, std::uint64_t bytes,
                        double med_visits) {
      bench_row row;
      row.structure = std::move(name);
      row.size = size;
      row.build_nanos = build;
      row.median_hit_nanos = detail::median_of(lat.hit_ns);
      row.median_miss_nanos = detail::median_of(lat.miss_ns);
      row.p99_hit_nanos = detail::p99_of(std::move(lat.hit_ns));
      row.estimated_bytes = bytes;
      row.median_visits = med_visits;
      report.rows.push_back(std::move(row));
    };

    push_row("word-existence", trie_build,
             detail::timed_sweep(index, queries, is_hit),
             index.stats().estimated_bytes, median_visits);
    push_row("sorted-array", sorted_build,
             detail::timed_sweep(sorted, queries, is_hit),
             sorted.estimated_bytes(), 0.0);
    push_row("hash-set", hashed_build,
             detail::timed_sweep(hashed, queries, is_hit),
             hashed.estimated_bytes(), 0.0);
  }
  return report;
}

/// Loads config.corpus_path through the wordlist pipeline and runs.
inline bench_report run_benchmark(const bench_config& config) {
  const wordlist list = load_wordlist_file(config.corpus_path);
  return run_benchmark(list.words, config);
}

// ---------------------------------------------------------------------------
// Output
// ---------------------------------------------------------------------------

inline void print_report(const bench_report& report, std::ostream& out) {
  char line[160];
  std::snprintf(line, sizeof line, "%-15s %8s %12s %12s %13s %12s %12s %11s",
                "structure", "size", "build_ns", "med_hit_ns", "med_miss_ns",
                "p99_hit_ns", "est_bytes", "med_visits");
  out << line << '\n';
  for (const bench_row& r : report.rows) {
    if (r.median_visits > 0.0) {
      std::snprintf(line, sizeof line,
                    "%-15s %8llu %12llu %12llu %13llu %12llu %12llu %11.1f",
                    r.structure.c_str(),
                    static_cast<unsigned long long>(r.size),
                    static_cast<unsigned long long>(r.build_nanos),
                    static_cast<unsigned long long>(r.median_hit_nanos),
                    static_cast<unsigned long long>(r.median_miss_nanos),
                    static_cast<unsigned long long>(r.p99_hit_nanos),
                    static_cast<unsigned long long>(r.estimated_bytes),
                    r.median_visits);
    } else {
      std::snprintf(line, sizeof line,
                    "%-15s %8llu %12llu %12llu %13llu %12llu %12llu %11s",
                    r.structure.c_str(),
                    static_cast<unsigned long long>(r.size),
                    static_cast<unsigned long long>(r.build_nanos),
                    static_cast<unsigned long long>(r.median_hit_nanos),
                    static_cast<unsigned long long>(r.median_miss_nanos),
                    static_cast<unsigned long long>(r.p99_hit_nanos),
                    static_cast<unsigned long long>(r.estimated_bytes),
                    "-");
    }
    out << line << '\n';
  }
}

inline void write_csv(const bench_report& report, std::ostream& out) {
  out << "structure,size,build_nanos,median_hit_nanos,median_miss_nanos,"
         "p99_hit_nanos,estimated_bytes,median_visits\n";
  for (const bench_row& r : report.rows) {
    out << r.structure << ',' << r.size << ',' << r.build_nanos << ','
        << r.median_hit_nanos << ',' << r.median_miss_nanos << ','
        << r.p99_hit_nanos << ',' << r.estimated_bytes << ','
        << r.median_visits << '\n';
  }
}

inline void write_csv_file(const bench_report& report,
                           const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw io_error("cannot create report file: " + path.string());
  write_csv(report, out);
  out.flush();
  if (!out) throw io_error("cannot write report file: " + path.string());
}

}  // namespace wordex
