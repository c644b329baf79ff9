// Acceptance suite. Each criterion prints exactly one PASS/FAIL line;
// INFO lines carry the reported (non-asserted) numbers. Exits nonzero if
// any criterion fails.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include <wordex/wordex.hpp>

#include "support.hpp"

using namespace wordex;
using support::w;

namespace {

struct check_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw check_failure(what);
}

int failures = 0;

template <typename Fn>
void criterion(const std::string& name, Fn&& body) {
  try {
    body();
    std::cout << "PASS " << name << std::endl;
  } catch (const std::exception& e) {
    ++failures;
    std::cout << "FAIL " << name << ": " << e.what() << std::endl;
  }
}

std::vector<word> load_corpus(std::size_t count, std::uint64_t seed) {
  std::vector<word> out;
  out.reserve(count);
  for (const std::string& text : synth_corpus(count, seed))
    out.push_back(normalize(text));
  return out;
}

}  // namespace

int main() {
  // Dictionary-scale corpus shared by the structural criteria; the first
  // 1,000 words double as the small corpus, so small is a subset of large.
  const std::vector<word> corpus = load_corpus(50'000, 4242);

  criterion("worked-example", [] {
    word_index idx;
    idx.insert(w("bat"));
    idx.insert(w("bath"));
    expect(idx.table_count() == 4,
           "table_count=" + std::to_string(idx.table_count()) + ", want 4");
    expect(idx.contains(w("bat")), "contains(bat) should be true");
    expect(idx.contains(w("bath")), "contains(bath) should be true");
    expect(!idx.contains(w("ba")), "contains(ba) should be false");

    const auto path_bat = support::lookup_path(idx, w("bat"));
    const auto path_bath = support::lookup_path(idx, w("bath"));
    std::size_t shared = 0;
    for (const letter_table* t : path_bat)
      shared += std::find(path_bath.begin(), path_bath.end(), t) != path_bath.end();
    expect(shared == 3, "shared tables=" + std::to_string(shared) + ", want 3");
  });

  criterion("oracle-equivalence", [] {
    detail::splitmix64 meta(777);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n_words = 50 + meta.bounded(4'951);  // up to 5,000
      detail::splitmix64 rng(meta.next());
      const auto words = support::random_words(rng, n_words, 1, 12);

      word_index idx;
      for (const auto& x : words) idx.insert(x);
      const support::set_oracle members(words);
      const support::sorted_prefix_oracle prefixes(words);

      bench_config cfg;
      cfg.query_count = 100'000;
      cfg.hit_ratio = 0.5;
      cfg.seed = meta.next();
      const auto queries = generate_queries(words, cfg);
      for (const auto& q : queries) {
        if (idx.contains(q) != members.contains(q))
          throw check_failure("contains(" + q.text() + ") diverges in trial " +
                              std::to_string(trial));
        if (idx.has_prefix(q) != prefixes.has_prefix(q))
          throw check_failure("has_prefix(" + q.text() + ") diverges in trial " +
                              std::to_string(trial));
      }
    }
  });

  criterion("cost-claim", [&corpus] {
    word_index small, large;
    for (std::size_t i = 0; i < 1'000; ++i) small.insert(corpus[i]);
    for (const auto& x : corpus) large.insert(x);

    detail::splitmix64 rng(99);
    std::vector<word> probes;
    std::unordered_set<std::string> picked;
    while (probes.size() < 100) {
      const word& candidate = corpus[rng.bounded(1'000)];
      if (picked.emplace(candidate.codes()).second) probes.push_back(candidate);
    }
    for (const word& p : probes) {
      const lookup_trace in_small = small.contains_traced(p);
      const lookup_trace in_large = large.contains_traced(p);
      expect(in_small.found && in_large.found, p.text() + " should hit both");
      expect(in_small.visits == in_large.visits,
             "visits for " + p.text() + " differ: " +
                 std::to_string(in_small.visits) + " vs " +
                 std::to_string(in_large.visits));
      expect(in_small.visits == p.size(),
             "hit visits for " + p.text() + " should equal its length");
    }

    // Misses never walk past the query length either.
    const support::set_oracle members(corpus);
    std::size_t misses = 0;
    while (misses < 100) {
      const word& base = corpus[rng.bounded(corpus.size())];
      std::string codes(base.codes());
      codes.push_back(static_cast<char>(rng.bounded(alphabet_size)));
      const word q{std::move(codes)};
      if (members.contains(q)) continue;
      ++misses;
      const lookup_trace in_small = small.contains_traced(q);
      const lookup_trace in_large = large.contains_traced(q);
      expect(!in_small.found && !in_large.found, q.text() + " should miss both");
      expect(in_small.visits <= q.size() && in_large.visits <= q.size(),
             "miss visits exceed query length for " + q.text());
    }
  });

  criterion("lazy-allocation", [&corpus] {
    word_index idx;
    for (const auto& x : corpus) idx.insert(x);

    const auto prefixes = support::proper_prefixes(corpus);
    expect(idx.table_count() == 1 + prefixes.size(),
           "table_count should be 1 + distinct proper prefixes");

    std::uint64_t tables = 0;
    support::walk_tables(idx, [&](const std::string& prefix, const letter_table& t) {
      ++tables;
      if (!prefix.empty())
        expect(prefixes.contains(prefix),
               "table exists for a non-prefix path");
      for (letter c = 0; c < alphabet_size; ++c)
        expect((t.child(c) != nullptr) == t.continuation(c),
               "child/continuation coupling broken");
    });
    expect(tables == idx.table_count(), "walk disagrees with table_count");
  });

  criterion("space-sharing", [&corpus] {
    word_index idx;
    std::uint64_t letter_total = 0;
    for (const auto& x : corpus) {
      idx.insert(x);
      letter_total += x.size();
    }
    std::cout << "INFO space-sharing: tables=" << idx.table_count()
              << " letters=" << letter_total << " ratio="
              << static_cast<double>(idx.table_count()) /
                     static_cast<double>(letter_total)
              << std::endl;
    expect(idx.table_count() < letter_total,
           "table count should be strictly below the summed word lengths");
  });

  criterion("serialization", [] {
    word_index example;
    example.insert(w("bat"));
    example.insert(w("bath"));
    example.freeze();
    std::ostringstream example_out;
    const std::uint64_t example_bytes = serialize(example, example_out);
    expect(example_bytes == 45 && example_out.str().size() == 45,
           "bat/bath image should be exactly 45 bytes, got " +
               std::to_string(example_out.str().size()));

    detail::splitmix64 rng(31337);
    for (int trial = 0; trial < 20; ++trial) {
      const auto words =
          support::random_words(rng, 50 + rng.bounded(2'951), 1, 12);
      word_index original;
      for (const auto& x : words) original.insert(x);
      original.freeze();

      std::ostringstream sink;
      serialize(original, sink);
      const std::string image = sink.str();

      std::istringstream source(image);
      const word_index copy = deserialize(source);

      const auto probes = support::random_words(rng, 1'000, 1, 13);
      for (const auto& q : probes) {
        if (copy.contains(q) != original.contains(q) ||
            copy.has_prefix(q) != original.has_prefix(q))
          throw check_failure("round-trip changed an answer for " + q.text());
      }
      for (const auto& x : words)
        expect(copy.contains(x), "round-trip lost " + x.text());

      std::ostringstream sink2;
      serialize(copy, sink2);
      expect(sink2.str() == image,
             "re-serialization is not byte-identical in trial " +
                 std::to_string(trial));
    }
  });

  criterion("benchmark-differential", [&corpus] {
    bench_config cfg;
    cfg.query_count = 100'000;
    cfg.hit_ratio = 0.5;
    cfg.seed = 20'26;
    cfg.sizes = {1'000, 10'000, 50'000};
    // run_benchmark aborts on any cross-structure disagreement.
    const bench_report report = run_benchmark(corpus, cfg);
    expect(report.rows.size() == 9, "expected 3 structures x 3 sizes");
    for (const bench_row& r : report.rows) {
      expect(r.build_nanos > 0, r.structure + ": build time not positive");
      expect(r.median_hit_nanos > 0, r.structure + ": hit latency not positive");
      expect(r.median_miss_nanos > 0, r.structure + ": miss latency not positive");
      expect(r.p99_hit_nanos > 0, r.structure + ": p99 latency not positive");
    }
    std::cout << "INFO benchmark timings (reported, not asserted):\n";
    print_report(report, std::cout);
  });

  if (failures != 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  return 0;
}
