// wex: build, query, and benchmark word-existence indexes.
//
// Results go to stdout, diagnostics to stderr. Exit codes: 0 for a positive
// result, 1 for a negative one (word absent, prefix dead-end), 2 for any
// normalization, I/O, or format error.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <wordex/wordex.hpp>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_error = 2;

int cmd_build(const std::filesystem::path& wordlist_path,
              const std::filesystem::path& out_path) {
  const wordex::wordlist list = wordex::load_wordlist_file(wordlist_path);
  wordex::word_index index;
  for (const wordex::word& w : list.words) index.insert(w);
  index.freeze();
  wordex::save_index(index, out_path);
  std::cerr << "accepted=" << list.report.accepted_count
            << " duplicates=" << list.report.duplicate_count
            << " rejected=" << list.report.rejects.size() << '\n';
  return exit_ok;
}

int cmd_query(const std::filesystem::path& index_path, const std::string& text,
              bool trace) {
  const wordex::word_index index = wordex::load_index(index_path);
  const wordex::word w = wordex::normalize(text);
  const wordex::lookup_trace result = index.contains_traced(w);
  std::cout << (result.found ? "valid" : "invalid") << '\n';
  if (trace) {
    std::cout << "visits=" << result.visits << '\n'
              << "stop_reason=" << wordex::to_string(result.reason) << '\n';
  }
  return result.found ? exit_ok : exit_negative;
}

int cmd_prefix(const std::filesystem::path& index_path,
               const std::string& text) {
  const wordex::word_index index = wordex::load_index(index_path);
  const wordex::word p = wordex::normalize(text);
  const bool continues = index.has_prefix(p);
  std::cout << (continues ? "continues" : "dead-end") << '\n';
  return continues ? exit_ok : exit_negative;
}

int cmd_check(const std::filesystem::path& index_path,
              const std::filesystem::path& wordlist_path) {
  const wordex::word_index index = wordex::load_index(index_path);
  std::ifstream in(wordlist_path, std::ios::binary);
  if (!in) throw wordex::io_error("cannot open wordlist: " + wordlist_path.string());

  std::uint64_t valid = 0, invalid = 0, skipped = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    wordex::normalize_issue issue;
    const auto w = wordex::try_normalize(line, issue);
    if (!w) {
      ++skipped;
      std::cout << line << "\tskipped\t" << wordex::to_string(issue.fault) << '\n';
      continue;
    }
    if (index.contains(*w)) {
      ++valid;
      std::cout << w->text() << "\tvalid\n";
    } else {
      ++invalid;
      std::cout << w->text() << "\tinvalid\n";
    }
  }
  if (in.bad()) throw wordex::io_error("wordlist: stream read failed");
  std::cerr << "valid=" << valid << " invalid=" << invalid
            << " skipped=" << skipped << '\n';
  return exit_ok;
}

int cmd_stats(const std::filesystem::path& index_path) {
  const wordex::word_index index = wordex::load_index(index_path);
  const wordex::index_stats s = index.stats();
  std::cout << "word_count=" << s.word_count << '\n'
            << "table_count=" << s.table_count << '\n'
            << "occupied_slot_count=" << s.occupied_slot_count << '\n'
            << "max_depth=" << s.max_depth << '\n'
            << "estimated_bytes=" << s.estimated_bytes << '\n';
  return exit_ok;
}

int cmd_bench(const wordex::bench_config& config,
              const std::filesystem::path& csv_path) {
  const wordex::bench_report report = wordex::run_benchmark(config);
  wordex::print_report(report, std::cout);
  if (!csv_path.empty()) {
    wordex::write_csv_file(report, csv_path);
    std::cerr << "csv written to " << csv_path.string() << '\n';
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word-existence index tool"};
  app.require_subcommand(1);

  std::filesystem::path wordlist_path, index_path, out_path, csv_path;
  std::string text;
  bool trace = false;
  wordex::bench_config bench;

  CLI::App* build = app.add_subcommand("build", "build an index from a wordlist");
  build->add_option("--wordlist", wordlist_path, "input wordlist, one word per line")
      ->required();
  build->add_option("--out", out_path, "output index file")->required();

  CLI::App* query = app.add_subcommand("query", "test one word for existence");
  query->add_option("--index", index_path, "index file")->required();
  query->add_flag("--trace", trace, "also print table visits and stop reason");
  query->add_option("word", text, "word to look up")->required();

  CLI::App* prefix = app.add_subcommand("prefix", "test whether any word starts with a prefix");
  prefix->add_option("--index", index_path, "index file")->required();
  prefix->add_option("prefix", text, "prefix to test")->required();

  CLI::App* check = app.add_subcommand("check", "look up every word of a wordlist");
  check->add_option("--index", index_path, "index file")->required();
  check->add_option("--wordlist", wordlist_path, "wordlist to check")->required();

  CLI::App* stats = app.add_subcommand("stats", "print index statistics");
  stats->add_option("--index", index_path, "index file")->required();

  CLI::App* bench_cmd = app.add_subcommand("bench", "compare against baseline structures");
  bench_cmd->add_option("--corpus", bench.corpus_path, "wordlist to benchmark on")
      ->required();
  bench_cmd->add_option("--queries", bench.query_count, "queries per size");
  bench_cmd->add_option("--hit-ratio", bench.hit_ratio, "fraction of queries that hit");
  bench_cmd->add_option("--seed", bench.seed, "workload seed");
  bench_cmd->add_option("--sizes", bench.sizes, "corpus subset sizes")
      ->delimiter(',');
  bench_cmd->add_option("--csv", csv_path, "also write a CSV report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return cmd_build(wordlist_path, out_path);
    if (query->parsed()) return cmd_query(index_path, text, trace);
    if (prefix->parsed()) return cmd_prefix(index_path, text);
    if (check->parsed()) return cmd_check(index_path, wordlist_path);
    if (stats->parsed()) return cmd_stats(index_path);
    if (bench_cmd->parsed()) return cmd_bench(bench, csv_path);
  } catch (const std::exception& e) {
    std::cerr << "wex: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}
