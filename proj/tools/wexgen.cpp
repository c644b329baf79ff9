// wexgen: write a deterministic English-looking wordlist, for benchmarking
// on machines without a dictionary file.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <wordex/synth.hpp>

int main(int argc, char** argv) {
  CLI::App app{"synthetic wordlist generator"};
  std::filesystem::path out_path;
  std::size_t count = 50'000;
  std::uint64_t seed = 42;
  app.add_option("--out", out_path, "output wordlist file")->required();
  app.add_option("--count", count, "number of distinct words");
  app.add_option("--seed", seed, "generator seed");
  CLI11_PARSE(app, argc, argv);

  std::ofstream out(out_path, std::ios::trunc);
  if (!out) {
    std::cerr << "wexgen: cannot create " << out_path.string() << '\n';
    return 2;
  }
  for (const std::string& w : wordex::synth_corpus(count, seed)) out << w << '\n';
  out.flush();
  if (!out) {
    std::cerr << "wexgen: write failed on " << out_path.string() << '\n';
    return 2;
  }
  std::cerr << "wrote " << count << " words to " << out_path.string() << '\n';
  return 0;
}
