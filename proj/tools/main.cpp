#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "gqs/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Gaussian covariance-set calculus: JSON command envelopes in, JSON out"};
  std::string input_path;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  app.add_option("--input", input_path, "Read the envelope from FILE instead of stdin");
  app.add_option("--tol", tol, "Override the validation tolerance");
  app.add_option("--seed", seed, "Seed for sampling commands (reserved)");
  CLI11_PARSE(app, argc, argv);

  std::string text;
  if (!input_path.empty()) {
    std::ifstream file(input_path);
    if (!file) {
      std::cerr << "cannot open " << input_path << "\n";
      return 1;
    }
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  } else {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  }

  const auto result = gqs::cli::execute(text, tol, seed);
  if (!result.output.empty()) std::cout << result.output;
  if (!result.diagnostic.empty()) std::cerr << result.diagnostic << "\n";
  return result.exit_code;
}
