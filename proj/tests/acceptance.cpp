// Acceptance suite: one PASS/FAIL line per criterion, detail lines above.
#include "idgames/parallel.hpp"
#include "idgames/verify.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  idg::VerifyOptions options;
  options.threads = idg::hardware_threads();
  if (const char* t = std::getenv("IDGAMES_THREADS")) options.threads = static_cast<unsigned>(std::stoul(t));
  for (int i = 1; i < argc; ++i) options.criteria.insert(std::stoi(argv[i]));

  const auto checks = idg::verify_paper(options);
  for (const auto& c : checks) std::cout << "  " << idg::format_check(c) << '\n';
  std::cout << '\n';
  bool all = true;
  for (const auto& s : idg::summarize(checks)) {
    std::cout << (s.passed() ? "PASS" : "FAIL") << " criterion " << s.criterion << " (" << s.checks - s.failed << "/"
              << s.checks << " checks)\n";
    all = all && s.passed();
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
