#pragma once

#include "idgames/simplex.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace idg {

struct Check {
  int criterion = 0;
  std::string name;
  std::string expected;
  std::string actual;
  std::string tolerance;
  bool passed = false;
  bool stochastic = false;  // seeded seesaw; a different seed may be needed
  double seconds = 0;
};

struct VerifyOptions {
  std::set<int> criteria;  // empty: all of 1..10
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::size_t restarts = 50;
  SimplexOptions simplex;  // lowering pivot_limit sabotages every LP
};

std::vector<Check> verify_paper(const VerifyOptions& options = {});

// "PASS  3  census 3,2,2 class count  expected=5876 actual=5876 tol=exact  0.51s"
std::string format_check(const Check& c);

struct CriterionSummary {
  int criterion = 0;
  std::size_t checks = 0;
  std::size_t failed = 0;
  bool passed() const { return checks > 0 && failed == 0; }
};
std::vector<CriterionSummary> summarize(const std::vector<Check>& checks);

}  // namespace idg
