#pragma once

#include "idgames/rational.hpp"
#include "idgames/scenario.hpp"
#include "idgames/simplex.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace idg {

struct ClassBounds {
  Index representative = 0;
  std::uint64_t orbit_size = 0;
  Rational classical;
  Rational nosignaling;
  std::optional<bool> decomposable;  // three-player scenarios, nontrivial classes
};

using Histogram = std::map<Rational, std::size_t>;

// Histograms cover the nontrivial classes (omega_ns > omega_cl).
struct CensusReport {
  Scenario scenario{{1}, 2};
  std::uint64_t total_functions = 0;
  std::size_t class_count = 0;
  std::size_t nontrivial_class_count = 0;
  std::uint64_t nontrivial_function_count = 0;
  Histogram histogram_cl;
  Histogram histogram_ns;
  Histogram histogram_abs_gap;   // omega_ns - omega_cl
  Histogram histogram_rel_gap;   // omega_ns / omega_cl - 1
  std::optional<std::size_t> decomposable_count;
  bool certificates_ok = true;   // every LP passed its duality check
  std::vector<ClassBounds> classes;
};

struct CensusOptions {
  unsigned threads = 1;
  SimplexOptions simplex;
};

// Bounds are computed on each class representative. Decomposability is read
// off the LP witness (Bland's rule from the all-artificial basis).
CensusReport run_census(const Scenario& s, const CensusOptions& options = {});

// {"num": "7", "den": "24", "decimal": "0.291667"}
nlohmann::json fraction_json(const Rational& r);
nlohmann::json census_to_json(const CensusReport& report, bool include_classes = false);
// Rows "table,value,decimal,count" for the four histograms.
std::string census_to_csv(const CensusReport& report);

}  // namespace idg
