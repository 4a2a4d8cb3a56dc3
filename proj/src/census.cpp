#include "idgames/census.hpp"

#include "idgames/classical.hpp"
#include "idgames/error.hpp"
#include "idgames/game.hpp"
#include "idgames/nosignaling.hpp"
#include "idgames/parallel.hpp"
#include "idgames/symmetry.hpp"

#include <sstream>

namespace idg {

CensusReport run_census(const Scenario& s, const CensusOptions& options) {
  const auto total = GameFunction::function_count(s);
  if (!total) throw Error(ErrorCode::kTooLarge, "function space of " + s.to_string() + " does not fit 64 bits");
  const auto classes = enumerate_classes(s);

  CensusReport report;
  report.scenario = s;
  report.total_functions = *total;
  report.class_count = classes.size();

  std::vector<ClassBounds> bounds(classes.size());
  std::vector<char> certified(classes.size(), 1);
  parallel_for(classes.size(), options.threads, [&](std::size_t i) {
    const auto f = GameFunction::from_code(s, classes[i].representative);
    auto& b = bounds[i];
    b.representative = classes[i].representative;
    b.orbit_size = classes[i].orbit_size;
    b.classical = optimal_classical(f).value;
    const auto ns = optimal_ns(f, options.simplex);
    certified[i] = ns.certificate.ok();
    b.nosignaling = ns.value;
    if (s.players() == 3 && b.nosignaling > b.classical) b.decomposable = is_decomposable(ns.witness);
  });

  if (s.players() == 3) report.decomposable_count = 0;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    report.certificates_ok = report.certificates_ok && certified[i];
    const auto& b = bounds[i];
    if (!(b.nosignaling > b.classical)) continue;
    ++report.nontrivial_class_count;
    report.nontrivial_function_count += b.orbit_size;
    ++report.histogram_cl[b.classical];
    ++report.histogram_ns[b.nosignaling];
    ++report.histogram_abs_gap[b.nosignaling - b.classical];
    ++report.histogram_rel_gap[b.nosignaling / b.classical - Rational(1)];
    if (b.decomposable.value_or(false)) ++*report.decomposable_count;
  }
  report.classes = std::move(bounds);
  return report;
}

nlohmann::json fraction_json(const Rational& r) {
  return {{"num", r.numerator_string()}, {"den", r.denominator_string()}, {"decimal", r.to_decimal(9)}};
}

namespace {

nlohmann::json histogram_json(const Histogram& h) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [value, count] : h) rows.push_back({{"value", fraction_json(value)}, {"count", count}});
  return rows;
}

}  // namespace

nlohmann::json census_to_json(const CensusReport& r, bool include_classes) {
  nlohmann::json doc;
  doc["scenario"] = r.scenario.to_string();
  doc["total_functions"] = r.total_functions;
  doc["class_count"] = r.class_count;
  doc["nontrivial_class_count"] = r.nontrivial_class_count;
  doc["nontrivial_function_count"] = r.nontrivial_function_count;
  doc["histogram_cl"] = histogram_json(r.histogram_cl);
  doc["histogram_ns"] = histogram_json(r.histogram_ns);
  doc["histogram_abs_gap"] = histogram_json(r.histogram_abs_gap);
  doc["histogram_rel_gap"] = histogram_json(r.histogram_rel_gap);
  doc["decomposable_count"] = r.decomposable_count ? nlohmann::json(*r.decomposable_count) : nlohmann::json(nullptr);
  doc["certificates_ok"] = r.certificates_ok;
  if (include_classes) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : r.classes) {
      nlohmann::json row = {{"representative", c.representative},
                            {"orbit_size", c.orbit_size},
                            {"omega_cl", fraction_json(c.classical)},
                            {"omega_ns", fraction_json(c.nosignaling)}};
      if (c.decomposable) row["decomposable"] = *c.decomposable;
      rows.push_back(std::move(row));
    }
    doc["classes"] = std::move(rows);
  }
  return doc;
}

std::string census_to_csv(const CensusReport& r) {
  std::ostringstream out;
  out << "table,value,decimal,count\n";
  auto emit = [&](const char* table, const Histogram& h) {
    for (const auto& [value, count] : h) {
      out << table << ',' << value.to_string() << ',' << value.to_decimal(9) << ',' << count << '\n';
    }
  };
  emit("omega_cl", r.histogram_cl);
  emit("omega_ns", r.histogram_ns);
  emit("abs_gap", r.histogram_abs_gap);
  emit("rel_gap", r.histogram_rel_gap);
  return out.str();
}

}  // namespace idg
