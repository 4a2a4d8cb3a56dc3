// idgames: bounds, censuses and seesaw runs for identity games.
//
// Machine-readable results go to --out (or stdout); progress and human
// notes go to stderr. Failures print "E_<CODE>: message" and exit nonzero.

#include "idgames/census.hpp"
#include "idgames/classical.hpp"
#include "idgames/error.hpp"
#include "idgames/game_io.hpp"
#include "idgames/generic.hpp"
#include "idgames/named_games.hpp"
#include "idgames/nosignaling.hpp"
#include "idgames/parallel.hpp"
#include "idgames/quantum.hpp"
#include "idgames/strategy_io.hpp"
#include "idgames/symmetry.hpp"
#include "idgames/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using idg::Error;
using idg::ErrorCode;
using nlohmann::json;

struct RunConfig {
  std::string scenario;
  std::string game;
  std::vector<int> dims;
  std::size_t restarts = 20;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  unsigned threads = 0;  // 0: IDGAMES_THREADS, else hardware
  std::string out;
  std::string format = "json";
};

unsigned thread_budget(const RunConfig& c) {
  if (c.threads > 0) return c.threads;
  if (const char* env = std::getenv("IDGAMES_THREADS")) {
    try {
      const unsigned long v = std::stoul(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::kRange, std::string("IDGAMES_THREADS must be a positive integer, got '") + env + "'");
  }
  return idg::hardware_threads();
}

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (c.format == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw Error(ErrorCode::kRange, "format '" + c.format + "' not supported here (use " + list + ")");
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Error(ErrorCode::kIo, "cannot write " + c.out);
  f << text;
  if (!f) throw Error(ErrorCode::kIo, "write failed for " + c.out);
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

idg::GameFunction load_game(const std::string& spec) {
  if (spec.empty()) throw Error(ErrorCode::kRange, "--game is required");
  if (std::filesystem::exists(spec)) return idg::load_game_file(spec);
  for (const auto& g : idg::games::all()) {
    if (g.name == spec) return g.make();
  }
  throw Error(ErrorCode::kIo, "no game file or bundled game named '" + spec + "'");
}

std::vector<int> dims_for(const RunConfig& c, const idg::Scenario& s) {
  if (c.dims.empty()) return std::vector<int>(s.players(), 2);
  if (c.dims.size() != s.players()) throw Error(ErrorCode::kRange, "--dims needs one dimension per player");
  return c.dims;
}

int cmd_enumerate(const RunConfig& c) {
  require_format(c, {"json", "csv"});
  const auto s = idg::Scenario::parse(c.scenario);
  const auto classes = idg::enumerate_classes(s);
  std::cerr << s.to_string() << ": " << classes.size() << " classes\n";
  if (c.format == "csv") {
    std::ostringstream out;
    out << "representative,orbit_size\n";
    for (const auto& k : classes) out << k.representative << ',' << k.orbit_size << '\n';
    emit(c, out.str());
    return 0;
  }
  json rows = json::array();
  for (const auto& k : classes) rows.push_back({{"representative", k.representative}, {"orbit_size", k.orbit_size}});
  emit(c, dump({{"scenario", s.to_string()},
                {"group_order", idg::group_order(s)},
                {"total_functions", *idg::GameFunction::function_count(s)},
                {"class_count", classes.size()},
                {"classes", rows}}));
  return 0;
}

int cmd_bounds(const RunConfig& c) {
  require_format(c, {"json", "text"});
  const auto f = load_game(c.game);
  const auto& s = f.scenario();
  const auto cl = idg::optimal_classical(f);
  const auto ns = idg::optimal_ns(f);
  json doc = {{"scenario", s.to_string()},
              {"omega_cl", idg::fraction_json(cl.value)},
              {"classical_witness", cl.witness.maps()},
              {"omega_ns", idg::fraction_json(ns.value)},
              {"ns_certified", ns.certificate.ok()}};
  json witness = json::array();
  for (const auto& p : ns.witness.entries()) witness.push_back(p.to_string());
  doc["ns_witness"] = witness;
  std::string qline;
  if (s.outputs() == 2) {
    idg::SeesawOptions o;
    o.dims = dims_for(c, s);
    o.restarts = c.restarts;
    o.seed = c.seed;
    o.tol = c.tol;
    o.threads = thread_budget(c);
    const auto q = idg::seesaw(f, o);
    doc["omega_q_lower"] = q.value;
    doc["quantum_dims"] = o.dims;
    qline = "omega_q_lower " + std::to_string(q.value) + "\n";
  } else {
    std::cerr << "note: seesaw needs binary outputs; omega_q_lower omitted\n";
  }
  if (c.format == "text") {
    emit(c, "omega_cl " + cl.value.to_string() + "\nomega_ns " + ns.value.to_string() + "\n" + qline);
  } else {
    emit(c, dump(doc));
  }
  return 0;
}

int cmd_census(const RunConfig& c, bool with_classes) {
  require_format(c, {"json", "csv"});
  const auto s = idg::Scenario::parse(c.scenario);
  idg::CensusOptions o;
  o.threads = thread_budget(c);
  const auto r = idg::run_census(s, o);
  std::cerr << s.to_string() << ": " << r.class_count << " classes, " << r.nontrivial_class_count
            << " nontrivial\n";
  emit(c, c.format == "csv" ? idg::census_to_csv(r) : dump(idg::census_to_json(r, with_classes)));
  return 0;
}

int cmd_quantum(const RunConfig& c, const std::string& fixed) {
  require_format(c, {"json", "text"});
  const auto f = load_game(c.game);
  idg::SeesawOptions o;
  o.dims = dims_for(c, f.scenario());
  o.restarts = c.restarts;
  o.seed = c.seed;
  o.tol = c.tol;
  o.threads = thread_budget(c);
  idg::SeesawResult r;
  if (fixed.empty()) {
    r = idg::seesaw(f, o);
  } else if (fixed == "phi+") {
    if (o.dims.size() != 2 || o.dims[0] != o.dims[1]) throw Error(ErrorCode::kRange, "phi+ needs two equal dimensions");
    r = idg::seesaw_fixed_state(f, idg::phi_plus(o.dims[0]), o);
  } else if (fixed == "product") {
    r = idg::seesaw_fixed_state(f, idg::product_state(o.dims), o);
  } else {
    throw Error(ErrorCode::kRange, "--fixed-state must be phi+ or product");
  }
  if (!r.converged) std::cerr << "warning: some restarts hit the iteration cap\n";
  if (c.format == "text") {
    std::ostringstream out;
    out.precision(12);
    out << r.value << '\n';
    emit(c, out.str());
    return 0;
  }
  emit(c, dump({{"value", r.value},
                {"dims", o.dims},
                {"restarts", o.restarts},
                {"seed", o.seed},
                {"best_restart", r.restart},
                {"iterations", r.iterations},
                {"converged", r.converged},
                {"monotone", r.monotone},
                {"restart_values", r.restart_values},
                {"strategy", idg::strategy_to_json(r.strategy)}}));
  return 0;
}

int cmd_counting(const RunConfig& c, int players, double omega, std::uint64_t m_first, std::uint64_t m_last,
                 bool empirical, std::size_t sample, const std::string& epsilon) {
  require_format(c, {"json", "csv"});
  if (m_first > m_last) throw Error(ErrorCode::kRange, "--m-from must not exceed --m-to");
  if (empirical) {
    if (c.format != "json") throw Error(ErrorCode::kRange, "sampled output is JSON only");
    const auto eps = idg::Rational::parse(epsilon);
    json rows = json::array();
    for (std::uint64_t m = std::max<std::uint64_t>(m_first, 1); m <= m_last; ++m) {
      const auto g = idg::empirical_gap_sample(players, static_cast<std::uint32_t>(m), sample, c.seed, eps,
                                               thread_budget(c));
      json hist = json::array();
      for (const auto& [v, n] : g.classical) hist.push_back({{"omega_cl", idg::fraction_json(v)}, {"count", n}});
      rows.push_back({{"m", m},
                      {"samples", g.samples},
                      {"exhaustive", g.exhaustive},
                      {"near_floor", g.near_floor},
                      {"near_floor_fraction", g.near_floor_fraction},
                      {"parity_beats", g.parity_beats},
                      {"mean_omega_cl", g.mean_classical},
                      {"histogram", hist}});
    }
    emit(c, dump({{"players", players}, {"epsilon", idg::fraction_json(eps)}, {"seed", c.seed}, {"samples", rows}}));
    return 0;
  }
  const auto curve = idg::counting_curve(players, omega, m_first, m_last);
  if (c.format == "csv") {
    emit(c, idg::counting_curve_csv(curve));
    return 0;
  }
  json rows = json::array();
  for (const auto& b : curve) {
    rows.push_back({{"m", b.m},
                    {"hstar", b.hstar},
                    {"mprime", b.mprime},
                    {"log_total", b.log_total},
                    {"log_fraction_bound", b.log_fraction_bound}});
  }
  emit(c, dump({{"players", players}, {"omega", omega}, {"curve", rows}}));
  return 0;
}

int cmd_verify(const RunConfig& c, const std::vector<int>& criteria) {
  require_format(c, {"json", "text"});
  idg::VerifyOptions o;
  o.criteria.insert(criteria.begin(), criteria.end());
  o.threads = thread_budget(c);
  o.seed = c.seed;
  const auto checks = idg::verify_paper(o);
  const auto summary = idg::summarize(checks);
  bool ok = true;
  for (const auto& s : summary) ok = ok && s.passed();
  for (const auto& k : checks) std::cerr << idg::format_check(k) << '\n';
  if (c.format == "text") {
    std::ostringstream out;
    for (const auto& s : summary) {
      out << (s.passed() ? "PASS" : "FAIL") << " criterion " << s.criterion << '\n';
    }
    emit(c, out.str());
  } else {
    json rows = json::array();
    for (const auto& k : checks) {
      rows.push_back({{"criterion", k.criterion},
                      {"name", k.name},
                      {"expected", k.expected},
                      {"actual", k.actual},
                      {"tolerance", k.tolerance},
                      {"passed", k.passed},
                      {"stochastic", k.stochastic}});
    }
    json crit = json::array();
    for (const auto& s : summary) {
      crit.push_back({{"criterion", s.criterion}, {"checks", s.checks}, {"failed", s.failed}, {"passed", s.passed()}});
    }
    emit(c, dump({{"passed", ok}, {"criteria", crit}, {"checks", rows}}));
  }
  return ok ? 0 : 1;
}

int cmd_games(const RunConfig& c) {
  if (c.out.empty()) {
    for (const auto& g : idg::games::all()) std::cout << g.name << '\n';
    return 0;
  }
  std::filesystem::create_directories(c.out);
  for (const auto& g : idg::games::all()) {
    auto doc = idg::game_to_json(g.make());
    doc["name"] = g.name;
    const auto path = std::filesystem::path(c.out) / (g.name + ".json");
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::kIo, "cannot write " + path.string());
    f << doc.dump() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Identity games: classical, no-signaling and quantum winning probabilities"};
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", c.out, "output file (default stdout)");
    sub->add_option("--format", c.format, "json (structured), csv or text (text-table), per command");
    sub->add_option("--threads", c.threads, "thread budget (default IDGAMES_THREADS or all cores)");
  };
  auto scenario = [&](CLI::App* sub) {
    sub->add_option("--scenario", c.scenario, "n,m_i,m_o")->required();
  };
  auto quantum = [&](CLI::App* sub) {
    sub->add_option("--dims", c.dims, "per-player dimensions (default 2 each)")->delimiter(',');
    sub->add_option("--restarts", c.restarts, "seesaw restarts");
    sub->add_option("--seed", c.seed, "seed");
    sub->add_option("--tol", c.tol, "seesaw improvement tolerance");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list equivalence classes");
  scenario(enumerate);
  common(enumerate);

  auto* bounds = app.add_subcommand("bounds", "exact classical and no-signaling values plus a seesaw lower bound");
  bounds->add_option("--game", c.game, "game file or bundled game name")->required();
  quantum(bounds);
  common(bounds);

  bool with_classes = false;
  auto* census = app.add_subcommand("census", "class census with value histograms");
  scenario(census);
  census->add_flag("--classes", with_classes, "include per-class rows in JSON output");
  common(census);

  std::string fixed;
  auto* qcmd = app.add_subcommand("quantum", "seesaw lower bound on the quantum value");
  qcmd->add_option("--game", c.game, "game file or bundled game name")->required();
  qcmd->add_option("--fixed-state", fixed, "hold the state fixed: phi+ or product");
  quantum(qcmd);
  common(qcmd);

  int players = 2;
  double omega = 0.375;
  std::uint64_t m_first = 2, m_last = 64;
  std::size_t sample = 0;
  std::string epsilon = "1/16";
  auto* counting = app.add_subcommand("counting", "encoding bound curve, or sampled classical values with --sample");
  counting->add_option("--players", players, "number of players");
  counting->add_option("--omega", omega, "classical success level");
  counting->add_option("--m-from", m_first, "first m");
  counting->add_option("--m-to", m_last, "last m");
  bool exhaustive = false;
  auto* sample_opt = counting->add_option("--sample", sample, "sample this many functions per m");
  counting->add_flag("--exhaustive", exhaustive, "classical values of every function at each m")->excludes(sample_opt);
  counting->add_option("--epsilon", epsilon, "near-floor margin as a fraction");
  counting->add_option("--seed", c.seed, "seed");
  common(counting);

  std::vector<int> criteria;
  auto* verify = app.add_subcommand("verify-paper", "run the acceptance checks");
  verify->add_option("--criteria", criteria, "subset of criteria 1..10")->delimiter(',');
  verify->add_option("--seed", c.seed, "seed");
  common(verify);

  auto* games = app.add_subcommand("games", "list bundled games, or write them as JSON into --out");
  games->add_option("--out", c.out, "directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "E_USAGE: " << e.what() << '\n';
    return 2;
  }

  if (c.format == "structured") c.format = "json";
  if (c.format == "text-table") c.format = "text";

  try {
    if (*enumerate) return cmd_enumerate(c);
    if (*bounds) return cmd_bounds(c);
    if (*census) return cmd_census(c, with_classes);
    if (*qcmd) return cmd_quantum(c, fixed);
    if (*counting) return cmd_counting(c, players, omega, m_first, m_last, exhaustive || sample > 0, sample, epsilon);
    if (*verify) return cmd_verify(c, criteria);
    if (*games) return cmd_games(c);
  } catch (const Error& e) {
    std::cerr << idg::error_code_name(e.code()) << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "E_INTERNAL: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
