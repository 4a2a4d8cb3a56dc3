#include "idgames/verify.hpp"

#include "idgames/census.hpp"
#include "idgames/classical.hpp"
#include "idgames/error.hpp"
#include "idgames/evaluate.hpp"
#include "idgames/generic.hpp"
#include "idgames/named_games.hpp"
#include "idgames/nosignaling.hpp"
#include "idgames/quantum.hpp"
#include "idgames/symmetry.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

namespace idg {
namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string num(double v, int precision = 10) {
  std::ostringstream out;
  out << std::setprecision(precision) << v;
  return out.str();
}

template <class T>
std::string str(const T& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

std::string render(const Histogram& h, int digits) {
  std::string out = "{";
  for (const auto& [k, v] : h) {
    if (out.size() > 1) out += ", ";
    out += (digits > 0 ? k.to_decimal(digits) : k.to_string()) + ":" + std::to_string(v);
  }
  return out + "}";
}

class Suite {
public:
  explicit Suite(const VerifyOptions& o) : o_(o) {}

  bool wanted(int c) const { return o_.criteria.empty() || o_.criteria.count(c) > 0; }

  void add(int criterion, std::string name, std::string expected, std::string actual, std::string tol, bool passed,
           double seconds = 0, bool stochastic = false) {
    checks_.push_back({criterion, std::move(name), std::move(expected), std::move(actual), std::move(tol), passed,
                       stochastic, seconds});
  }

  // Runs body; an exception becomes a failed check.
  void guarded(int criterion, const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(criterion, name, "no error", std::string("error: ") + e.what(), "-", false);
    }
  }

  void exact(int c, const std::string& name, const std::string& expected, const std::string& actual, double s = 0) {
    add(c, name, expected, actual, "exact", expected == actual, s);
  }

  void near(int c, const std::string& name, double expected, double actual, double tol, double s = 0,
            bool stochastic = false) {
    add(c, name, num(expected), num(actual), num(tol, 3), std::abs(actual - expected) <= tol, s, stochastic);
  }

  void at_most(int c, const std::string& name, double bound, double actual, double s = 0, bool stochastic = false) {
    add(c, name, "<= " + num(bound), num(actual), "bound", actual <= bound, s, stochastic);
  }

  void time_limit(int c, const std::string& name, double limit, double seconds) {
    add(c, name + " runtime", "< " + num(limit, 4) + "s", num(seconds, 4) + "s", "time", seconds < limit, seconds);
  }

  const CensusReport& census(const Scenario& s, double* seconds = nullptr) {
    const auto key = s.to_string();
    auto it = census_.find(key);
    if (it == census_.end()) {
      const auto t0 = Clock::now();
      CensusOptions co;
      co.threads = o_.threads;
      co.simplex = o_.simplex;
      auto report = run_census(s, co);
      census_seconds_[key] = since(t0);
      it = census_.emplace(key, std::move(report)).first;
      certificates_ok_ = certificates_ok_ && it->second.certificates_ok;
      certified_calls_ += it->second.class_count;
    }
    if (seconds) *seconds = census_seconds_[key];
    return it->second;
  }

  NSResult ns(const GameFunction& f) {
    auto r = optimal_ns(f, o_.simplex);
    certificates_ok_ = certificates_ok_ && r.certificate.ok();
    ++certified_calls_;
    return r;
  }

  SeesawResult seesaw_run(const GameFunction& f, std::vector<int> dims, const CVector* fixed = nullptr,
                          std::size_t restarts = 0) {
    SeesawOptions so;
    so.dims = std::move(dims);
    so.restarts = restarts ? restarts : o_.restarts;
    so.seed = o_.seed;
    so.threads = o_.threads;
    auto r = fixed ? seesaw_fixed_state(f, *fixed, so) : seesaw(f, so);
    seesaw_monotone_ = seesaw_monotone_ && r.monotone;
    ++seesaw_runs_;
    return r;
  }

  void criterion1();
  void criterion2();
  void criterion3();
  void criterion4();
  void criterion5();
  void criterion6();
  void criterion7();
  void criterion8();
  void criterion9();
  void criterion10();

  std::vector<Check> take() { return std::move(checks_); }

private:
  const VerifyOptions& o_;
  std::vector<Check> checks_;
  std::map<std::string, CensusReport> census_;
  std::map<std::string, double> census_seconds_;
  bool certificates_ok_ = true;
  std::size_t certified_calls_ = 0;
  bool seesaw_monotone_ = true;
  std::size_t seesaw_runs_ = 0;
};

void Suite::criterion1() {
  guarded(1, "census 2,2,2", [&] {
    double t = 0;
    const auto& r = census(Scenario::uniform(2, 2, 2), &t);
    exact(1, "census 2,2,2 total functions", "256", str(r.total_functions));
    exact(1, "census 2,2,2 nontrivial classes", "0", str(r.nontrivial_class_count));
    time_limit(1, "census 2,2,2", 1.0, t);
  });
}

void Suite::criterion2() {
  guarded(2, "census 2,3,2", [&] {
    double t = 0;
    const auto& r = census(Scenario::uniform(2, 3, 2), &t);
    exact(2, "census 2,3,2 class count", "2162", str(r.class_count));
    exact(2, "census 2,3,2 nontrivial classes", "256", str(r.nontrivial_class_count));
    exact(2, "census 2,3,2 functions in nontrivial classes", "196992", str(r.nontrivial_function_count));
    exact(2, "census 2,3,2 nontrivial omega_cl values", "{4/9:" + str(r.nontrivial_class_count) + "}",
          render(r.histogram_cl, 0));
    exact(2, "census 2,3,2 nontrivial omega_ns values", "{1/2:" + str(r.nontrivial_class_count) + "}",
          render(r.histogram_ns, 0));
    time_limit(2, "census 2,3,2", 120.0, t);
  });
}

void Suite::criterion3() {
  guarded(3, "census 3,2,2", [&] {
    double t = 0;
    const auto& r = census(Scenario::uniform(3, 2, 2), &t);
    exact(3, "census 3,2,2 class count", "5876", str(r.class_count));
    exact(3, "census 3,2,2 nontrivial classes", "68", str(r.nontrivial_class_count));
    exact(3, "census 3,2,2 functions in nontrivial classes", "34176", str(r.nontrivial_function_count));
    exact(3, "census 3,2,2 omega_cl histogram", "{1/4:45, 3/8:23}", render(r.histogram_cl, 0));
    exact(3, "census 3,2,2 omega_ns histogram (6 digits)",
          "{0.275:1, 0.28125:1, 0.291667:11, 0.3:1, 0.3125:30, 0.333333:1, 0.4375:21, 0.5:2}",
          render(r.histogram_ns, 6));
    std::size_t total = 0;
    for (const auto& [k, v] : r.histogram_abs_gap) total += v;
    exact(3, "census 3,2,2 abs gap histogram total", "68", str(total));
    time_limit(3, "census 3,2,2", 600.0, t);
  });
}

void Suite::criterion4() {
  struct Expect {
    const char* game;
    const char* cl;
    const char* ns;  // nullptr: not asserted
  };
  const Expect expected[] = {
      {"addition", "3/8", "1/2"},           {"highest-sdp-3", "4/9", "1/2"}, {"partial-entanglement", "4/9", "1/2"},
      {"dimension-witness", "4/9", "1/2"}, {"symmetric-5", "2/5", nullptr}, {"tripartite", "3/8", "1/2"},
      {"class25", "1/4", "1/3"},
  };
  for (const auto& e : expected) {
    guarded(4, e.game, [&] {
      const auto t0 = Clock::now();
      const auto f = games::by_name(e.game);
      exact(4, std::string(e.game) + " omega_cl", e.cl, optimal_classical(f).value.to_string(), since(t0));
      if (e.ns) {
        const auto t1 = Clock::now();
        exact(4, std::string(e.game) + " omega_ns", e.ns, ns(f).value.to_string(), since(t1));
      }
    });
  }
}

void Suite::criterion5() {
  const double c = std::cos(std::numbers::pi / 8);
  guarded(5, "addition strategy", [&] {
    near(5, "addition strategy value", (2 + std::numbers::sqrt2) / 8, quantum_value(games::addition(), addition_strategy()),
         1e-12);
  });
  guarded(5, "tripartite strategy", [&] {
    near(5, "tripartite strategy value", c * c / 2, quantum_value(games::tripartite(), tripartite_strategy()), 1e-12);
  });
  guarded(5, "highest-sdp-3 strategy", [&] {
    near(5, "highest-sdp-3 strategy value", (1 + 1.5 + (std::numbers::sqrt2 + 2) / 2) / 9,
         quantum_value(games::highest_sdp_3(), highest_sdp_strategy()), 1e-12);
  });
}

void Suite::criterion6() {
  struct Target {
    const char* game;
    std::vector<int> dims;
    bool fixed_phi_plus;
    double value;
    double tol;  // < 0: upper bound check against value
  };
  const Target targets[] = {
      {"facet", {2, 2}, false, 0.403093, 1e-4},
      {"dimension-witness", {3, 3}, false, 4.1547005 / 9, 1e-4},
      {"dimension-witness", {2, 2}, false, 4.0 / 9 + 1e-6, -1},
      {"partial-entanglement", {2, 2}, false, 4.1224 / 9, 1e-4},
      {"partial-entanglement", {2, 2}, true, 4.0178 / 9, 1e-3},
      {"symmetric-5", {2, 2}, false, 10.2950849 / 25, 1e-4},
      {"class25", {2, 2, 2}, false, 0.260746 + 1e-6, -1},
  };
  for (const auto& t : targets) {
    std::string name = std::string("seesaw ") + t.game + " dims";
    for (int d : t.dims) name += " " + std::to_string(d);
    if (t.fixed_phi_plus) name += " fixed phi+";
    guarded(6, name, [&] {
      const auto t0 = Clock::now();
      const CVector state = phi_plus();
      const auto r = seesaw_run(games::by_name(t.game), t.dims, t.fixed_phi_plus ? &state : nullptr);
      const double s = since(t0);
      if (t.tol < 0) {
        at_most(6, name, t.value, r.value, s, true);
      } else {
        near(6, name, t.value, r.value, t.tol, s, true);
      }
      time_limit(6, name, 30.0, s);
    });
  }
}

void Suite::criterion7() {
  guarded(7, "facet check", [&] {
    const auto t0 = Clock::now();
    exact(7, "facet_check(facet)", "true", facet_check(games::facet()) ? "true" : "false", since(t0));
    const auto t1 = Clock::now();
    exact(7, "facet_check(highest-sdp-3)", "false", facet_check(games::highest_sdp_3()) ? "true" : "false", since(t1));
  });
}

void Suite::criterion8() {
  guarded(8, "class-25 box", [&] {
    const auto box = games::class25_box();
    exact(8, "class-25 box is no-signaling", "true", is_no_signaling(box) ? "true" : "false");
    exact(8, "class-25 box value", "1/3", winning_probability(games::class25(), box).to_string());
    exact(8, "class-25 box is extremal", "true", is_extremal(box) ? "true" : "false");
    exact(8, "class-25 box is decomposable", "false", is_decomposable(box) ? "true" : "false");
  });
}

void Suite::criterion9() {
  guarded(9, "parity box", [&] {
    std::mt19937_64 rng(o_.seed);
    for (int n : {2, 3}) {
      const auto s = Scenario::uniform(static_cast<std::size_t>(n), n == 2 ? 3 : 2, 2);
      std::uniform_int_distribution<Index> pick(0, s.joint_outputs() - 1);
      const Rational target(1, std::int64_t(1) << (n - 1));
      std::size_t hits = 0;
      for (int i = 0; i < 100; ++i) {
        std::vector<Index> table(s.joint_inputs());
        for (auto& v : table) v = pick(rng);
        const GameFunction f(s, std::move(table));
        if (winning_probability(f, parity_box(f)) == target) ++hits;
      }
      exact(9, "parity box wins 2^(1-n) on 100 random f, n=" + std::to_string(n), "100", std::to_string(hits));
    }
  });
  guarded(9, "hstar", [&] {
    double worst = 0;
    for (int n = 1; n <= 4; ++n) worst = std::max(worst, std::abs(hstar(std::exp2(-n), n) - n));
    near(9, "max |hstar(2^-n, n) - n| for n<=4", 0, worst, 1e-12);
  });
  guarded(9, "encoding bound", [&] {
    near(9, "log_fraction_bound(n=2, m=64, 3/8)", -97.0, encoding_bound(2, 64, 0.375).log_fraction_bound, 0.5);
    const auto curve = counting_curve(2, 0.375, 40, 200);
    std::size_t violations = 0;
    for (std::size_t i = 1; i < curve.size(); ++i) {
      if (!(curve[i].log_fraction_bound < curve[i - 1].log_fraction_bound)) ++violations;
    }
    exact(9, "log_fraction_bound(n=2, 3/8) strictly decreasing on m=40..200", "0 violations",
          std::to_string(violations) + " violations");
  });
}

void Suite::criterion10() {
  guarded(10, "symmetry invariance", [&] {
    const auto s = Scenario::uniform(2, 3, 2);
    std::mt19937_64 rng(o_.seed + 1);
    std::uniform_int_distribution<Index> pick(0, s.joint_outputs() - 1);
    std::size_t bad_cl = 0, bad_ns = 0, bad_q = 0;
    double worst_q = 0;
    for (int i = 0; i < 100; ++i) {
      std::vector<Index> table(s.joint_inputs());
      for (auto& v : table) v = pick(rng);
      const GameFunction f(s, std::move(table));
      const auto g = random_element(s, rng);
      const auto fg = apply(g, f);
      if (optimal_classical(f).value != optimal_classical(fg).value) ++bad_cl;
      if (ns(f).value != ns(fg).value) ++bad_ns;
      const auto qs = random_strategy(s, {2, 2}, rng);
      const double diff = std::abs(quantum_value(f, qs) - quantum_value(fg, transform_strategy(g, s, qs)));
      worst_q = std::max(worst_q, diff);
      if (diff > 1e-12) ++bad_q;
    }
    exact(10, "omega_cl invariant on 100 random (g,f)", "0 mismatches", std::to_string(bad_cl) + " mismatches");
    exact(10, "omega_ns invariant on 100 random (g,f)", "0 mismatches", std::to_string(bad_ns) + " mismatches");
    near(10, "quantum value covariant on 100 random (g,f)", 0, worst_q, 1e-12);
  });
  guarded(10, "bound ordering", [&] {
    for (const auto& g : games::all()) {
      const auto f = g.make();
      const auto cl = optimal_classical(f).value;
      const auto nsv = ns(f).value;
      const auto q = seesaw_run(f, std::vector<int>(f.scenario().players(), 2), nullptr, 20).value;
      const bool ok = cl.to_double() <= q + 1e-9 && q <= nsv.to_double() + 1e-9;
      add(10, "ordering cl <= q <= ns on " + g.name, cl.to_string() + " <= q <= " + nsv.to_string(), num(q), "1e-09",
          ok, 0, true);
    }
  });
  exact(10, "duality certificate on every optimal_ns call",
        "all " + std::to_string(certified_calls_) + " certified",
        certificates_ok_ ? "all " + std::to_string(certified_calls_) + " certified" : "certificate failure");
  exact(10, "seesaw monotone on every run", "all " + std::to_string(seesaw_runs_) + " monotone",
        seesaw_monotone_ ? "all " + std::to_string(seesaw_runs_) + " monotone" : "objective decreased");
}

}  // namespace

std::vector<Check> verify_paper(const VerifyOptions& options) {
  Suite suite(options);
  // Criterion 10 aggregates certificates and monotonicity over the runs of
  // the other criteria, so it goes last.
  const std::pair<int, void (Suite::*)()> steps[] = {
      {1, &Suite::criterion1}, {2, &Suite::criterion2}, {3, &Suite::criterion3}, {4, &Suite::criterion4},
      {5, &Suite::criterion5}, {6, &Suite::criterion6}, {7, &Suite::criterion7}, {8, &Suite::criterion8},
      {9, &Suite::criterion9}, {10, &Suite::criterion10},
  };
  for (const auto& [c, step] : steps) {
    if (suite.wanted(c)) (suite.*step)();
  }
  return suite.take();
}

std::string format_check(const Check& c) {
  std::ostringstream out;
  out << (c.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << c.criterion << "  " << c.name
      << "  expected=" << c.expected << " actual=" << c.actual << " tol=" << c.tolerance;
  if (c.seconds > 0) out << "  " << std::fixed << std::setprecision(2) << c.seconds << "s";
  if (c.stochastic) out << "  [seeded]";
  return out.str();
}

std::vector<CriterionSummary> summarize(const std::vector<Check>& checks) {
  std::map<int, CriterionSummary> by;
  for (const auto& c : checks) {
    auto& s = by[c.criterion];
    s.criterion = c.criterion;
    ++s.checks;
    if (!c.passed) ++s.failed;
  }
  std::vector<CriterionSummary> out;
  for (const auto& [k, v] : by) out.push_back(v);
  return out;
}

}  // namespace idg
