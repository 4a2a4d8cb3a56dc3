#include "idgames/symmetry.hpp"

#include "idgames/error.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace idg {
namespace {

constexpr std::size_t kMaxEngineEntries = std::size_t(1) << 23;

std::vector<std::vector<std::uint32_t>> all_permutations(std::uint32_t m) {
  std::vector<std::uint32_t> p(m);
  std::iota(p.begin(), p.end(), 0U);
  std::vector<std::vector<std::uint32_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::uint64_t factorial(std::uint64_t m) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= m; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / i) throw Error(ErrorCode::kTooLarge, "factorial overflow");
    r *= i;
  }
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
    throw Error(ErrorCode::kTooLarge, "group order overflows 64 bits");
  }
  return a * b;
}

bool is_permutation_of(const std::vector<std::uint32_t>& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto v : p) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<std::uint32_t> invert(const std::vector<std::uint32_t>& p) {
  std::vector<std::uint32_t> inv(p.size());
  for (std::uint32_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

const OrbitEngine& engine_for(const Scenario& s) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<OrbitEngine>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[s.to_string()];
  if (!slot) slot = std::make_unique<OrbitEngine>(s);
  return *slot;
}

}  // namespace

RelabellingElement RelabellingElement::identity(const Scenario& s) {
  RelabellingElement g;
  for (std::size_t k = 0; k < s.players(); ++k) {
    g.player_perm.push_back(static_cast<std::uint32_t>(k));
    std::vector<std::uint32_t> id_in(s.inputs(k));
    std::iota(id_in.begin(), id_in.end(), 0U);
    g.input_perms.push_back(id_in);
    std::vector<std::uint32_t> id_out(s.outputs());
    std::iota(id_out.begin(), id_out.end(), 0U);
    g.output_maps.emplace_back(s.inputs(k), id_out);
  }
  return g;
}

void RelabellingElement::validate(const Scenario& s) const {
  const std::size_t n = s.players();
  if (!is_permutation_of(player_perm, n)) throw Error(ErrorCode::kDomain, "player map is not a permutation");
  if (input_perms.size() != n || output_maps.size() != n) throw Error(ErrorCode::kScenarioMismatch, "element shape");
  for (std::size_t k = 0; k < n; ++k) {
    if (s.inputs(player_perm[k]) != s.inputs(k)) {
      throw Error(ErrorCode::kDomain, "player permutation exchanges players with different input counts");
    }
    if (!is_permutation_of(input_perms[k], s.inputs(k))) {
      throw Error(ErrorCode::kDomain, "input relabelling is not a permutation");
    }
    if (output_maps[k].size() != s.inputs(k)) throw Error(ErrorCode::kScenarioMismatch, "output map shape");
    for (const auto& tau : output_maps[k]) {
      if (!is_permutation_of(tau, s.outputs())) throw Error(ErrorCode::kDomain, "output map is not a bijection");
    }
  }
}

RelabellingElement compose(const RelabellingElement& second, const RelabellingElement& first) {
  const std::size_t n = first.player_perm.size();
  RelabellingElement g;
  g.player_perm.resize(n);
  g.input_perms.resize(n);
  g.output_maps.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto j = first.player_perm[k];
    g.player_perm[k] = second.player_perm[j];
    const auto m = first.input_perms[k].size();
    g.input_perms[k].resize(m);
    g.output_maps[k].resize(m);
    for (std::size_t x = 0; x < m; ++x) {
      const auto x1 = first.input_perms[k][x];
      g.input_perms[k][x] = second.input_perms[j][x1];
      const auto& tau1 = first.output_maps[k][x];
      const auto& tau2 = second.output_maps[j][x1];
      g.output_maps[k][x].resize(tau1.size());
      for (std::size_t y = 0; y < tau1.size(); ++y) g.output_maps[k][x][y] = tau2[tau1[y]];
    }
  }
  return g;
}

RelabellingElement inverse(const RelabellingElement& g) {
  const std::size_t n = g.player_perm.size();
  RelabellingElement inv;
  inv.player_perm = invert(g.player_perm);
  inv.input_perms.resize(n);
  inv.output_maps.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto j = g.player_perm[k];
    inv.input_perms[j] = invert(g.input_perms[k]);
    inv.output_maps[j].resize(g.input_perms[k].size());
    for (std::size_t x = 0; x < g.input_perms[k].size(); ++x) {
      inv.output_maps[j][g.input_perms[k][x]] = invert(g.output_maps[k][x]);
    }
  }
  return inv;
}

RelabellingElement random_element(const Scenario& s, std::mt19937_64& rng) {
  RelabellingElement g = RelabellingElement::identity(s);
  // Shuffle players within blocks of equal input count.
  for (std::size_t k = s.players(); k-- > 1;) {
    std::vector<std::size_t> same;
    for (std::size_t j = 0; j <= k; ++j) {
      if (s.inputs(j) == s.inputs(k)) same.push_back(j);
    }
    const auto pick = same[std::uniform_int_distribution<std::size_t>(0, same.size() - 1)(rng)];
    std::swap(g.player_perm[k], g.player_perm[pick]);
  }
  for (std::size_t k = 0; k < s.players(); ++k) {
    std::shuffle(g.input_perms[k].begin(), g.input_perms[k].end(), rng);
    for (auto& tau : g.output_maps[k]) std::shuffle(tau.begin(), tau.end(), rng);
  }
  return g;
}

GameFunction apply(const RelabellingElement& g, const GameFunction& f) {
  const auto& s = f.scenario();
  g.validate(s);
  const std::size_t n = s.players();
  std::vector<Index> table(s.joint_inputs());
  std::vector<std::uint32_t> xp(n), yp(n);
  for (Index x = 0; x < s.joint_inputs(); ++x) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto xk = s.input_of(x, k);
      const auto yk = f.output(x, k);
      xp[g.player_perm[k]] = g.input_perms[k][xk];
      yp[g.player_perm[k]] = g.output_maps[k][xk][yk];
    }
    table[s.encode_input(xp)] = s.encode_output(yp);
  }
  return GameFunction(s, std::move(table));
}

std::uint64_t group_order(const Scenario& s) {
  if (!s.symmetric()) throw Error(ErrorCode::kDomain, "group order is defined for equal input counts");
  std::uint64_t order = factorial(s.players());
  const std::uint64_t per_output = factorial(s.outputs());
  for (std::size_t k = 0; k < s.players(); ++k) {
    order = checked_mul(order, factorial(s.inputs(k)));
    for (std::uint32_t x = 0; x < s.inputs(k); ++x) order = checked_mul(order, per_output);
  }
  return order;
}

RelabellingElement group_element(const Scenario& s, std::uint64_t index) {
  const std::uint64_t order = group_order(s);
  if (index >= order) throw Error(ErrorCode::kRange, "group element index out of range");
  const auto player_perms = all_permutations(static_cast<std::uint32_t>(s.players()));
  const auto input_perms = all_permutations(s.inputs(0));
  const auto output_perms = all_permutations(s.outputs());

  RelabellingElement g;
  g.player_perm = player_perms[index % player_perms.size()];
  index /= player_perms.size();
  for (std::size_t k = 0; k < s.players(); ++k) {
    g.input_perms.push_back(input_perms[index % input_perms.size()]);
    index /= input_perms.size();
    auto& maps = g.output_maps.emplace_back();
    for (std::uint32_t x = 0; x < s.inputs(k); ++x) {
      maps.push_back(output_perms[index % output_perms.size()]);
      index /= output_perms.size();
    }
  }
  return g;
}

OrbitEngine::OrbitEngine(const Scenario& s)
    : scenario_(s),
      order_(group_order(s)),
      inputs_(s.joint_inputs()),
      outputs_(s.joint_outputs()) {
  if (!GameFunction::function_count(s)) throw Error(ErrorCode::kTooLarge, "function space exceeds 64-bit codes");
  if (order_ > kMaxEngineEntries / (inputs_ * outputs_)) {
    throw Error(ErrorCode::kTooLarge, "group too large for explicit orbits at scenario " + s.to_string());
  }
  std::vector<Index> weight(inputs_);
  Index w = 1;
  for (auto& v : weight) {
    v = w;
    w *= outputs_;
  }
  contribution_.resize(order_ * inputs_ * outputs_);
  const std::size_t n = s.players();
  std::vector<std::uint32_t> xp(n), yp(n);
  for (std::uint64_t e = 0; e < order_; ++e) {
    const auto g = group_element(s, e);
    for (Index x = 0; x < inputs_; ++x) {
      for (std::size_t k = 0; k < n; ++k) xp[g.player_perm[k]] = g.input_perms[k][s.input_of(x, k)];
      const Index target = s.encode_input(xp);
      for (Index y = 0; y < outputs_; ++y) {
        for (std::size_t k = 0; k < n; ++k) {
          yp[g.player_perm[k]] = g.output_maps[k][s.input_of(x, k)][s.output_of(y, k)];
        }
        contribution_[(e * inputs_ + x) * outputs_ + y] = s.encode_output(yp) * weight[target];
      }
    }
  }
}

Index OrbitEngine::apply(std::uint64_t element, const Index* table) const {
  const Index* row = contribution_.data() + element * inputs_ * outputs_;
  Index code = 0;
  for (std::size_t x = 0; x < inputs_; ++x, row += outputs_) code += row[table[x]];
  return code;
}

std::vector<Index> OrbitEngine::orbit_codes(const GameFunction& f) const {
  require_same_scenario(scenario_, f.scenario(), "orbit");
  std::vector<Index> codes(order_);
  for (std::uint64_t e = 0; e < order_; ++e) codes[e] = apply(e, f.table().data());
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

std::vector<GameFunction> orbit(const GameFunction& f) {
  const auto& engine = engine_for(f.scenario());
  std::vector<GameFunction> out;
  for (Index c : engine.orbit_codes(f)) out.push_back(GameFunction::from_code(f.scenario(), c));
  return out;
}

GameFunction canonical_form(const GameFunction& f) {
  const auto& engine = engine_for(f.scenario());
  Index best = std::numeric_limits<Index>::max();
  for (std::uint64_t e = 0; e < engine.order(); ++e) best = std::min(best, engine.apply(e, f.table().data()));
  return GameFunction::from_code(f.scenario(), best);
}

std::vector<EquivalenceClass> enumerate_classes(const Scenario& s) {
  const auto count = GameFunction::function_count(s);
  if (!count || *count > (Index(1) << 32)) {
    throw Error(ErrorCode::kTooLarge, "function space of " + s.to_string() + " exceeds the 2^32 census bitmap");
  }
  const auto& engine = engine_for(s);
  const Index total = *count;
  std::vector<std::uint64_t> visited((total + 63) / 64, 0);
  std::vector<Index> table(s.joint_inputs(), 0);
  std::vector<EquivalenceClass> classes;

  for (Index code = 0; code < total; ++code) {
    if (visited[code >> 6] >> (code & 63) & 1) continue;
    Index rest = code;
    for (auto& entry : table) {
      entry = rest % s.joint_outputs();
      rest /= s.joint_outputs();
    }
    std::uint64_t size = 0;
    for (std::uint64_t e = 0; e < engine.order(); ++e) {
      const Index c = engine.apply(e, table.data());
      auto& word = visited[c >> 6];
      const std::uint64_t bit = std::uint64_t(1) << (c & 63);
      if (!(word & bit)) {
        word |= bit;
        ++size;
      }
    }
    classes.push_back({code, size});
  }
  return classes;
}

}  // namespace idg
