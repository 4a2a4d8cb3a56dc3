#include "idgames/generic.hpp"

#include "idgames/classical.hpp"
#include "idgames/error.hpp"
#include "idgames/parallel.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace idg {

ExactBox parity_box(const GameFunction& f) {
  const Scenario& s = f.scenario();
  if (s.outputs() != 2) throw Error(ErrorCode::kNonBinary, "parity box needs binary outputs");
  const std::int64_t support = std::int64_t(1) << (s.players() - 1);
  const Rational weight(1, support);
  auto parity = [&](Index y) {
    std::uint32_t p = 0;
    for (std::size_t k = 0; k < s.players(); ++k) p ^= s.output_of(y, k);
    return p;
  };
  ExactBox box(s);
  for (Index x = 0; x < s.joint_inputs(); ++x) {
    const auto target = parity(f(x));
    for (Index y = 0; y < s.joint_outputs(); ++y) {
      if (parity(y) == target) box.at(x, y) = weight;
    }
  }
  return box;
}

double binary_entropy(double p) {
  if (p < 0 || p > 1) throw Error(ErrorCode::kDomain, "probability outside [0,1]");
  auto term = [](double v) { return v <= 0 ? 0.0 : -v * std::log2(v); };
  return term(p) + term(1 - p);
}

double hstar(double omega, int n) {
  if (n < 1) throw Error(ErrorCode::kDomain, "hstar needs at least one player");
  return binary_entropy(omega) + (1 - omega) * std::log2(std::exp2(n) - 1);
}

CountingBound encoding_bound(int n, std::uint64_t m, double omega) {
  if (m < 1) throw Error(ErrorCode::kDomain, "encoding bound needs m >= 1");
  CountingBound b;
  b.n = n;
  b.m = m;
  b.omega = omega;
  b.hstar = hstar(omega, n);
  const double inputs = std::pow(static_cast<double>(m), n);
  b.log_total = n * inputs;
  b.mprime = static_cast<double>(m) * n + b.hstar * inputs;
  b.log_fraction_bound = b.mprime - b.log_total;
  return b;
}

std::vector<CountingBound> counting_curve(int n, double omega, std::uint64_t m_first, std::uint64_t m_last) {
  std::vector<CountingBound> curve;
  for (std::uint64_t m = m_first; m <= m_last; ++m) curve.push_back(encoding_bound(n, m, omega));
  return curve;
}

std::string counting_curve_csv(const std::vector<CountingBound>& curve) {
  std::ostringstream out;
  out.precision(12);
  out << "n,m,omega,hstar,mprime,log_total,log_fraction_bound\n";
  for (const auto& b : curve) {
    out << b.n << ',' << b.m << ',' << b.omega << ',' << b.hstar << ',' << b.mprime << ',' << b.log_total << ','
        << b.log_fraction_bound << '\n';
  }
  return out.str();
}

GapSample empirical_gap_sample(int n, std::uint32_t m, std::size_t sample_size, std::uint64_t seed,
                               const Rational& epsilon, unsigned threads) {
  if (n < 1 || m < 1) throw Error(ErrorCode::kDomain, "sample needs n >= 1 and m >= 1");
  const Scenario s = Scenario::uniform(static_cast<std::size_t>(n), m, 2);
  GapSample out;
  out.n = n;
  out.m = m;
  out.epsilon = epsilon;
  out.ns_floor = Rational(1, std::int64_t(1) << (n - 1));

  std::vector<Rational> values;
  if (sample_size == 0) {
    const auto count = GameFunction::function_count(s);
    if (!count || *count > (std::uint64_t(1) << 24)) throw Error(ErrorCode::kTooLarge, "function space too large to enumerate");
    out.exhaustive = true;
    values.resize(*count);
    parallel_for(values.size(), threads, [&](std::size_t i) {
      values[i] = optimal_classical(GameFunction::from_code(s, i)).value;
    });
  } else {
    // One generator per sample, seeded from (seed, index), so the result
    // does not depend on the thread count.
    values.resize(sample_size);
    parallel_for(sample_size, threads, [&](std::size_t i) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
      std::mt19937_64 rng(seq);
      std::uniform_int_distribution<Index> pick(0, s.joint_outputs() - 1);
      std::vector<Index> table(s.joint_inputs());
      for (auto& t : table) t = pick(rng);
      values[i] = optimal_classical(GameFunction(s, std::move(table))).value;
    });
  }
  out.samples = values.size();
  const Rational floor = Rational(1, std::int64_t(1) << n) + epsilon;
  double sum = 0;
  for (const auto& v : values) {
    ++out.classical[v];
    if (v <= floor) ++out.near_floor;
    if (v < out.ns_floor) ++out.parity_beats;
    sum += v.to_double();
  }
  out.mean_classical = sum / static_cast<double>(values.size());
  out.near_floor_fraction = static_cast<double>(out.near_floor) / static_cast<double>(out.samples);
  return out;
}

}  // namespace idg
