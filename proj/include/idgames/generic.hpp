#pragma once

#include "idgames/box.hpp"
#include "idgames/census.hpp"
#include "idgames/game.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace idg {

// Uniform over outputs whose parity matches the parity of f(x); wins with
// probability 2^(1-n) on every input. Binary outputs only.
ExactBox parity_box(const GameFunction& f);

double binary_entropy(double p);
// Largest entropy of a 2^n-letter variable with one letter pinned at omega:
// h(omega) + (1 - omega) log2(2^n - 1).
double hstar(double omega, int n);

struct CountingBound {
  int n = 0;
  std::uint64_t m = 0;
  double omega = 0;
  double hstar = 0;
  double mprime = 0;              // m n + hstar m^n
  double log_total = 0;           // n m^n
  double log_fraction_bound = 0;  // mprime - log_total
};

CountingBound encoding_bound(int n, std::uint64_t m, double omega);
std::vector<CountingBound> counting_curve(int n, double omega, std::uint64_t m_first, std::uint64_t m_last);
std::string counting_curve_csv(const std::vector<CountingBound>& curve);

struct GapSample {
  int n = 0;
  std::uint32_t m = 0;
  std::size_t samples = 0;
  bool exhaustive = false;
  Rational epsilon;
  Histogram classical;            // omega_cl -> count
  std::size_t near_floor = 0;     // omega_cl <= 2^-n + epsilon
  double near_floor_fraction = 0;
  Rational ns_floor;              // 2^(1-n), met by the parity box
  std::size_t parity_beats = 0;   // omega_cl < ns_floor
  double mean_classical = 0;
};

// Uniformly sampled functions at (n, m, 2) with exact classical optima.
// sample_size == 0 enumerates the whole space instead.
GapSample empirical_gap_sample(int n, std::uint32_t m, std::size_t sample_size, std::uint64_t seed,
                               const Rational& epsilon, unsigned threads = 1);

}  // namespace idg
