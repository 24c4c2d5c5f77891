#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mfpc/solver.hpp"

namespace mfpc {

// Sign change of (p_cdma - p_noma) between two users of the sorted population.
struct Crossing {
  std::size_t below = 0;  // last index carrying the previous sign
  std::size_t above = 0;  // first index carrying the new sign
  double theta_below = 0.0;
  double theta_above = 0.0;
};

struct WelfareReport {
  double welfare_cdma = 0.0;
  double welfare_noma = 0.0;
  double jain_cdma = 0.0;
  double jain_noma = 0.0;
  std::vector<Crossing> crossings;
  double max_gap_violation = 0.0;
};

// Per-user equilibrium data rates, interference recomputed from the profile.
std::vector<double> equilibrium_rates(const EquilibriumResult& result, const Population& pop,
                                      const ProtocolParams& params);

// (1/N) sum_i utility(p(theta_i), theta_i, z(theta_i)).
double social_welfare(const EquilibriumResult& result, const Population& pop,
                      const ProtocolParams& params);

// (sum d)^2 / (N sum d^2); rates must be nonnegative with at least one > 0.
double jains_index(std::span<const double> rates);

// All strict sign changes of (p_cdma - p_noma) along the sorted population,
// with the bracketing gains. Zero entries extend the previous sign.
std::vector<Crossing> crossing_detect(const StrategyProfile& p_cdma,
                                      const StrategyProfile& p_noma, const Population& pop);

// max_i of |p_cdma(theta_i) - p_noma(theta_i)| - 2 alpha e_max m / theta_i,
// with m the empirical mean gain. Nonpositive for equilibrium profile pairs.
double high_gain_gap_check(const StrategyProfile& p_cdma, const StrategyProfile& p_noma,
                           const Population& pop, const ProtocolParams& params);

// Solves both protocols and returns welfare_noma - welfare_cdma.
double welfare_dominance_check(const Population& pop, const ProtocolParams& params,
                               const SolverConfig& cfg = {});

// Full two-protocol comparison used by the sweep runner.
WelfareReport compare_protocols(const Population& pop, const ProtocolParams& params,
                                const SolverConfig& cfg = {});

}  // namespace mfpc
