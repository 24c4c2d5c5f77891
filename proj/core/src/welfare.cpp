#include "mfpc/welfare.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mfpc {

std::vector<double> equilibrium_rates(const EquilibriumResult& result, const Population& pop,
                                      const ProtocolParams& params) {
  const std::size_t n = pop.size();
  if (result.profile.size() != n)
    throw std::invalid_argument("result profile not aligned to the population");
  const InterferenceProfile z = interference_profile(result.protocol, result.profile, pop);
  std::vector<double> rates(n);
  for (std::size_t i = 0; i < n; ++i)
    rates[i] = data_rate(result.profile.powers[i], pop.gains[i], z.values[i], params);
  return rates;
}

double social_welfare(const EquilibriumResult& result, const Population& pop,
                      const ProtocolParams& params) {
  const std::size_t n = pop.size();
  if (result.profile.size() != n)
    throw std::invalid_argument("result profile not aligned to the population");
  const InterferenceProfile z = interference_profile(result.protocol, result.profile, pop);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    sum += utility(result.profile.powers[i], pop.gains[i], z.values[i], params, i);
  return sum / static_cast<double>(n);
}

double jains_index(std::span<const double> rates) {
  if (rates.empty()) throw std::invalid_argument("jains_index needs at least one rate");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double d : rates) {
    if (!(d >= 0.0)) throw std::invalid_argument("jains_index requires nonnegative rates");
    sum += d;
    sum_sq += d * d;
  }
  if (sum_sq == 0.0) throw std::invalid_argument("jains_index undefined for all-zero rates");
  return sum * sum / (static_cast<double>(rates.size()) * sum_sq);
}

std::vector<Crossing> crossing_detect(const StrategyProfile& p_cdma,
                                      const StrategyProfile& p_noma, const Population& pop) {
  const std::size_t n = pop.size();
  if (p_cdma.size() != n || p_noma.size() != n)
    throw std::invalid_argument("profiles not aligned to the population");
  std::vector<Crossing> out;
  int last_sign = 0;
  std::size_t last_idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = p_cdma.powers[i] - p_noma.powers[i];
    const int sign = d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
    if (sign == 0) continue;
    if (last_sign != 0 && sign != last_sign)
      out.push_back(Crossing{last_idx, i, pop.gains[last_idx], pop.gains[i]});
    last_sign = sign;
    last_idx = i;
  }
  return out;
}

double high_gain_gap_check(const StrategyProfile& p_cdma, const StrategyProfile& p_noma,
                           const Population& pop, const ProtocolParams& params) {
  const std::size_t n = pop.size();
  if (p_cdma.size() != n || p_noma.size() != n)
    throw std::invalid_argument("profiles not aligned to the population");
  const double m_hat = empirical_mean_gain(pop);
  const double bound_scale = 2.0 * params.alpha * params.e_max * m_hat;
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double gap = std::abs(p_cdma.powers[i] - p_noma.powers[i]);
    worst = std::max(worst, gap - bound_scale / pop.gains[i]);
  }
  return worst;
}

double welfare_dominance_check(const Population& pop, const ProtocolParams& params,
                               const SolverConfig& cfg) {
  const EquilibriumResult cdma = solve(pop, params, Protocol::Cdma, cfg);
  const EquilibriumResult noma = solve(pop, params, Protocol::Noma, cfg);
  return social_welfare(noma, pop, params) - social_welfare(cdma, pop, params);
}

WelfareReport compare_protocols(const Population& pop, const ProtocolParams& params,
                                const SolverConfig& cfg) {
  const EquilibriumResult cdma = solve(pop, params, Protocol::Cdma, cfg);
  const EquilibriumResult noma = solve(pop, params, Protocol::Noma, cfg);
  WelfareReport report;
  report.welfare_cdma = social_welfare(cdma, pop, params);
  report.welfare_noma = social_welfare(noma, pop, params);
  report.jain_cdma = jains_index(equilibrium_rates(cdma, pop, params));
  report.jain_noma = jains_index(equilibrium_rates(noma, pop, params));
  report.crossings = crossing_detect(cdma.profile, noma.profile, pop);
  report.max_gap_violation = high_gain_gap_check(cdma.profile, noma.profile, pop, params);
  return report;
}

}  // namespace mfpc
