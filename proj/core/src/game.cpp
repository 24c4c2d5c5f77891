#include "mfpc/game.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mfpc {

const char* to_string(Protocol p) { return p == Protocol::Cdma ? "cdma" : "noma"; }

void ProtocolParams::validate_except_alpha_bound(std::size_t n_users) const {
  if (!std::isfinite(alpha) || alpha <= 0.0)
    throw std::invalid_argument("alpha must be finite and > 0");
  if (!std::isfinite(n0) || n0 <= 0.0) throw std::invalid_argument("n0 must be finite and > 0");
  if (!std::isfinite(e_min) || !std::isfinite(e_max) || e_min < 0.0 || e_min >= e_max)
    throw std::invalid_argument("power bounds must satisfy 0 <= e_min < e_max < inf");
  if (beta.empty()) throw std::invalid_argument("beta must have at least one entry");
  if (beta.size() != 1 && n_users != 0 && beta.size() != n_users)
    throw std::invalid_argument("per-user beta length must match the population");
  for (double b : beta) {
    if (!std::isfinite(b) || b <= 0.0)
      throw std::invalid_argument("beta entries must be finite and > 0");
  }
}

void ProtocolParams::validate(std::size_t n_users) const {
  validate_except_alpha_bound(n_users);
  if (alpha >= 1.0) throw InvalidAlpha("alpha >= 1 voids the contraction guarantee");
}

double project_power(double x, const ProtocolParams& params) {
  return std::min(params.e_max, std::max(params.e_min, x));
}

double interference_cdma(const StrategyProfile& profile, const Population& pop) {
  const std::size_t n = pop.size();
  if (profile.size() != n)
    throw std::invalid_argument("strategy profile not aligned to the population");
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) sum += profile.powers[j] * pop.gains[j];
  return sum / static_cast<double>(n);
}

InterferenceProfile interference_noma(const StrategyProfile& profile, const Population& pop) {
  const std::size_t n = pop.size();
  if (profile.size() != n)
    throw std::invalid_argument("strategy profile not aligned to the population");
  if (!std::is_sorted(pop.gains.begin(), pop.gains.end()))
    throw std::invalid_argument("population must be sorted ascending");

  // One prefix-sum pass; a run of equal gains shares the prefix accumulated
  // strictly before the run, so tied users do not interfere with each other.
  std::vector<double> z(n, 0.0);
  const double inv_n = 1.0 / static_cast<double>(n);
  double prefix = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t run_end = i;
    double run_sum = 0.0;
    while (run_end < n && pop.gains[run_end] == pop.gains[i]) {
      run_sum += profile.powers[run_end] * pop.gains[run_end];
      ++run_end;
    }
    for (std::size_t j = i; j < run_end; ++j) z[j] = prefix * inv_n;
    prefix += run_sum;
    i = run_end;
  }
  return InterferenceProfile{std::move(z), Protocol::Noma};
}

InterferenceProfile interference_profile(Protocol protocol, const StrategyProfile& profile,
                                         const Population& pop) {
  if (protocol == Protocol::Noma) return interference_noma(profile, pop);
  const double z = interference_cdma(profile, pop);
  return InterferenceProfile{std::vector<double>(pop.size(), z), Protocol::Cdma};
}

double utility(double a, double theta, double z, const ProtocolParams& params,
               std::size_t user_index) {
  const double denom = params.alpha * z + params.n0;
  return std::log2(1.0 + theta * a / denom) - params.beta_at(user_index) * a;
}

double best_response(double theta, double z, const ProtocolParams& params,
                     std::size_t user_index) {
  const double unconstrained =
      1.0 / (params.beta_at(user_index) * std::numbers::ln2) -
      (params.alpha * z + params.n0) / theta;
  return project_power(unconstrained, params);
}

double data_rate(double a, double theta, double z, const ProtocolParams& params) {
  return std::log2(1.0 + theta * a / (params.alpha * z + params.n0));
}

}  // namespace mfpc
