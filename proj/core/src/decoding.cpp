#include "mfpc/decoding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "mfpc/parallel.hpp"
#include "mfpc/rng.hpp"

namespace mfpc {
namespace {

// Powers used against realized gains: either the profile as stored, or the
// equilibrium strategy rule (best response to the interference map the
// profile induces) re-evaluated at each fresh gain.
std::vector<double> trial_powers(const DecodingScenario& sc,
                                 std::span<const double> realized) {
  const std::size_t n = sc.pop.size();
  if (sc.power_rule == PowerRule::FixedProfile) return sc.profile.powers;

  std::vector<double> powers(n);
  if (sc.protocol == Protocol::Cdma) {
    const double z = interference_cdma(sc.profile, sc.pop);
    for (std::size_t i = 0; i < n; ++i) powers[i] = best_response(realized[i], z, sc.params, i);
    return powers;
  }
  // NOMA: z(theta) = (1/N) sum over {j : theta_j < theta} of a_j theta_j,
  // evaluated against the scenario's sorted population.
  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t j = 0; j < n; ++j)
    prefix[j + 1] = prefix[j] + sc.profile.powers[j] * sc.pop.gains[j];
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = std::lower_bound(sc.pop.gains.begin(), sc.pop.gains.end(), realized[i]);
    const double z = prefix[static_cast<std::size_t>(it - sc.pop.gains.begin())] * inv_n;
    powers[i] = best_response(realized[i], z, sc.params, i);
  }
  return powers;
}

}  // namespace

void DecodingScenario::validate() const {
  const std::size_t n = pop.size();
  if (profile.size() != n || rates.size() != n)
    throw std::invalid_argument("scenario rates/profile not aligned to the population");
  for (double r : rates) {
    if (!(r > 0.0)) throw std::invalid_argument("target rates must be > 0");
  }
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  params.validate_except_alpha_bound(n);
}

int decode_indicator(double a, double theta, double z, const ProtocolParams& params,
                     double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("target rate must be > 0");
  return data_rate(a, theta, z, params) > rate ? 1 : 0;
}

double outage_probability_mc(const ChannelDistribution& dist, double a, double z,
                             const ProtocolParams& params, double rate, std::int64_t trials,
                             std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!(rate > 0.0)) throw std::invalid_argument("target rate must be > 0");
  if (a == 0.0) return 1.0;

  const std::size_t n = static_cast<std::size_t>(trials);
  std::vector<std::int64_t> failures(parallel_chunk_count(n), 0);
  parallel_for(n, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    std::int64_t local = 0;
    for (std::size_t t = begin; t < end; ++t) {
      auto gen = rng::stream(seed, "outage-trial", t);
      const double theta = dist.sample(gen);
      local += decode_indicator(a, theta, z, params, rate) == 0 ? 1 : 0;
    }
    failures[chunk] = local;
  });
  const std::int64_t total = std::accumulate(failures.begin(), failures.end(), std::int64_t{0});
  return static_cast<double>(total) / static_cast<double>(trials);
}

double outage_rayleigh_analytic(double sigma, double a, double z, const ProtocolParams& params,
                                double rate) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
  if (!(rate > 0.0)) throw std::invalid_argument("target rate must be > 0");
  if (a == 0.0) return 1.0;
  const double threshold = (std::exp2(rate) - 1.0) * (params.alpha * z + params.n0) / a;
  return 1.0 - std::exp(-threshold / (sigma * sigma));
}

std::vector<int> sic_round(const DecodingScenario& scenario,
                           std::span<const double> realized_thetas) {
  const std::size_t n = scenario.pop.size();
  if (realized_thetas.size() != n)
    throw std::invalid_argument("realized gains not aligned to the population");
  const std::vector<double> powers = trial_powers(scenario, realized_thetas);

  // Decode in descending realized gain, ties broken by lower index.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return realized_thetas[a] > realized_thetas[b];
  });

  double pending = 0.0;  // power mass of users not yet attempted
  for (std::size_t j = 0; j < n; ++j) pending += powers[j] * realized_thetas[j];
  double failed_mass = 0.0;
  const double inv_n = 1.0 / static_cast<double>(n);

  std::vector<int> gamma(n, 0);
  for (std::size_t k : order) {
    const double own = powers[k] * realized_thetas[k];
    pending -= own;
    double interference = pending;
    if (scenario.variant == SicVariant::Improved) interference += failed_mass;
    const int ok = decode_indicator(powers[k], realized_thetas[k], interference * inv_n,
                                    scenario.params, scenario.rates[k]);
    if (ok) {
      gamma[k] = 1;  // cancelled from the waveform
    } else if (scenario.variant == SicVariant::Strict) {
      break;  // halt: everyone after the first failure stays failed
    } else {
      failed_mass += own;  // untouched signal keeps interfering downstream
    }
  }
  return gamma;
}

std::vector<double> mpr_success_rates(const DecodingScenario& scenario) {
  scenario.validate();
  const std::size_t n = scenario.pop.size();
  const std::size_t trials = static_cast<std::size_t>(scenario.trials);

  std::vector<std::vector<std::int64_t>> counts(parallel_chunk_count(trials),
                                                std::vector<std::int64_t>(n, 0));
  parallel_for(trials, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    auto& local = counts[chunk];
    std::vector<double> realized(n);
    for (std::size_t t = begin; t < end; ++t) {
      auto gen = rng::stream(scenario.seed, "decode-trial", t);
      for (auto& theta : realized) theta = scenario.channel.sample(gen);
      const std::vector<int> gamma = sic_round(scenario, realized);
      for (std::size_t i = 0; i < n; ++i) local[i] += gamma[i];
    }
  });

  std::vector<double> rates(n, 0.0);
  for (const auto& local : counts)
    for (std::size_t i = 0; i < n; ++i) rates[i] += static_cast<double>(local[i]);
  for (auto& r : rates) r /= static_cast<double>(trials);
  return rates;
}

}  // namespace mfpc
