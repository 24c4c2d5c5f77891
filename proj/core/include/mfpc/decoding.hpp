#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mfpc/channel.hpp"
#include "mfpc/game.hpp"

namespace mfpc {

// Strict SIC halts at the first decoding failure and drops the remaining
// users; Improved keeps attempting, leaving failed signals in the
// interference of everyone decoded after them.
enum class SicVariant { Strict, Improved };

// How per-user powers are chosen when gains are redrawn each trial: keep the
// profile as-is, or re-evaluate the equilibrium strategy rule at the fresh
// gain (best response to the interference map induced by the profile).
enum class PowerRule { FixedProfile, EquilibriumRule };

struct DecodingScenario {
  std::vector<double> rates;  // per-user target rate R_i > 0
  StrategyProfile profile;    // index-aligned to pop
  Population pop;
  ChannelDistribution channel;  // source of fresh gain draws
  ProtocolParams params;
  Protocol protocol = Protocol::Noma;  // strategy-rule interference model
  SicVariant variant = SicVariant::Improved;
  PowerRule power_rule = PowerRule::FixedProfile;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;

  void validate() const;
};

// 1 iff log2(1 + theta a / (alpha z + n0)) > rate.
int decode_indicator(double a, double theta, double z, const ProtocolParams& params, double rate);

// Fraction of fresh gain draws that fail to decode at fixed (a, z, rate).
// a == 0 with rate > 0 returns 1 exactly. Trials use per-trial derived
// streams, so the estimate is independent of execution schedule.
double outage_probability_mc(const ChannelDistribution& dist, double a, double z,
                             const ProtocolParams& params, double rate, std::int64_t trials,
                             std::uint64_t seed);

// 1 - exp(-(2^rate - 1)(alpha z + n0) / (a sigma^2)) for a > 0.
double outage_rayleigh_analytic(double sigma, double a, double z, const ProtocolParams& params,
                                double rate);

// One SIC pass over realized gains (index-aligned to the population), decoding
// in descending gain order. Residual interference is (alpha/N) times the power
// mass of users not yet attempted, plus failed users under Improved. Returns
// the per-user success indicators.
std::vector<int> sic_round(const DecodingScenario& scenario,
                           std::span<const double> realized_thetas);

// Per-user empirical success probability over scenario.trials rounds with
// fresh gain draws (stream index = trial index).
std::vector<double> mpr_success_rates(const DecodingScenario& scenario);

}  // namespace mfpc
