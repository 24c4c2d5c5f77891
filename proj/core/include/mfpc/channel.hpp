#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "mfpc/rng.hpp"

namespace mfpc {

// Squared channel gain theta = |h|^2, exponential with mean sigma^2:
// f(x) = exp(-x / sigma^2) / sigma^2 for x >= 0.
struct RayleighSquared {
  double sigma = 1.0;
};

// Gains uniform on [lo, hi], 0 < lo < hi.
struct BoundedUniform {
  double lo = 0.0;
  double hi = 1.0;
};

// Piecewise-linear density over a strictly increasing grid. The trapezoid
// integral of the density must be 1 within 1e-9.
struct Tabulated {
  std::vector<double> grid;
  std::vector<double> density;
};

class ChannelDistribution {
 public:
  ChannelDistribution() : ChannelDistribution(RayleighSquared{1.0}) {}
  ChannelDistribution(RayleighSquared d);   // NOLINT(google-explicit-constructor)
  ChannelDistribution(BoundedUniform d);    // NOLINT(google-explicit-constructor)
  ChannelDistribution(Tabulated d);         // NOLINT(google-explicit-constructor)

  // E[theta]. Closed form for the parametric kinds; per-segment exact
  // integration of the piecewise-linear density for Tabulated.
  double first_moment() const;

  // One draw via inverse CDF; a draw of exactly zero is redrawn.
  double sample(rng::SplitMix64& gen) const;

  std::string describe() const;

  const RayleighSquared* rayleigh() const { return std::get_if<RayleighSquared>(&kind_); }
  const BoundedUniform* uniform() const { return std::get_if<BoundedUniform>(&kind_); }
  const Tabulated* tabulated() const { return std::get_if<Tabulated>(&kind_); }

 private:
  std::variant<RayleighSquared, BoundedUniform, Tabulated> kind_;
  std::vector<double> cdf_;  // Tabulated only: cumulative trapezoid mass per grid node
};

// Two-column text (grid density), whitespace separated; '#' starts a comment.
ChannelDistribution load_tabulated(std::istream& in);
ChannelDistribution load_tabulated_file(const std::string& path);

// User identifiers theta_i, sorted ascending. The index alignment between
// gains, strategies and interference vectors is fixed once a population is
// built and never reshuffled downstream.
struct Population {
  std::vector<double> gains;
  std::uint64_t seed = 0;
  std::string source;

  std::size_t size() const { return gains.size(); }

  // Sorts (stable) and validates caller-supplied gains.
  static Population from_gains(std::vector<double> gains, std::string source = "explicit");
};

// n i.i.d. draws, sorted ascending; deterministic in (dist, n, seed).
Population sample_population(const ChannelDistribution& dist, std::size_t n, std::uint64_t seed);

double first_moment(const ChannelDistribution& dist);

// (1/N) sum theta_i.
double empirical_mean_gain(const Population& pop);

}  // namespace mfpc
