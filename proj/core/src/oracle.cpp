#include "mfpc/oracle.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "mfpc/util.hpp"

namespace mfpc::oracle {
namespace {

double grid_value(const ProtocolParams& params, std::size_t grid_points, std::size_t index) {
  if (index + 1 == grid_points) return params.e_max;
  const double step = (params.e_max - params.e_min) / static_cast<double>(grid_points - 1);
  return params.e_min + static_cast<double>(index) * step;
}

// First (smallest-power) grid argmax of the utility at (theta, z).
std::size_t grid_argmax(double theta, double z, const ProtocolParams& params,
                        std::size_t grid_points, std::size_t user_index) {
  std::size_t best = 0;
  double best_u = utility(grid_value(params, grid_points, 0), theta, z, params, user_index);
  for (std::size_t g = 1; g < grid_points; ++g) {
    const double u = utility(grid_value(params, grid_points, g), theta, z, params, user_index);
    if (u > best_u) {
      best_u = u;
      best = g;
    }
  }
  return best;
}

}  // namespace

StrategyProfile cdma_closed_form(const Population& pop, const ProtocolParams& params) {
  params.validate(pop.size());
  if (!params.scalar_beta())
    throw NonScalarBeta("cdma_closed_form requires a scalar power penalty");
  const double m_hat = empirical_mean_gain(pop);
  const double c = 1.0 / (params.beta.front() * std::numbers::ln2);
  const double z_star = (m_hat * c - params.n0) / (1.0 + params.alpha);
  const double w = params.alpha * z_star + params.n0;

  StrategyProfile profile;
  profile.powers.reserve(pop.size());
  for (double theta : pop.gains) {
    const double p = c - w / theta;
    if (!(p > params.e_min && p < params.e_max))
      throw TruncationBinds("closed form invalid: p*(" + format_double(theta) + ") = " +
                            format_double(p) + " is not interior to the power bounds");
    profile.powers.push_back(p);
  }
  return profile;
}

double brute_force_best_response(double theta, double z, const ProtocolParams& params,
                                 std::size_t grid_points, std::size_t user_index) {
  if (grid_points < 2) throw std::invalid_argument("grid_points must be >= 2");
  const std::size_t best = grid_argmax(theta, z, params, grid_points, user_index);
  return grid_value(params, grid_points, best);
}

StrategyProfile tiny_equilibrium_search(const Population& pop, const ProtocolParams& params,
                                        Protocol protocol, std::size_t grid_points) {
  const std::size_t n = pop.size();
  if (n == 0 || n > 4) throw std::invalid_argument("tiny_equilibrium_search requires 1 <= N <= 4");
  if (grid_points < 2 || grid_points > 200)
    throw std::invalid_argument("tiny_equilibrium_search requires 2 <= grid_points <= 200");
  params.validate(n);

  std::vector<std::size_t> combo(n, 0);
  std::vector<double> powers(n, params.e_min);
  StrategyProfile candidate;
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) powers[i] = grid_value(params, grid_points, combo[i]);
    candidate.powers = powers;
    const InterferenceProfile z = interference_profile(protocol, candidate, pop);
    bool fixed = true;
    for (std::size_t i = 0; i < n && fixed; ++i)
      fixed = grid_argmax(pop.gains[i], z.values[i], params, grid_points, i) == combo[i];
    if (fixed) return candidate;

    // odometer advance over the n-fold grid
    std::size_t d = 0;
    while (d < n && ++combo[d] == grid_points) combo[d++] = 0;
    if (d == n) break;
  }
  throw NoGridEquilibrium("no profile on the " + std::to_string(grid_points) +
                          "-point grid is a gridded best response to itself");
}

}  // namespace mfpc::oracle
