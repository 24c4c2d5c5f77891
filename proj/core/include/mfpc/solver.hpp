#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mfpc/game.hpp"

namespace mfpc {

enum class ResidualNorm { WeightedL1, SupNorm, Auto };

// Auto picks the norm in which the synchronous update contracts with modulus
// alpha: gain-weighted L1 for CDMA, sup for NOMA.
ResidualNorm resolve_norm(ResidualNorm norm, Protocol protocol);

struct SolverConfig {
  enum class Init { MidpointOfE, Constant, Provided };

  double tol = 1e-10;
  std::size_t max_iter = 10000;
  Init init = Init::MidpointOfE;
  double init_constant = 0.0;
  std::optional<StrategyProfile> init_profile;
  ResidualNorm norm = ResidualNorm::Auto;
  bool allow_alpha_ge_one = false;  // iterate anyway, without the contraction guarantee
};

struct EquilibriumResult {
  StrategyProfile profile;
  InterferenceProfile interference;  // induced by the final profile
  std::vector<double> residuals;     // one norm value per iteration
  std::size_t iterations = 0;
  Protocol protocol = Protocol::Cdma;
  bool converged = false;
};

// Synchronous best-response iteration: every user responds to the same
// previous-round snapshot, and the whole profile is replaced at once. Stops
// when the residual norm of the update is <= cfg.tol; hitting max_iter
// returns the partial result with converged == false.
EquilibriumResult solve(const Population& pop, const ProtocolParams& params, Protocol protocol,
                        const SolverConfig& cfg = {});

// norm must already be resolved (not Auto).
double residual_norm(const std::vector<double>& delta, const Population& pop, ResidualNorm norm);

// max_i |p(theta_i) - best_response(theta_i, z(theta_i))| with z recomputed
// from the result profile.
double verify_fixed_point(const EquilibriumResult& result, const Population& pop,
                          const ProtocolParams& params);

}  // namespace mfpc
