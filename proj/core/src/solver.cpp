#include "mfpc/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace mfpc {
namespace {

StrategyProfile initial_profile(const SolverConfig& cfg, const Population& pop,
                                const ProtocolParams& params) {
  const std::size_t n = pop.size();
  switch (cfg.init) {
    case SolverConfig::Init::MidpointOfE:
      return StrategyProfile{std::vector<double>(n, 0.5 * (params.e_min + params.e_max))};
    case SolverConfig::Init::Constant:
      return StrategyProfile{std::vector<double>(n, project_power(cfg.init_constant, params))};
    case SolverConfig::Init::Provided: {
      if (!cfg.init_profile || cfg.init_profile->size() != n)
        throw std::invalid_argument("provided initial profile not aligned to the population");
      StrategyProfile p = *cfg.init_profile;
      for (auto& a : p.powers) a = project_power(a, params);
      return p;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

ResidualNorm resolve_norm(ResidualNorm norm, Protocol protocol) {
  if (norm != ResidualNorm::Auto) return norm;
  return protocol == Protocol::Cdma ? ResidualNorm::WeightedL1 : ResidualNorm::SupNorm;
}

double residual_norm(const std::vector<double>& delta, const Population& pop, ResidualNorm norm) {
  const std::size_t n = pop.size();
  if (delta.size() != n) throw std::invalid_argument("delta not aligned to the population");
  if (norm == ResidualNorm::Auto)
    throw std::invalid_argument("residual_norm requires a resolved norm");
  if (norm == ResidualNorm::SupNorm) {
    double worst = 0.0;
    for (double d : delta) worst = std::max(worst, std::abs(d));
    return worst;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += std::abs(delta[i]) * pop.gains[i];
  return sum / static_cast<double>(n);
}

EquilibriumResult solve(const Population& pop, const ProtocolParams& params, Protocol protocol,
                        const SolverConfig& cfg) {
  const std::size_t n = pop.size();
  if (n == 0) throw std::invalid_argument("population must have at least one user");
  params.validate_except_alpha_bound(n);
  if (params.alpha >= 1.0 && !cfg.allow_alpha_ge_one)
    throw InvalidAlpha("alpha >= 1: convergence is not guaranteed (set the override to iterate)");
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  if (cfg.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");

  const ResidualNorm norm = resolve_norm(cfg.norm, protocol);
  StrategyProfile current = initial_profile(cfg, pop, params);

  EquilibriumResult out;
  out.protocol = protocol;
  out.residuals.reserve(64);

  std::vector<double> next(n);
  std::vector<double> delta(n);
  for (std::size_t k = 0; k < cfg.max_iter; ++k) {
    if (protocol == Protocol::Cdma) {
      const double z = interference_cdma(current, pop);
      for (std::size_t i = 0; i < n; ++i) next[i] = best_response(pop.gains[i], z, params, i);
    } else {
      const InterferenceProfile z = interference_noma(current, pop);
      for (std::size_t i = 0; i < n; ++i)
        next[i] = best_response(pop.gains[i], z.values[i], params, i);
    }
    for (std::size_t i = 0; i < n; ++i) delta[i] = next[i] - current.powers[i];
    const double r = residual_norm(delta, pop, norm);
    out.residuals.push_back(r);
    current.powers.swap(next);
    if (r <= cfg.tol) {
      out.converged = true;
      break;
    }
  }

  out.iterations = out.residuals.size();
  out.interference = interference_profile(protocol, current, pop);
  out.profile = std::move(current);
  return out;
}

double verify_fixed_point(const EquilibriumResult& result, const Population& pop,
                          const ProtocolParams& params) {
  const std::size_t n = pop.size();
  if (result.profile.size() != n)
    throw std::invalid_argument("result profile not aligned to the population");
  const InterferenceProfile z = interference_profile(result.protocol, result.profile, pop);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double br = best_response(pop.gains[i], z.values[i], params, i);
    worst = std::max(worst, std::abs(result.profile.powers[i] - br));
  }
  return worst;
}

}  // namespace mfpc
