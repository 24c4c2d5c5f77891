#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "mfpc/channel.hpp"

namespace mfpc {

enum class Protocol { Cdma, Noma };

const char* to_string(Protocol p);

// alpha >= 1 voids the contraction guarantee of the best-response update.
class InvalidAlpha : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProtocolParams {
  double alpha = 0.25;            // signature cross-correlation factor N/n_s
  double n0 = 5.0;                // noise power
  std::vector<double> beta{0.1};  // power penalty; a single entry is shared by all users
  double e_min = 0.0;             // transmit power bounds
  double e_max = 150.0;

  bool scalar_beta() const { return beta.size() == 1; }
  double beta_at(std::size_t i) const { return beta.size() == 1 ? beta.front() : beta[i]; }

  // Throws std::invalid_argument on malformed fields, InvalidAlpha when
  // alpha >= 1. n_users == 0 skips the per-user beta length check.
  void validate(std::size_t n_users = 0) const;
  void validate_except_alpha_bound(std::size_t n_users = 0) const;
};

// Per-user transmit powers, index-aligned to a Population.
struct StrategyProfile {
  std::vector<double> powers;

  std::size_t size() const { return powers.size(); }
};

// Per-user mean-field interference z(theta_i). Under CDMA every entry is the
// same population average; under NOMA entries are nondecreasing along the
// sorted population and the lowest-gain user faces zero.
struct InterferenceProfile {
  std::vector<double> values;
  Protocol protocol = Protocol::Cdma;
};

// min(e_max, max(e_min, x)); idempotent.
double project_power(double x, const ProtocolParams& params);

// (1/N) sum_j a_j theta_j, self included.
double interference_cdma(const StrategyProfile& profile, const Population& pop);

// z_i = (1/N) sum over {j : theta_j < theta_i} of a_j theta_j. Strict
// inequality: users with equal gain do not interfere with each other.
InterferenceProfile interference_noma(const StrategyProfile& profile, const Population& pop);

InterferenceProfile interference_profile(Protocol protocol, const StrategyProfile& profile,
                                         const Population& pop);

// log2(1 + theta a / (alpha z + n0)) - beta_i a.
double utility(double a, double theta, double z, const ProtocolParams& params,
               std::size_t user_index = 0);

// Unique maximizer of the utility over [e_min, e_max]:
// project(1 / (beta_i ln 2) - (alpha z + n0) / theta).
double best_response(double theta, double z, const ProtocolParams& params,
                     std::size_t user_index = 0);

// log2(1 + theta a / (alpha z + n0)).
double data_rate(double a, double theta, double z, const ProtocolParams& params);

}  // namespace mfpc
