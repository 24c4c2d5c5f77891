#pragma once

#include <cstddef>
#include <stdexcept>

#include "mfpc/solver.hpp"

namespace mfpc::oracle {

// The interior closed form is only valid when no user would be clamped;
// refusing beats silently fabricating a wrong reference value.
class TruncationBinds : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonScalarBeta : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoGridEquilibrium : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite-population CDMA equilibrium in closed form. With m = mean gain:
//   z* = (m / (beta ln 2) - n0) / (1 + alpha)
//   p*(theta_i) = 1 / (beta ln 2) - (alpha z* + n0) / theta_i
// Throws TruncationBinds if any p*(theta_i) falls outside the open interval
// (e_min, e_max), and NonScalarBeta for per-user penalties.
StrategyProfile cdma_closed_form(const Population& pop, const ProtocolParams& params);

// Argmax of the utility over a uniform grid of [e_min, e_max] with
// grid_points nodes; ties break toward smaller power.
double brute_force_best_response(double theta, double z, const ProtocolParams& params,
                                 std::size_t grid_points, std::size_t user_index = 0);

// Exhaustive search (N <= 4, grid_points <= 200) for a profile in which every
// user's gridded action is a gridded best response to the interference it
// induces. Returns the first such profile; throws NoGridEquilibrium when the
// grid is too coarse to hold one.
StrategyProfile tiny_equilibrium_search(const Population& pop, const ProtocolParams& params,
                                        Protocol protocol, std::size_t grid_points);

}  // namespace mfpc::oracle
