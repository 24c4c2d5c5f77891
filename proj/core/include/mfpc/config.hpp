#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mfpc/channel.hpp"
#include "mfpc/decoding.hpp"
#include "mfpc/solver.hpp"

namespace mfpc {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Effective run configuration. Parsed from flat key=value text with
// [channel] [protocol] [solver] [sweep] [decode] sections; CLI overrides are
// applied on top, then canonical() and digest() describe the result.
struct RunConfig {
  ChannelDistribution channel;
  std::size_t n_users = 1000;
  std::uint64_t seed = 1;

  ProtocolParams params;
  Protocol protocol = Protocol::Cdma;
  SolverConfig solver;

  std::vector<double> sweep_betas;
  std::vector<std::uint64_t> sweep_seeds;

  double decode_rate = 1.0;
  std::int64_t decode_trials = 10000;
  SicVariant decode_variant = SicVariant::Improved;

  // Sorted section.key=value dump of every effective field.
  std::string canonical() const;
  // fnv1a64 of canonical(), as 16 hex digits.
  std::string digest() const;
};

// base_dir resolves relative table paths in [channel].
RunConfig parse_config(std::istream& in, const std::string& base_dir = ".");
RunConfig load_config_file(const std::string& path);

Protocol parse_protocol(std::string_view s);
SicVariant parse_sic_variant(std::string_view s);

}  // namespace mfpc
