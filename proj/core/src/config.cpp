#include "mfpc/config.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "mfpc/rng.hpp"
#include "mfpc/util.hpp"

namespace mfpc {
namespace {

using KeyValues = std::map<std::string, std::string>;  // "section.key" -> raw value

KeyValues read_key_values(std::istream& in) {
  KeyValues kv;
  std::string line;
  std::string section;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ConfigError("line " + std::to_string(lineno) + ": bad section");
      section = std::string(trim(s.substr(1, s.size() - 2)));
      if (section.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty section");
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const auto key = trim(s.substr(0, eq));
    const auto value = trim(s.substr(eq + 1));
    if (section.empty() || key.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": key outside a section");
    const std::string full = section + "." + std::string(key);
    if (!kv.emplace(full, std::string(value)).second)
      throw ConfigError("duplicate key: " + full);
  }
  return kv;
}

class KeyReader {
 public:
  explicit KeyReader(KeyValues kv) : kv_(std::move(kv)) {}

  bool has(const std::string& key) const { return kv_.count(key) != 0; }

  std::string take(const std::string& key, const std::string& fallback) {
    const auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    const std::string v = it->second;
    kv_.erase(it);
    return v;
  }

  std::string require(const std::string& key) {
    const auto it = kv_.find(key);
    if (it == kv_.end()) throw ConfigError("missing required key: " + key);
    const std::string v = it->second;
    kv_.erase(it);
    return v;
  }

  double number(const std::string& key, double fallback) {
    const auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    return number_required(key);
  }

  double number_required(const std::string& key) {
    try {
      return parse_double(require(key));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(key + ": " + e.what());
    }
  }

  std::uint64_t unsigned_int(const std::string& key, std::uint64_t fallback) {
    const auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    try {
      return parse_uint(require(key));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(key + ": " + e.what());
    }
  }

  void finish() const {
    if (!kv_.empty()) throw ConfigError("unknown key: " + kv_.begin()->first);
  }

 private:
  KeyValues kv_;
};

ChannelDistribution parse_channel(KeyReader& r, const std::string& base_dir) {
  const std::string kind = r.take("channel.kind", "rayleigh_squared");
  try {
    if (kind == "rayleigh_squared")
      return RayleighSquared{r.number("channel.sigma", 1.0)};
    if (kind == "bounded_uniform")
      return BoundedUniform{r.number_required("channel.lo"), r.number_required("channel.hi")};
    if (kind == "tabulated") {
      const std::string table = r.require("channel.table");
      const std::filesystem::path p(table);
      return load_tabulated_file(p.is_absolute() ? p.string()
                                                 : (std::filesystem::path(base_dir) / p).string());
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("channel: ") + e.what());
  }
  throw ConfigError("channel.kind must be rayleigh_squared, bounded_uniform or tabulated");
}

std::vector<double> parse_double_list(const std::string& key, const std::string& raw) {
  std::vector<double> out;
  for (const auto& tok : split(raw, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(parse_double(tok));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(key + ": " + e.what());
    }
  }
  if (out.empty()) throw ConfigError(key + ": empty list");
  return out;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& key, const std::string& raw) {
  std::vector<std::uint64_t> out;
  for (const auto& tok : split(raw, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(parse_uint(tok));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(key + ": " + e.what());
    }
  }
  if (out.empty()) throw ConfigError(key + ": empty list");
  return out;
}

}  // namespace

Protocol parse_protocol(std::string_view s) {
  if (s == "cdma") return Protocol::Cdma;
  if (s == "noma") return Protocol::Noma;
  throw ConfigError("protocol must be cdma or noma, got '" + std::string(s) + "'");
}

SicVariant parse_sic_variant(std::string_view s) {
  if (s == "strict") return SicVariant::Strict;
  if (s == "improved") return SicVariant::Improved;
  throw ConfigError("variant must be strict or improved, got '" + std::string(s) + "'");
}

RunConfig parse_config(std::istream& in, const std::string& base_dir) {
  KeyReader r(read_key_values(in));
  RunConfig cfg;

  cfg.channel = parse_channel(r, base_dir);
  cfg.n_users = static_cast<std::size_t>(r.unsigned_int("channel.n", 1000));
  if (cfg.n_users == 0) throw ConfigError("channel.n must be >= 1");
  cfg.seed = r.unsigned_int("channel.seed", 1);

  cfg.params.alpha = r.number("protocol.alpha", 0.25);
  cfg.params.n0 = r.number("protocol.n0", 5.0);
  cfg.params.beta = {r.number("protocol.beta", 0.1)};
  cfg.params.e_min = r.number("protocol.e_min", 0.0);
  cfg.params.e_max = r.number("protocol.e_max", 150.0);
  cfg.protocol = parse_protocol(r.take("protocol.protocol", "cdma"));

  cfg.solver.tol = r.number("solver.tol", 1e-10);
  if (!(cfg.solver.tol > 0.0)) throw ConfigError("solver.tol must be > 0");
  cfg.solver.max_iter = static_cast<std::size_t>(r.unsigned_int("solver.max_iter", 10000));
  if (cfg.solver.max_iter < 1) throw ConfigError("solver.max_iter must be >= 1");
  const std::string init = r.take("solver.init", "midpoint");
  if (init == "midpoint") {
    cfg.solver.init = SolverConfig::Init::MidpointOfE;
  } else if (init.rfind("constant:", 0) == 0) {
    cfg.solver.init = SolverConfig::Init::Constant;
    try {
      cfg.solver.init_constant = parse_double(init.substr(9));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("solver.init: ") + e.what());
    }
  } else {
    throw ConfigError("solver.init must be midpoint or constant:<value>");
  }
  const std::string norm = r.take("solver.norm", "auto");
  if (norm == "auto") {
    cfg.solver.norm = ResidualNorm::Auto;
  } else if (norm == "weighted_l1") {
    cfg.solver.norm = ResidualNorm::WeightedL1;
  } else if (norm == "sup") {
    cfg.solver.norm = ResidualNorm::SupNorm;
  } else {
    throw ConfigError("solver.norm must be auto, weighted_l1 or sup");
  }

  cfg.sweep_betas = parse_double_list("sweep.betas", r.take("sweep.betas", "0.1,0.5,1.0,5.0"));
  cfg.sweep_seeds =
      parse_seed_list("sweep.seeds", r.take("sweep.seeds", "1,2,3,4,5,6,7,8,9,10"));

  cfg.decode_rate = r.number("decode.rate", 1.0);
  if (!(cfg.decode_rate > 0.0)) throw ConfigError("decode.rate must be > 0");
  const std::uint64_t trials = r.unsigned_int("decode.trials", 10000);
  if (trials < 1) throw ConfigError("decode.trials must be >= 1");
  cfg.decode_trials = static_cast<std::int64_t>(trials);
  cfg.decode_variant = parse_sic_variant(r.take("decode.variant", "improved"));

  r.finish();

  try {
    cfg.params.validate_except_alpha_bound();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("protocol: ") + e.what());
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  return parse_config(in, std::filesystem::path(path).parent_path().string());
}

std::string RunConfig::canonical() const {
  std::ostringstream out;
  out << "channel.n=" << n_users << '\n';
  out << "channel.seed=" << seed << '\n';
  out << "channel.source=" << channel.describe() << '\n';
  out << "decode.rate=" << format_double(decode_rate) << '\n';
  out << "decode.trials=" << decode_trials << '\n';
  out << "decode.variant=" << (decode_variant == SicVariant::Strict ? "strict" : "improved")
      << '\n';
  out << "protocol.alpha=" << format_double(params.alpha) << '\n';
  out << "protocol.beta=";
  for (std::size_t i = 0; i < params.beta.size(); ++i)
    out << (i ? "," : "") << format_double(params.beta[i]);
  out << '\n';
  out << "protocol.e_max=" << format_double(params.e_max) << '\n';
  out << "protocol.e_min=" << format_double(params.e_min) << '\n';
  out << "protocol.n0=" << format_double(params.n0) << '\n';
  out << "protocol.protocol=" << to_string(protocol) << '\n';
  out << "solver.init=";
  if (solver.init == SolverConfig::Init::MidpointOfE)
    out << "midpoint";
  else if (solver.init == SolverConfig::Init::Constant)
    out << "constant:" << format_double(solver.init_constant);
  else
    out << "provided";
  out << '\n';
  out << "solver.max_iter=" << solver.max_iter << '\n';
  out << "solver.norm="
      << (solver.norm == ResidualNorm::Auto
              ? "auto"
              : (solver.norm == ResidualNorm::WeightedL1 ? "weighted_l1" : "sup"))
      << '\n';
  out << "solver.tol=" << format_double(solver.tol) << '\n';
  out << "sweep.betas=";
  for (std::size_t i = 0; i < sweep_betas.size(); ++i)
    out << (i ? "," : "") << format_double(sweep_betas[i]);
  out << '\n';
  out << "sweep.seeds=";
  for (std::size_t i = 0; i < sweep_seeds.size(); ++i) out << (i ? "," : "") << sweep_seeds[i];
  out << '\n';
  return out.str();
}

std::string RunConfig::digest() const { return to_hex(rng::fnv1a64(canonical())); }

}  // namespace mfpc
