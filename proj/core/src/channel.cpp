#include "mfpc/channel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mfpc/rng.hpp"
#include "mfpc/util.hpp"

namespace mfpc {
namespace {

constexpr double kDensityIntegralTolerance = 1e-9;

void check_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

std::vector<double> build_cdf(const Tabulated& t) {
  std::vector<double> cdf(t.grid.size(), 0.0);
  for (std::size_t i = 1; i < t.grid.size(); ++i) {
    const double h = t.grid[i] - t.grid[i - 1];
    cdf[i] = cdf[i - 1] + 0.5 * (t.density[i] + t.density[i - 1]) * h;
  }
  return cdf;
}

}  // namespace

ChannelDistribution::ChannelDistribution(RayleighSquared d) : kind_(d) {
  check_finite(d.sigma, "sigma");
  if (d.sigma <= 0.0) throw std::invalid_argument("rayleigh_squared: sigma must be > 0");
}

ChannelDistribution::ChannelDistribution(BoundedUniform d) : kind_(d) {
  check_finite(d.lo, "lo");
  check_finite(d.hi, "hi");
  if (!(0.0 < d.lo && d.lo < d.hi))
    throw std::invalid_argument("bounded_uniform: requires 0 < lo < hi");
}

ChannelDistribution::ChannelDistribution(Tabulated d) : kind_(std::move(d)) {
  const auto& t = std::get<Tabulated>(kind_);
  if (t.grid.size() < 2 || t.grid.size() != t.density.size())
    throw std::invalid_argument("tabulated: need matching grid/density with >= 2 points");
  for (std::size_t i = 0; i < t.grid.size(); ++i) {
    check_finite(t.grid[i], "grid value");
    check_finite(t.density[i], "density value");
    if (t.grid[i] < 0.0) throw std::invalid_argument("tabulated: gains must be >= 0");
    if (t.density[i] < 0.0) throw std::invalid_argument("tabulated: density must be >= 0");
    if (i > 0 && t.grid[i] <= t.grid[i - 1])
      throw std::invalid_argument("tabulated: grid must be strictly increasing");
  }
  cdf_ = build_cdf(t);
  if (std::abs(cdf_.back() - 1.0) > kDensityIntegralTolerance)
    throw std::invalid_argument("tabulated: density integrates to " +
                                format_double(cdf_.back()) + ", expected 1 within 1e-9");
}

double ChannelDistribution::first_moment() const {
  if (const auto* r = rayleigh()) return r->sigma * r->sigma;
  if (const auto* u = uniform()) return 0.5 * (u->lo + u->hi);
  const auto& t = *tabulated();
  // Exact moment of the piecewise-linear density: on each cell with
  // f(x0 + s) = f0 + df s / h,
  //   integral of x f dx = h (x0 f0 + x0 df / 2 + f0 h / 2 + df h / 3).
  double m = 0.0;
  for (std::size_t i = 1; i < t.grid.size(); ++i) {
    const double x0 = t.grid[i - 1];
    const double h = t.grid[i] - x0;
    const double f0 = t.density[i - 1];
    const double df = t.density[i] - f0;
    m += h * (x0 * f0 + 0.5 * x0 * df + 0.5 * f0 * h + df * h / 3.0);
  }
  return m / cdf_.back();
}

double ChannelDistribution::sample(rng::SplitMix64& gen) const {
  for (;;) {
    const double u = gen.next_unit();
    double x = 0.0;
    if (const auto* r = rayleigh()) {
      x = -(r->sigma * r->sigma) * std::log1p(-u);
    } else if (const auto* b = uniform()) {
      x = b->lo + u * (b->hi - b->lo);
    } else {
      const auto& t = *tabulated();
      const double target = u * cdf_.back();
      const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), target);
      const std::size_t seg = it == cdf_.end() ? cdf_.size() - 1
                                               : static_cast<std::size_t>(it - cdf_.begin());
      const std::size_t j = seg == 0 ? 0 : seg - 1;
      const double h = t.grid[j + 1] - t.grid[j];
      const double f0 = t.density[j];
      const double a = 0.5 * (t.density[j + 1] - f0) / h;
      const double r = target - cdf_[j];
      // Solve a s^2 + f0 s = r for s in [0, h] in a cancellation-free form.
      const double denom = f0 + std::sqrt(f0 * f0 + 4.0 * a * r);
      const double s = denom > 0.0 ? 2.0 * r / denom : 0.0;
      x = t.grid[j] + s;
    }
    if (x != 0.0) return x;  // zero gains are excluded from the player set
  }
}

std::string ChannelDistribution::describe() const {
  if (const auto* r = rayleigh()) return "rayleigh_squared(sigma=" + format_double(r->sigma) + ")";
  if (const auto* u = uniform())
    return "bounded_uniform(" + format_double(u->lo) + "," + format_double(u->hi) + ")";
  const auto& t = *tabulated();
  std::uint64_t h = rng::fnv1a64("tabulated");
  for (std::size_t i = 0; i < t.grid.size(); ++i) {
    h = rng::mix64(h ^ rng::fnv1a64(format_double(t.grid[i])));
    h = rng::mix64(h ^ rng::fnv1a64(format_double(t.density[i])));
  }
  return "tabulated(points=" + std::to_string(t.grid.size()) + ",digest=" + to_hex(h) + ")";
}

ChannelDistribution load_tabulated(std::istream& in) {
  Tabulated t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto s = trim(line);
    if (s.empty()) continue;
    std::istringstream row{std::string(s)};
    double x = 0.0, f = 0.0;
    std::string tail;
    if (!(row >> x >> f) || (row >> tail))
      throw std::invalid_argument("tabulated density line " + std::to_string(lineno) +
                                  ": expected two columns");
    t.grid.push_back(x);
    t.density.push_back(f);
  }
  return ChannelDistribution(std::move(t));
}

ChannelDistribution load_tabulated_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open tabulated density file: " + path);
  return load_tabulated(in);
}

Population Population::from_gains(std::vector<double> gains, std::string source) {
  if (gains.empty()) throw std::invalid_argument("population must have at least one user");
  for (double g : gains) {
    if (!std::isfinite(g) || g <= 0.0)
      throw std::invalid_argument("population gains must be finite and > 0");
  }
  std::stable_sort(gains.begin(), gains.end());
  return Population{std::move(gains), 0, std::move(source)};
}

Population sample_population(const ChannelDistribution& dist, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("population size must be >= 1");
  auto gen = rng::stream(seed, "population");
  std::vector<double> gains(n);
  for (auto& g : gains) g = dist.sample(gen);
  std::stable_sort(gains.begin(), gains.end());
  return Population{std::move(gains), seed, dist.describe()};
}

double first_moment(const ChannelDistribution& dist) { return dist.first_moment(); }

double empirical_mean_gain(const Population& pop) {
  if (pop.gains.empty()) throw std::invalid_argument("population must have at least one user");
  double sum = 0.0;
  for (double g : pop.gains) sum += g;
  return sum / static_cast<double>(pop.gains.size());
}

}  // namespace mfpc
