#include "acute/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "acute/energy.hpp"
#include "acute/parallel.hpp"
#include "acute/rng.hpp"

namespace acute {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kBreakpointTol = 1e-14;

double wrap_2pi(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0.0 ? a + kTwoPi : a;
}

std::vector<double> point_angles(const PointConfiguration& config) {
  if (config.dim() != 1)
    throw Error(ErrorKind::WrongDimension, "quadrant discrepancy is defined on S^1");
  std::vector<double> angles(config.n());
  for (std::size_t i = 0; i < config.n(); ++i) {
    const auto z = config.point(i);
    angles[i] = std::atan2(z[1], z[0]);
  }
  return angles;
}

// strict membership z in Q(psi): acute line-angle distance < pi/4
bool in_quadrant(double psi, double point_angle) {
  double d = std::fmod(std::abs(psi - point_angle), std::numbers::pi);
  d = std::min(d, std::numbers::pi - d);
  return d < kQuarterPi;
}

int direct_count(double psi, const std::vector<double>& angles) {
  int c = 0;
  for (double a : angles) c += in_quadrant(psi, a) ? 1 : 0;
  return c;
}

}  // namespace

double quadrant_intersection(std::span<const double> y, std::span<const double> z) {
  if (y.size() != 2 || z.size() != 2)
    throw Error(ErrorKind::WrongDimension, "quadrant intersection is defined on S^1");
  return 0.5 - std::acos(std::abs(clamp_dot(y, z))) / std::numbers::pi;
}

double discrepancy_closed_form(const DiscreteMeasure& mu) {
  if (mu.dim() != 1)
    throw Error(ErrorKind::WrongDimension, "quadrant discrepancy is defined on S^1");
  return 0.25 - measure_energy(mu, Potential::acute()) / std::numbers::pi;
}

SweepBreakpoints quadrant_sweep(const PointConfiguration& config) {
  const std::vector<double> angles = point_angles(config);

  // Each point switches the indicator at phi +- pi/4 and phi + pi +- pi/4:
  // +1 where an inside-interval opens, -1 where one closes.
  struct Event {
    double angle;
    int delta;
  };
  std::vector<Event> events;
  events.reserve(4 * angles.size());
  for (double phi : angles) {
    events.push_back({wrap_2pi(phi - kQuarterPi), +1});
    events.push_back({wrap_2pi(phi + kQuarterPi), -1});
    events.push_back({wrap_2pi(phi + 3.0 * kQuarterPi), +1});
    events.push_back({wrap_2pi(phi + 5.0 * kQuarterPi), -1});
  }
  std::sort(events.begin(), events.end(),
            [](const Event& a, const Event& b) { return a.angle < b.angle; });

  SweepBreakpoints sweep;
  std::vector<int> deltas;
  for (const Event& e : events) {
    if (!sweep.angles.empty() && e.angle - sweep.angles.back() <= kBreakpointTol) {
      deltas.back() += e.delta;
    } else {
      sweep.angles.push_back(e.angle);
      deltas.push_back(e.delta);
    }
  }

  // Count on the first arc by direct test at its midpoint, the rest by
  // accumulating deltas.
  sweep.counts.resize(sweep.angles.size());
  const double first_end =
      sweep.angles.size() > 1 ? sweep.angles[1] : sweep.angles.front() + kTwoPi;
  int count = direct_count(0.5 * (sweep.angles.front() + first_end), angles);
  sweep.counts.front() = count;
  for (std::size_t k = 1; k < sweep.angles.size(); ++k) {
    count += deltas[k];
    sweep.counts[k] = count;
  }
  return sweep;
}

double discrepancy_exact_sweep(const PointConfiguration& config) {
  const SweepBreakpoints sweep = quadrant_sweep(config);
  const double n = static_cast<double>(config.n());
  double total = 0.0;
  for (std::size_t k = 0; k < sweep.angles.size(); ++k) {
    const double end =
        (k + 1 < sweep.angles.size()) ? sweep.angles[k + 1] : sweep.angles.front() + kTwoPi;
    const double len = end - sweep.angles[k];
    const double dev = sweep.counts[k] / n - 0.5;
    total += len * dev * dev;
  }
  return total / kTwoPi;
}

MonteCarloEstimate discrepancy_monte_carlo(const PointConfiguration& config,
                                           std::size_t samples, const RngSpec& rng) {
  if (samples < 100)
    throw Error(ErrorKind::InvalidParams, "need at least 100 Monte Carlo samples");
  const std::vector<double> angles = point_angles(config);
  const double n = static_cast<double>(config.n());

  constexpr std::size_t kBatch = 4096;
  const std::size_t nbatches = (samples + kBatch - 1) / kBatch;
  std::vector<double> sum1(nbatches, 0.0), sum2(nbatches, 0.0);
  parallel_blocks(nbatches, 1, [&](std::size_t b, std::size_t, std::size_t) {
    NormalRng gen(rng.with_stream_offset(b));
    const std::size_t count = std::min(kBatch, samples - b * kBatch);
    double s1 = 0.0, s2 = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const double psi = kTwoPi * gen.uniform01();
      const double dev = direct_count(psi, angles) / n - 0.5;
      const double g = dev * dev;
      s1 += g;
      s2 += g * g;
    }
    sum1[b] = s1;
    sum2[b] = s2;
  });

  double s1 = 0.0, s2 = 0.0;
  for (std::size_t b = 0; b < nbatches; ++b) {
    s1 += sum1[b];
    s2 += sum2[b];
  }
  MonteCarloEstimate est;
  est.samples = samples;
  const double m = static_cast<double>(samples);
  est.estimate = s1 / m;
  if (samples > 1) {
    const double var = std::max(0.0, (s2 - m * est.estimate * est.estimate) / (m - 1.0));
    est.standard_error = std::sqrt(var / m);
  }
  return est;
}

double max_energy_bound_s1(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidCount, "need N >= 1");
  const double nd = static_cast<double>(n);
  if (n % 2 == 0) return std::numbers::pi / 4.0;
  return std::numbers::pi / 4.0 * (nd * nd - 1.0) / (nd * nd);
}

}  // namespace acute
