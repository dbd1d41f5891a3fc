#include "acute/optimize.hpp"

#include <algorithm>
#include <cmath>

#include "acute/energy.hpp"
#include "acute/kernels.hpp"
#include "acute/parallel.hpp"

namespace acute {

namespace {

constexpr std::size_t kRowBlock = 64;
constexpr int kConvergenceWindow = 5;

double smoothed_total(const std::vector<double>& coords, std::size_t n, int width,
                      const Potential& potential, double eps) {
  const auto pack = kernels::PackedPoints::pack(coords.data(), n, width);
  const auto& ops = kernels::dispatched_kernels();
  const double off_diag =
      parallel_block_sum(n, kRowBlock, [&](std::size_t begin, std::size_t end) {
        double partial = 0.0;
        for (std::size_t i = begin; i < end; ++i)
          partial += ops.row_sum(pack, coords.data() + i * width, potential, eps, nullptr,
                                 static_cast<std::ptrdiff_t>(i));
        return partial;
      });
  const double nd = static_cast<double>(n);
  return (off_diag + nd * potential.value_at_one()) / (nd * nd);
}

// Euclidean gradient rows (2/N^2) sum_j F'(t_ij) z_j projected onto each
// tangent space.
void tangent_gradient(const std::vector<double>& coords, std::size_t n, int width,
                      const Potential& potential, double eps, std::vector<double>& grad) {
  const auto pack = kernels::PackedPoints::pack(coords.data(), n, width);
  const auto& ops = kernels::dispatched_kernels();
  grad.assign(coords.size(), 0.0);
  const double scale = 2.0 / (static_cast<double>(n) * static_cast<double>(n));
  parallel_blocks(n, kRowBlock, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double* x = coords.data() + i * width;
      double* g = grad.data() + i * width;
      ops.grad_row(pack, x, potential, eps, nullptr, static_cast<std::ptrdiff_t>(i), g);
      double radial = 0.0;
      for (int k = 0; k < width; ++k) {
        g[k] *= scale;
        radial += g[k] * x[k];
      }
      for (int k = 0; k < width; ++k) g[k] -= radial * x[k];
    }
  });
}

struct RunOutcome {
  std::vector<double> coords;
  RestartStat stat;
};

// One projected-ascent run: backtracking line search accepting only strict
// increases of the smoothed energy, then (for eps > 0) a continuation
// phase halving eps three times. F_eps increases pointwise as eps drops,
// so the recorded trace is nondecreasing across phase switches too.
RunOutcome run_single(std::vector<double> coords, std::size_t n, int width,
                      const Potential& potential, const AscentParams& params) {
  RunOutcome out;
  std::vector<double> eps_phases{params.smoothing_eps};
  if (potential.kind == Potential::Kind::AcuteAngle && params.smoothing_eps > 0.0)
    for (int h = 0; h < 3; ++h) eps_phases.push_back(eps_phases.back() / 2.0);

  std::vector<double> grad, candidate(coords.size());
  bool all_converged = true;
  std::size_t accepted_total = 0;

  for (double eps : eps_phases) {
    double energy = smoothed_total(coords, n, width, potential, eps);
    out.stat.trace.push_back(energy);
    std::vector<double> window{energy};
    bool phase_converged = false;

    for (std::size_t iter = 0; iter < params.max_iters && !phase_converged; ++iter) {
      tangent_gradient(coords, n, width, potential, eps, grad);

      double step = params.initial_step;
      bool accepted = false;
      for (int bt = 0; bt < params.max_backtracks; ++bt) {
        for (std::size_t idx = 0; idx < coords.size(); ++idx)
          candidate[idx] = coords[idx] + step * grad[idx];
        project_to_sphere(candidate, width);
        const double cand_energy = smoothed_total(candidate, n, width, potential, eps);
        if (cand_energy > energy) {
          coords.swap(candidate);
          energy = cand_energy;
          accepted = true;
          break;
        }
        step *= params.backtracking_factor;
      }
      if (!accepted) {
        phase_converged = true;  // no ascent direction left at this scale
        break;
      }
      ++accepted_total;
      out.stat.trace.push_back(energy);
      window.push_back(energy);
      if (window.size() > static_cast<std::size_t>(kConvergenceWindow) + 1) {
        window.erase(window.begin());
        const double change = std::abs(window.back() - window.front());
        if (change < params.rel_tol * std::max(1.0, std::abs(window.back())))
          phase_converged = true;
      }
    }
    all_converged = all_converged && phase_converged;
  }

  out.stat.iterations = accepted_total;
  out.stat.converged = all_converged;
  out.coords = std::move(coords);
  return out;
}

OptimizationResult collect(std::vector<RunOutcome> outcomes, int dim,
                           const Potential& potential, const AscentParams& params) {
  for (auto& o : outcomes) {
    PointConfiguration config(dim, o.coords);
    o.stat.energy = discrete_energy(config, potential);
  }
  int best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r)
    if (outcomes[r].stat.energy > outcomes[best].stat.energy) best = static_cast<int>(r);

  OptimizationResult result{PointConfiguration(dim, outcomes[best].coords),
                            outcomes[best].stat.energy,
                            {},
                            params,
                            best};
  result.per_restart.reserve(outcomes.size());
  for (auto& o : outcomes) result.per_restart.push_back(std::move(o.stat));
  return result;
}

}  // namespace

void AscentParams::validate() const {
  if (max_iters < 1 || !(initial_step > 0.0) ||
      !(backtracking_factor > 0.0 && backtracking_factor < 1.0) || max_backtracks < 1 ||
      !(rel_tol > 0.0 && rel_tol < 1.0) || !(smoothing_eps >= 0.0) || restarts < 1)
    throw Error(ErrorKind::InvalidParams, "invalid ascent parameters");
}

std::vector<double> energy_gradient(const PointConfiguration& config,
                                    const Potential& potential, double smoothing_eps) {
  std::vector<double> grad;
  tangent_gradient(config.coords(), config.n(), config.width(), potential, smoothing_eps, grad);
  return grad;
}

void project_to_sphere(std::vector<double>& points, int width) {
  if (width < 1 || points.size() % width != 0)
    throw Error(ErrorKind::DimensionMismatch, "bad row width");
  for (std::size_t i = 0; i < points.size(); i += width) {
    double r2 = 0.0;
    for (int k = 0; k < width; ++k) r2 += points[i + k] * points[i + k];
    if (r2 == 0.0) throw Error(ErrorKind::ZeroVector, "cannot project the zero vector");
    const double inv = 1.0 / std::sqrt(r2);
    for (int k = 0; k < width; ++k) points[i + k] *= inv;
  }
}

OptimizationResult ascend(int dim, std::size_t n, const Potential& potential,
                          const AscentParams& params) {
  if (dim < 1 || n < 1) throw Error(ErrorKind::InvalidParams, "need dim >= 1 and n >= 1");
  params.validate();
  const int width = dim + 1;

  std::vector<RunOutcome> outcomes(params.restarts);
  parallel_blocks(params.restarts, 1, [&](std::size_t r, std::size_t, std::size_t) {
    const PointConfiguration start = random_configuration(dim, n, params.rng.with_stream_offset(r));
    outcomes[r] = run_single(start.coords(), n, width, potential, params);
  });
  return collect(std::move(outcomes), dim, potential, params);
}

OptimizationResult polish(const PointConfiguration& config, const Potential& potential,
                          const AscentParams& params) {
  params.validate();
  const double input_energy = discrete_energy(config, potential);
  std::vector<RunOutcome> outcomes(1);
  outcomes[0] = run_single(config.coords(), config.n(), config.width(), potential, params);
  OptimizationResult result = collect(std::move(outcomes), config.dim(), potential, params);
  // Ascent runs on the smoothed objective; never report worse than the
  // input under the exact one.
  if (result.best_energy < input_energy) {
    result.best_config = config;
    result.best_energy = input_energy;
    result.per_restart[0].energy = input_energy;
  }
  return result;
}

}  // namespace acute
