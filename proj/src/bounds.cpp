#include "acute/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "acute/constructions.hpp"
#include "acute/discrepancy.hpp"
#include "acute/parallel.hpp"

namespace acute {

namespace {

double margin(double b, double t) {
  return std::numbers::pi / 2.0 - b * t * t - std::acos(t);
}

}  // namespace

double majorant_condition(double b) {
  if (!(b >= 1.0))
    throw Error(ErrorKind::InvalidInput, "critical-point condition needs b >= 1");
  const double root = std::sqrt(b * b - 1.0);
  const double u = (b + root) / 2.0;
  return std::numbers::pi / 2.0 - u - std::acos(std::sqrt(u / b));
}

MajorantReport majorant_margin(double b, long grid) {
  if (!(b > 0.0)) throw Error(ErrorKind::InvalidB, "majorant coefficient must be > 0");
  if (grid < 1) throw Error(ErrorKind::InvalidParams, "grid must be >= 1");

  MajorantReport report;
  report.b = b;
  report.grid_size = grid;

  // Grid over (0, 1]: the bound is an equality at t = 0, so the margin is
  // identically zero there and would mask the interior sign.
  struct Best {
    double value;
    double t;
  };
  const std::size_t count = static_cast<std::size_t>(grid);
  const std::size_t block = 65536;
  const std::size_t nblocks = (count + block - 1) / block;
  std::vector<Best> best(nblocks, {0.0, 0.0});
  parallel_blocks(count, block, [&](std::size_t bi, std::size_t begin, std::size_t end) {
    Best local{std::numeric_limits<double>::infinity(), 0.0};
    for (std::size_t i = begin; i < end; ++i) {
      const double t = static_cast<double>(i + 1) / static_cast<double>(grid);
      const double v = margin(b, t);
      if (v < local.value) local = {v, t};
    }
    best[bi] = local;
  });
  Best overall = best[0];
  for (std::size_t bi = 1; bi < nblocks; ++bi)
    if (best[bi].value < overall.value) overall = best[bi];  // earlier block wins ties

  if (b >= 1.0) {
    report.condition_value = majorant_condition(b);
    report.condition_applicable = true;
    const double tstar = std::sqrt((b + std::sqrt(b * b - 1.0)) / (2.0 * b));
    if (tstar > 0.0 && tstar <= 1.0) {
      const double v = margin(b, tstar);
      if (v < overall.value) overall = {v, tstar};
    }
  }

  report.min_margin = overall.value;
  report.argmin_t = overall.t;
  return report;
}

double critical_b(double tolerance) {
  if (!(tolerance > 0.0 && tolerance <= 1e-3))
    throw Error(ErrorKind::InvalidParams, "tolerance must lie in (0, 1e-3]");
  double lo = 69.0 / 50.0;
  double hi = 1.40;
  if (!(majorant_condition(lo) > 0.0))
    throw Error(ErrorKind::BracketInvalid, "g(69/50) <= 0: majorant should hold at 69/50");
  if (!(majorant_condition(hi) < 0.0))
    throw Error(ErrorKind::BracketInvalid, "g(1.40) >= 0: bracket endpoint not negative");
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    (majorant_condition(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

TheoremBound theorem_bound(int dim, double b) {
  if (dim < 1) throw Error(ErrorKind::InvalidInput, "theorem bound needs dim >= 1");
  TheoremBound bound;
  bound.dim = dim;
  bound.b = b;
  bound.value = std::numbers::pi / 2.0 - b / (dim + 1);
  bound.d1_caveat = dim < 2;
  return bound;
}

double dimension_reduction_bound(double m_d) {
  if (!(m_d > 0.0))
    throw Error(ErrorKind::InvalidInput, "dimension reduction needs M_d > 0");
  return std::numbers::pi - std::numbers::pi * std::numbers::pi / (4.0 * m_d);
}

GapReport gap_report(int dim, std::size_t n, double best_found) {
  GapReport report;
  report.dim = dim;
  report.n = n;
  report.conjectured = conjectured_value(dim, n);
  report.best_found = best_found;
  if (dim >= 2) {
    report.upper_bound = theorem_bound(dim).value;
    report.bound_kind = "theorem";
  } else {
    report.upper_bound = max_energy_bound_s1(n);
    report.bound_kind = "s1";
  }
  constexpr double kTol = 1e-6;
  if (best_found > report.upper_bound + kTol)
    throw Error(ErrorKind::InconsistentBounds,
                "best energy exceeds the proven upper bound; this is an implementation bug");
  report.gap = report.conjectured - best_found;
  report.sandwich_ok =
      report.conjectured <= best_found + kTol && best_found <= report.upper_bound + kTol;
  return report;
}

}  // namespace acute
