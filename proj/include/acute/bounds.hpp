#pragma once

#include <cstddef>
#include <string>

#include "acute/types.hpp"

namespace acute {

// Margin survey of the quadratic majorant pi/2 - b t^2 over arccos|t|.
struct MajorantReport {
  double b = 0.0;
  double min_margin = 0.0;  // min over grid + analytic critical point
  double argmin_t = 0.0;
  long grid_size = 0;
  // Closed-form margin at the interior critical point
  // t* = sqrt((b + sqrt(b^2-1)) / 2b); the majorant holds on [-1,1] iff
  // this is >= 0. Only defined for b >= 1.
  double condition_value = 0.0;
  bool condition_applicable = false;
};

// Margin value at the analytic interior critical point (b >= 1).
double majorant_condition(double b);

// Evaluates pi/2 - b t^2 - arccos(t) on the uniform grid t = i/grid,
// i = 1..grid (t = 0 is excluded: the bound is an equality there) plus the
// analytic critical point. Symmetry covers [-1, 0].
MajorantReport majorant_margin(double b, long grid = 1000000);

// Bisection root of the critical-point margin on [69/50, 1.40]; the
// returned b* satisfies g(b* - tol) > 0 > g(b* + tol).
double critical_b(double tolerance);

struct TheoremBound {
  double value = 0.0;
  double b = 0.0;
  int dim = 0;
  bool d1_caveat = false;  // the theorem is stated for d >= 2
};

// pi/2 - b/(d+1), the majorant + frame-potential upper bound.
TheoremBound theorem_bound(int dim, double b = 69.0 / 50.0);

// M_{d-1} <= pi - pi^2 / (4 M_d).
double dimension_reduction_bound(double m_d);

struct GapReport {
  int dim = 0;
  std::size_t n = 0;
  double conjectured = 0.0;
  double best_found = 0.0;
  double upper_bound = 0.0;
  std::string bound_kind;  // "theorem" or "s1"
  double gap = 0.0;        // conjectured - best_found
  bool sandwich_ok = false;
};

// Sandwich conjectured <= best_found <= upper bound (tolerance 1e-6).
// Throws InconsistentBounds if best_found exceeds the proven bound, which
// signals an implementation bug, never new mathematics.
GapReport gap_report(int dim, std::size_t n, double best_found);

}  // namespace acute
