// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Criterion 11 re-runs the installed CLI binary (path via --cli) and
// compares bytes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "acute/bounds.hpp"
#include "acute/constructions.hpp"
#include "acute/discrepancy.hpp"
#include "acute/energy.hpp"
#include "acute/expansions.hpp"
#include "acute/optimize.hpp"
#include "acute/parallel.hpp"
#include "acute/rng.hpp"
#include "acute/types.hpp"

using namespace acute;
constexpr double kPi = std::numbers::pi;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, double time_limit_s,
               const std::function<bool(std::string&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration_cast<std::chrono::duration<double>>(std::chrono::steady_clock::now() -
                                                                start)
          .count();
  if (secs > time_limit_s) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("runtime ") + std::to_string(secs) +
              "s exceeds " + std::to_string(time_limit_s) + "s";
  }
  std::printf("%s criterion %2d [%6.2fs]: %s%s%s\n", ok ? "PASS" : "FAIL", number, secs,
              label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string run_cli(const std::string& cli, const std::string& args, int& code) {
  const std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    code = -1;
    return {};
  }
  std::string output;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
  code = pclose(pipe);
  return output;
}

double grad_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];

  set_max_threads(2);

  // 1. closed-form energies across (d, N)
  criterion(1, "onb energies equal the closed form for d in [1,6], N in [1,50]", 5.0,
            [](std::string& detail) {
              double worst = 0.0;
              for (int d = 1; d <= 6; ++d)
                for (std::size_t n = 1; n <= 50; ++n) {
                  const double e = discrete_energy(onb_configuration(d, n), Potential::acute());
                  worst = std::max(worst, std::abs(e - conjectured_value(d, n)));
                }
              detail = "max |E - closed form| = " + std::to_string(worst);
              return worst <= 1e-12;
            });

  // 2. paper constants
  criterion(2, "closed-form constants: pi/3 at k=0, theorem bound 1.110796 < 3pi/8, S^1 bounds",
            5.0, [](std::string& detail) {
              bool ok = true;
              for (std::size_t m = 1; m <= 16; ++m)
                ok = ok && std::abs(conjectured_value(2, 3 * m) - kPi / 3) <= 1e-12;
              const double bound2 = theorem_bound(2).value;
              ok = ok && std::abs(bound2 - 1.110796) <= 1e-6 && bound2 < 3 * kPi / 8;
              for (std::size_t n = 1; n <= 9; ++n) {
                const double expected =
                    (n % 2 == 0) ? kPi / 4
                                 : kPi / 4 * (static_cast<double>(n) * n - 1.0) /
                                       (static_cast<double>(n) * n);
                ok = ok && std::abs(max_energy_bound_s1(n) - expected) <= 1e-15;
              }
              detail = "theorem_bound(2) = " + std::to_string(bound2);
              return ok;
            });

  // 3. quadratic majorant
  criterion(3, "majorant holds at 69/50 and the critical b sits in (1.38, 1.40)", 10.0,
            [](std::string& detail) {
              const auto at_paper = majorant_margin(69.0 / 50.0, 1000000);
              bool ok = at_paper.min_margin >= 0.0 && at_paper.condition_value > 0.0;
              const double bstar = critical_b(1e-10);
              ok = ok && bstar > 1.38 && bstar < 1.40;
              ok = ok && majorant_margin(bstar - 1e-6, 1000000).min_margin >= -1e-9;
              ok = ok && majorant_margin(bstar + 1e-3, 1000000).min_margin < 0.0;
              detail = "b* = " + std::to_string(bstar) +
                       ", margin(69/50) = " + std::to_string(at_paper.min_margin);
              return ok;
            });

  // 4. frame potential
  criterion(4, "frame defect >= -1e-12 on 4000 random measures; certificates fire correctly",
            10.0, [](std::string& detail) {
              bool ok = true;
              double min_defect = 1.0;
              for (int d = 1; d <= 4; ++d)
                for (std::uint64_t s = 0; s < 1000; ++s) {
                  const auto mu = [&] {
                    const auto config =
                        random_configuration(d, 2 + s % 12, {s, static_cast<std::uint64_t>(d)});
                    NormalRng gen({s, static_cast<std::uint64_t>(d) + 5000});
                    std::vector<double> w(config.n());
                    double sum = 0.0;
                    for (double& x : w) {
                      x = gen.uniform01();
                      sum += x;
                    }
                    for (double& x : w) x /= sum;
                    return DiscreteMeasure(d, config.coords(), w);
                  }();
                  const double defect = frame_defect(mu);
                  min_defect = std::min(min_defect, defect);
                  ok = ok && defect >= -1e-12;
                }
              ok = ok && tight_frame_certificate(onb_measure(2));
              ok = ok && tight_frame_certificate(equispaced_measure(4));
              // a generic 5-point random measure is not a tight frame
              const auto config = random_configuration(2, 5, {123, 0});
              NormalRng gen({123, 5000});
              std::vector<double> w(5);
              double sum = 0.0;
              for (double& x : w) {
                x = gen.uniform01();
                sum += x;
              }
              for (double& x : w) x /= sum;
              ok = ok && !tight_frame_certificate(DiscreteMeasure(2, config.coords(), w));
              detail = "min defect = " + std::to_string(min_defect);
              return ok;
            });

  // 5. Chebyshev / Fourier coefficients
  criterion(5, "acute coefficients match pi/4, -4/(pi n^2) at n = 2 mod 4, 0 otherwise", 5.0,
            [](std::string& detail) {
              const auto cheb = chebyshev_coefficients(Potential::acute(), 64, 4096);
              const auto four = fourier_cosine_coefficients(Potential::acute(), 64, 4096);
              bool ok = true;
              double worst = 0.0;
              for (int n = 0; n <= 64; ++n) {
                const double expected = n == 0          ? kPi / 4
                                        : (n % 4 == 2) ? -4.0 / (kPi * n * n)
                                                        : 0.0;
                worst = std::max({worst, std::abs(cheb.values[n] - expected),
                                  std::abs(four.values[n] - expected)});
                if (n % 2 == 1)
                  ok = ok && std::abs(cheb.values[n]) < 1e-10 && std::abs(four.values[n]) < 1e-10;
              }
              ok = ok && worst <= 1e-8;
              ok = ok && is_negative_definite_s1(cheb);
              ok = ok && check_equispaced_maximizer(four, 4) &&
                   !check_equispaced_maximizer(four, 2);
              detail = "max coefficient error = " + std::to_string(worst);
              return ok;
            });

  // 6. Stolarsky principle
  criterion(6, "sweep discrepancy equals 1/4 - E/pi on 100 configs; MC agrees within 4se", 60.0,
            [](std::string& detail) {
              bool ok = true;
              double worst = 0.0;
              for (std::uint64_t s = 0; s < 100; ++s) {
                const auto config = random_configuration(1, 1 + s % 50, {s, 60});
                const double lhs = discrepancy_exact_sweep(config);
                const double rhs =
                    0.25 - discrete_energy(config, Potential::acute()) / kPi;
                worst = std::max(worst, std::abs(lhs - rhs));
                ok = ok && std::abs(lhs - rhs) < 1e-10;
              }
              for (std::uint64_t s = 0; s < 10; ++s) {
                const auto config = random_configuration(1, 5 + s * 4, {s, 61});
                const auto est = discrepancy_monte_carlo(config, 1000000, {s, 62});
                const double exact = discrepancy_exact_sweep(config);
                ok = ok && std::abs(est.estimate - exact) <= 4.0 * est.standard_error + 1e-12;
              }
              detail = "max residual = " + std::to_string(worst);
              return ok;
            });

  // 7. dimension reduction
  criterion(7, "composition identity on 200 triples; pi - pi^2/(4 pi/3) = pi/4", 5.0,
            [](std::string& detail) {
              bool ok = true;
              double worst = 0.0;
              NormalRng gen({70, 0});
              for (std::uint64_t s = 0; s < 200; ++s) {
                const int k = static_cast<int>(s % 3);
                const int l = static_cast<int>((s / 3) % 2);
                auto make = [&](int dim, std::uint64_t stream) {
                  const auto config = random_configuration(dim, 2 + s % 5, {s, stream});
                  NormalRng wg({s, stream + 100});
                  std::vector<double> w(config.n());
                  double sum = 0.0;
                  for (double& x : w) {
                    x = wg.uniform01();
                    sum += x;
                  }
                  for (double& x : w) x /= sum;
                  return DiscreteMeasure(dim, config.coords(), w);
                };
                const auto nu = make(k, 71);
                const auto lam = make(l, 72);
                const double alpha = gen.uniform01();
                const double lhs =
                    measure_energy(compose_measures(nu, lam, alpha), Potential::acute());
                const double rhs = alpha * alpha * measure_energy(nu, Potential::acute()) +
                                   (1 - alpha) * (1 - alpha) *
                                       measure_energy(lam, Potential::acute()) +
                                   2 * alpha * (1 - alpha) * (kPi / 2);
                worst = std::max(worst, std::abs(lhs - rhs));
                ok = ok && std::abs(lhs - rhs) <= 1e-12;
              }
              ok = ok && std::abs(dimension_reduction_bound(kPi / 3) - kPi / 4) <= 1e-12;
              detail = "max identity residual = " + std::to_string(worst);
              return ok;
            });

  // 8. optimizer, settled case
  criterion(8, "ascend(d=1, n=4, 32 restarts, seed 42) reaches pi/4 within 1e-6", 60.0,
            [](std::string& detail) {
              AscentParams params;
              params.restarts = 32;
              params.rng = {42, 0};
              const auto result = ascend(1, 4, Potential::acute(), params);
              bool ok = std::abs(result.best_energy - kPi / 4) <= 1e-6;
              for (const auto& r : result.per_restart) ok = ok && r.energy <= kPi / 4 + 1e-9;
              detail = "best = " + std::to_string(result.best_energy) +
                       " (gap " + std::to_string(kPi / 4 - result.best_energy) + ")";
              return ok;
            });

  // 9. optimizer, open case
  criterion(9, "d=2 window, gap sandwiches for (2,3),(2,4),(3,4), 50 gradient checks", 300.0,
            [](std::string& detail) {
              AscentParams params;
              params.restarts = 32;
              params.rng = {7, 0};
              const auto d2 = ascend(2, 3, Potential::acute(), params);
              bool ok = d2.best_energy >= kPi / 3 - 1e-6 && d2.best_energy <= 1.110797;
              for (const auto& [d, n] : std::vector<std::pair<int, std::size_t>>{
                       {2, 3}, {2, 4}, {3, 4}}) {
                AscentParams p;
                p.restarts = 32;
                p.rng = {static_cast<std::uint64_t>(d * 100 + n), 0};
                const auto r = ascend(d, n, Potential::acute(), p);
                const auto gap = gap_report(d, n, r.best_energy);
                ok = ok && gap.sandwich_ok;
              }
              // gradient vs central finite differences on 50 random instances
              int done = 0;
              std::uint64_t seed = 0;
              double worst_rel = 0.0;
              while (done < 50 && seed < 3000) {
                ++seed;
                const int d = 1 + static_cast<int>(seed % 3);
                const std::size_t n = 2 + seed % 7;
                const double eps = (seed % 2 == 0) ? 1e-2 : 1e-3;
                const double h = (eps == 1e-2) ? 1e-6 : 1e-7;
                const auto config = random_configuration(d, n, {seed, 90});
                double max_t = 0.0;
                for (std::size_t i = 0; i < n; ++i)
                  for (std::size_t j = i + 1; j < n; ++j)
                    max_t = std::max(max_t,
                                     std::abs(clamp_dot(config.point(i), config.point(j))));
                if (max_t > 0.99) continue;
                const auto grad = energy_gradient(config, Potential::acute(), eps);
                if (grad_norm(grad) < 1e-3) continue;
                ++done;
                const int width = d + 1;
                std::vector<double> diff(grad.size());
                for (std::size_t i = 0; i < n; ++i)
                  for (int a = 0; a < width; ++a) {
                    auto bump = [&](double delta) {
                      std::vector<double> coords = config.coords();
                      coords[i * width + a] += delta;
                      double r2 = 0.0;
                      for (int k = 0; k < width; ++k)
                        r2 += coords[i * width + k] * coords[i * width + k];
                      const double inv = 1.0 / std::sqrt(r2);
                      for (int k = 0; k < width; ++k) coords[i * width + k] *= inv;
                      double sum = 0.0;
                      const Potential pot = Potential::acute();
                      for (std::size_t p = 0; p < n; ++p)
                        for (std::size_t q = 0; q < n; ++q) {
                          if (p == q) continue;
                          double t = 0.0;
                          for (int k = 0; k < width; ++k)
                            t += coords[p * width + k] * coords[q * width + k];
                          t = std::min(1.0, std::max(-1.0, t));
                          sum += pot.smoothed_value(t, eps);
                        }
                      return sum / (static_cast<double>(n) * n);
                    };
                    diff[i * width + a] = (bump(h) - bump(-h)) / (2 * h) - grad[i * width + a];
                  }
                worst_rel = std::max(worst_rel, grad_norm(diff) / grad_norm(grad));
              }
              ok = ok && done == 50 && worst_rel < 1e-5;
              detail = "d2n3 best = " + std::to_string(d2.best_energy) +
                       ", worst gradient rel err = " + std::to_string(worst_rel);
              return ok;
            });

  // 10. (non-)negative definiteness across dimensions
  criterion(10, "gegenbauer d=2 has a positive coefficient; the d=1 list does not", 10.0,
            [](std::string& detail) {
              const auto g2 = gegenbauer_coefficients(Potential::acute(), 2, 64, 4096);
              bool positive = false;
              for (int n = 1; n <= 64; ++n) positive = positive || g2.values[n] > 1e-6;
              const auto g1 = gegenbauer_coefficients(Potential::acute(), 1, 64, 4096);
              bool nonpositive = true;
              for (int n = 1; n <= 64; ++n) nonpositive = nonpositive && g1.values[n] <= 1e-9;
              detail = "d=2 value at n=4: " + std::to_string(g2.values[4]);
              return positive && nonpositive;
            });

  // 11. determinism through the CLI
  criterion(11, "seeded subcommands are byte-identical across reruns and --threads 1/8", 120.0,
            [&cli_path](std::string& detail) {
              if (cli_path.empty()) {
                detail = "no --cli path given";
                return false;
              }
              const std::vector<std::string> commands{
                  "construct onb --dim 3 --n 11",
                  "construct equispaced --n 12",
                  "optimize --dim 1 --n 4 --restarts 8 --seed 42",
                  "optimize --dim 2 --n 4 --restarts 8 --seed 7",
                  "expand --basis fourier --potential acute --nmax 32 --nodes 1024",
                  "expand --basis gegenbauer:2 --nmax 16 --nodes 256",
                  "bounds margin --b 1.38 --grid 200000",
                  "bounds critical-b",
                  "report --dim 1 --n 4 --restarts 8 --seed 1",
              };
              for (const auto& cmd : commands) {
                int c1, c2, c3;
                const std::string a = run_cli(cli_path, cmd + " --threads 1", c1);
                const std::string b = run_cli(cli_path, cmd + " --threads 1", c2);
                const std::string c = run_cli(cli_path, cmd + " --threads 8", c3);
                if (c1 != 0 || c2 != 0 || c3 != 0) {
                  detail = "exit codes for: " + cmd;
                  return false;
                }
                if (a != b || a != c) {
                  detail = "outputs differ for: " + cmd;
                  return false;
                }
              }
              detail = std::to_string(commands.size()) + " commands compared";
              return true;
            });

  if (g_failures) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
