#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "acute/constructions.hpp"
#include "acute/energy.hpp"
#include "helpers.hpp"

using namespace acute;
constexpr double kPi = std::numbers::pi;

TEST_CASE("onb split") {
  const auto s = OnbSplit::of(2, 7);
  CHECK(s.m == 2);
  CHECK(s.k == 1);
  for (int d = 1; d <= 6; ++d)
    for (std::size_t n = 1; n <= 40; ++n) {
      const auto split = OnbSplit::of(d, n);
      CHECK(split.m * (d + 1) + split.k == n);
      CHECK(split.k <= static_cast<std::size_t>(d));
    }
}

TEST_CASE("onb configuration cycles the basis") {
  const auto c1 = onb_configuration(2, 3);
  CHECK(c1.point(0)[0] == 1.0);
  CHECK(c1.point(1)[1] == 1.0);
  CHECK(c1.point(2)[2] == 1.0);

  const auto c2 = onb_configuration(2, 4);
  CHECK(c2.point(3)[0] == 1.0);  // e1 repeats first

  // d=1, N=5: three copies of e1, two of e2
  const auto c3 = onb_configuration(1, 5);
  int e1_count = 0;
  for (std::size_t i = 0; i < 5; ++i) e1_count += c3.point(i)[0] == 1.0 ? 1 : 0;
  CHECK(e1_count == 3);
}

TEST_CASE("conjectured closed-form values") {
  CHECK(std::abs(conjectured_value(2, 3) - kPi / 3) <= 1e-15);
  CHECK(std::abs(conjectured_value(2, 4) - 5 * kPi / 16) <= 1e-15);
  CHECK(std::abs(conjectured_value(1, 2) - kPi / 4) <= 1e-15);
  // k = 0 collapses to (pi/2) d/(d+1)
  for (int d = 1; d <= 8; ++d)
    for (std::size_t m = 1; m <= 6; ++m)
      CHECK(std::abs(conjectured_value(d, m * (d + 1)) - kPi / 2 * d / (d + 1)) <= 1e-14);
  CHECK(std::abs(conjectured_value(2, 300) - kPi / 3) <= 1e-12);  // m = 100 copies
}

TEST_CASE("onb configurations attain the conjectured value exactly") {
  for (int d = 1; d <= 6; ++d)
    for (std::size_t n = 1; n <= 50; ++n)
      CHECK(std::abs(discrete_energy(onb_configuration(d, n), Potential::acute()) -
                     conjectured_value(d, n)) <= 1e-12);
}

TEST_CASE("onb measure") {
  const auto m1 = onb_measure(1);
  CHECK(m1.weight(0) == 0.5);
  CHECK(m1.weight(1) == 0.5);
  CHECK(std::abs(measure_energy(onb_measure(2), Potential::acute()) - kPi / 3) <= 1e-12);
  for (int d = 1; d <= 8; ++d) CHECK(std::abs(frame_defect(onb_measure(d))) <= 1e-15);
}

TEST_CASE("equispaced measures") {
  const auto s4 = equispaced_measure(4);
  CHECK(std::abs(measure_energy(s4, Potential::acute()) - kPi / 4) <= 1e-12);
  CHECK(std::abs(s4.point(1)[0]) <= 1e-16);  // angle pi/2
  CHECK(measure_energy(equispaced_measure(1), Potential::acute()) == 0.0);
  // sigma_{4N} family: direct summation gives pi/4 again at N=8
  CHECK(std::abs(measure_energy(equispaced_measure(8), Potential::acute()) - kPi / 4) <= 1e-12);
}

TEST_CASE("composition: edge cases") {
  const auto nu = testing::random_measure(1, 4, 3);
  const auto lam = testing::random_measure(0, 2, 4);

  const auto whole = compose_measures(nu, lam, 1.0);
  CHECK(whole.dim() == 2);
  CHECK(std::abs(measure_energy(whole, Potential::acute()) -
                 measure_energy(nu, Potential::acute())) <= 1e-12);

  // two orthogonal point masses, alpha = 1/2: 2 (1/4) F(0) = pi/4
  const auto d0 = validate_measure({{1.0}}, {1.0}, 0);
  const auto mix = compose_measures(d0, d0, 0.5);
  CHECK(std::abs(measure_energy(mix, Potential::acute()) - kPi / 4) <= 1e-15);
}

TEST_CASE("composition energy identity on random triples") {
  // I(mu) = a^2 I(nu) + (1-a)^2 I(lambda) + 2a(1-a) F(0)
  NormalRng gen({404, 0});
  int checked = 0;
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    const int k = static_cast<int>(trial % 3);
    const int l = static_cast<int>((trial / 3) % 2);
    const auto nu = testing::random_measure(k, 2 + trial % 5, trial, 1);
    const auto lam = testing::random_measure(l, 2 + trial % 4, trial, 2);
    const double alpha = gen.uniform01();
    const auto mu = compose_measures(nu, lam, alpha);
    CHECK(mu.dim() == k + l + 1);
    for (const auto& pot : {Potential::acute(), Potential::frame()}) {
      const double lhs = measure_energy(mu, pot);
      const double rhs = alpha * alpha * measure_energy(nu, pot) +
                         (1.0 - alpha) * (1.0 - alpha) * measure_energy(lam, pot) +
                         2.0 * alpha * (1.0 - alpha) * pot.value(0.0);
      CHECK(std::abs(lhs - rhs) <= 1e-12);
      ++checked;
    }
  }
  CHECK(checked == 400);
}

TEST_CASE("onb measure is a composition of lower-dimensional onb measures") {
  // the S^0 basis measure is the point mass at e1
  const auto onb_like = [](int d) {
    return d == 0 ? validate_measure({{1.0}}, {1.0}, 0) : onb_measure(d);
  };
  for (int d = 2; d <= 5; ++d) {
    for (int k = 0; k <= d - 1; ++k) {
      const int l = d - k - 1;
      const double alpha = static_cast<double>(k + 1) / (d + 1);
      const auto composed = compose_measures(onb_like(k), onb_like(l), alpha);
      CHECK(composed.dim() == d);
      CHECK(std::abs(measure_energy(composed, Potential::acute()) -
                     measure_energy(onb_measure(d), Potential::acute())) <= 1e-12);
    }
  }
}
