#include <doctest.h>

#include <cmath>
#include <random>

#include "genpos/moran.hpp"

using namespace genpos;

namespace {

// Independent oracle: plain interval-halving on the raw sum, no shared code
// with the solver beyond std::pow.
double bisect_oracle(const std::vector<double>& ratios, double target) {
  auto f = [&](double s) {
    double v = 0;
    for (double r : ratios) v += std::pow(r, s);
    return v - target;
  };
  double lo = 0.0, hi = 1.0;
  while (f(hi) > 0) hi *= 2;
  for (int i = 0; i < 300; ++i) {
    double mid = 0.5 * (lo + hi);
    (f(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("similarity dimension closed forms") {
  CHECK(similarity_dimension(RatioVector({0.5, 0.5})) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(similarity_dimension(RatioVector({1.0 / 3, 1.0 / 3, 1.0 / 3})) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // u + u^2 = 1 with u = (1/2)^s gives s = log2(2/(sqrt(5)-1)).
  double golden = 0.69424191363061737;
  CHECK(similarity_dimension(RatioVector({0.5, 0.25})) ==
        doctest::Approx(golden).epsilon(1e-12));
  CHECK(std::abs(similarity_dimension(RatioVector({0.5, 0.25})) -
                 bisect_oracle({0.5, 0.25}, 1.0)) < 1e-12);
}

TEST_CASE("equal ratios match log m / log(1/r) exactly") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 2 + static_cast<int>(gen() % 7);
    double r = 0.05 + 0.9 * (static_cast<double>(gen() >> 11) * 0x1.0p-53) / m;
    RatioVector v(std::vector<double>(static_cast<size_t>(m), r));
    double expected = std::log(static_cast<double>(m)) / std::log(1.0 / r);
    CHECK(similarity_dimension(v) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("residual tolerance on random vectors") {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 100; ++trial) {
    int m = 2 + static_cast<int>(gen() % 7);
    std::vector<double> ratios;
    for (int i = 0; i < m; ++i)
      ratios.push_back(0.01 + 0.98 * (static_cast<double>(gen() >> 11) * 0x1.0p-53));
    RatioVector v(ratios);
    double s = similarity_dimension(v);
    CHECK(std::abs(DimensionEquation::moran(v).evaluate(s) - 1.0) <= 1e-12);
  }
}

TEST_CASE("moran root is strictly increasing in every ratio") {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 2 + static_cast<int>(gen() % 5);
    std::vector<double> ratios;
    for (int i = 0; i < m; ++i)
      ratios.push_back(0.05 + 0.5 * (static_cast<double>(gen() >> 11) * 0x1.0p-53));
    double s0 = similarity_dimension(RatioVector(ratios));
    size_t which = gen() % static_cast<size_t>(m);
    std::vector<double> bumped = ratios;
    bumped[which] = std::min(0.99, bumped[which] * 1.05 + 1e-3);
    CHECK(similarity_dimension(RatioVector(bumped)) > s0);
  }
}

TEST_CASE("generic dimension equation") {
  // Moran form as a term list agrees with similarity_dimension.
  DimensionEquation eq;
  eq.terms = {{1.0, 0.5}, {1.0, 0.5}};
  eq.target = 1.0;
  CHECK(solve_dimension_equation(eq, 0.0, 4.0).root ==
        doctest::Approx(1.0).epsilon(1e-12));

  // 2 (0.1)^x - (0.01)^x + (1/9)^x = 1 on [0.3, 0.6]; root frozen from an
  // independent high-precision evaluation.
  DimensionEquation attractor;
  attractor.terms = {{2.0, 0.1}, {-1.0, 0.01}, {1.0, 1.0 / 9.0}};
  attractor.target = 1.0;
  RootResult root = solve_dimension_equation(attractor, 0.3, 0.6);
  CHECK(root.root == doctest::Approx(0.42678756921669123).epsilon(1e-12));
  CHECK(root.residual <= 1e-12);

  DimensionEquation single;
  single.terms = {{1.0, 0.5}};
  single.target = 0.25;
  CHECK(solve_dimension_equation(single, 0.0, 8.0).root ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("dimension equation error paths") {
  DimensionEquation eq;
  eq.terms = {{1.0, 0.5}};
  eq.target = 0.25;
  CHECK_THROWS(solve_dimension_equation(eq, 3.0, 8.0));  // no sign change

  DimensionEquation bad_base;
  bad_base.terms = {{1.0, 1.5}};
  CHECK_THROWS(solve_dimension_equation(bad_base, 0.0, 1.0));

  DimensionEquation no_positive;
  no_positive.terms = {{-1.0, 0.5}};
  CHECK_THROWS(solve_dimension_equation(no_positive, 0.0, 1.0));

  // Mixed signs arranged to be non-monotone on the bracket.
  DimensionEquation wiggle;
  wiggle.terms = {{1.0, 0.9}, {-2.0, 0.05}};
  wiggle.target = 0.5;
  CHECK_THROWS(solve_dimension_equation(wiggle, 0.0, 8.0));
}

TEST_CASE("upper rounding never drops below the root") {
  RatioVector r({0.5, 0.25});
  CHECK(similarity_dimension_upper(r) > similarity_dimension(r) - 1e-300);
  CHECK(similarity_dimension_upper(r) >= similarity_dimension(r));
}
