#include <doctest.h>

#include <cmath>
#include <random>

#include "genpos/cases.hpp"
#include "genpos/moran.hpp"
#include "helpers.hpp"

using namespace genpos;
using namespace genpos::testing;

TEST_CASE("exact-overlap builder") {
  CHECK_NOTHROW(build_exact_overlap({0.1, 0.1}));  // t = b is constructible
  CHECK_THROWS(build_exact_overlap({0.2, 0.1}));
  CHECK_THROWS(build_exact_overlap({0.05, 1.0 / 9.0}));

  IFSystem s = build_exact_overlap({0.05, 0.1});
  CHECK(s.map_count() == 3);
  CHECK(s.ratios().at(3) == doctest::Approx(1.0 / 9.0).epsilon(1e-14));

  // Fixed points: pi(1^inf) = 0 and pi(3^inf) = 1.
  PointEstimate zero = address_point(s, Address::constant(1), 25);
  CHECK(std::abs(zero.point[0]) <= zero.error_radius);
  PointEstimate one = address_point(s, Address::constant(3), 25);
  CHECK(std::abs(one.point[0] - 1.0) <= one.error_radius);
}

TEST_CASE("exceptional intervals for the exact overlap") {
  Interval d12 = dmn_interval_exact(1, 2, 0.1);
  CHECK(d12.lo == doctest::Approx(8.0 * 0.01 / 9.0).epsilon(1e-14));
  CHECK(d12.hi == doctest::Approx(9.0 * 0.01 / 8.0).epsilon(1e-14));
  CHECK_FALSE(d12.is_empty());

  // 8 b / 9 > 9^-2 : no t can align t^2 with b.
  CHECK(dmn_interval_exact(2, 1, 0.05).is_empty());

  // The upper endpoint never exceeds 1/9.
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 50; ++trial) {
    int m = 1 + static_cast<int>(gen() % 5);
    int n = 1 + static_cast<int>(gen() % 5);
    if (m == n) continue;
    double b = 0.005 + 0.1 * uniform01(gen);
    Interval d = dmn_interval_exact(m, n, b);
    if (!d.is_empty()) CHECK(d.hi <= 1.0 / 9.0 + 1e-12);
  }

  CHECK_THROWS(dmn_interval_exact(2, 2, 0.1));
  CHECK_THROWS(dmn_interval_exact(0, 1, 0.1));
}

TEST_CASE("exact-overlap margin constant") {
  CHECK(margin_exact_overlap(1, 0.1) == doctest::Approx(0.5609375).epsilon(1e-14));
  CHECK(margin_exact_overlap(3, 0.1) == doctest::Approx(5.609375e-3).epsilon(1e-12));
  std::mt19937_64 gen(8);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(gen() % 10);
    double b = 1e-4 + (1.0 / 9.0 - 2e-4) * uniform01(gen);
    CHECK(margin_exact_overlap(n, b) > 0);
  }
}

TEST_CASE("classify_exact_overlap away from every exceptional interval") {
  // t = 0.04, b = 0.1: all bands t^m [8/9,1] vs b^n [8/9,1] separate at the
  // hull level for m, n <= 3.
  CaseVerdict v = classify_exact_overlap({0.04, 0.1}, 3, 1e-7, 25);
  CHECK(v.verified);
  for (const PieceCheck& c : v.checks) {
    CHECK(c.verdict.status == SeparationStatus::Disjoint);
    CHECK(c.verdict.depth_used == 0);  // first-step hull intervals suffice
  }
}

TEST_CASE("classify_exact_overlap flags degenerate t == b") {
  CaseVerdict v = classify_exact_overlap({0.1, 0.1}, 3, 1e-7, 25);
  CHECK_FALSE(v.verified);
  REQUIRE(v.undecided.size() == 1);
  CHECK(v.undecided[0].m == 1);
  CHECK(v.undecided[0].n == 1);
}

TEST_CASE("commuting maps give two addresses for the same point") {
  IFSystem s = build_exact_overlap({0.05, 0.1});
  std::mt19937_64 gen(12);
  for (int trial = 0; trial < 30; ++trial) {
    Word suffix;
    for (int i = 0; i < 18; ++i)
      suffix.letters.push_back(1 + static_cast<int>(gen() % 3));
    Address a{Word{{1, 2}}.concat(suffix), 3};
    Address b{Word{{2, 1}}.concat(suffix), 3};
    PointEstimate pa = address_point(s, a, 20);
    PointEstimate pb = address_point(s, b, 20);
    CHECK((pa.point - pb.point).norm() <= pa.error_radius + pb.error_radius + 1e-15);
  }
}

TEST_CASE("dmn soundness: away from the union, hull intervals settle everything") {
  std::mt19937_64 gen(99);
  int tested = 0;
  const int kMax = 4;
  for (int trial = 0; trial < 400 && tested < 100; ++trial) {
    double b = 0.01 + 0.09 * uniform01(gen);
    double t = 1e-3 + (1.0 / 9.0 - 2e-3) * uniform01(gen);
    if (std::abs(t - b) < 1e-3) continue;
    bool inside = false;
    for (int m = 1; m <= kMax && !inside; ++m)
      for (int n = 1; n <= kMax && !inside; ++n) {
        if (m == n) continue;
        Interval d = dmn_interval_exact(m, n, b);
        if (!d.is_empty() && t >= d.lo - 1e-6 && t <= d.hi + 1e-6) inside = true;
      }
    if (inside) continue;
    ++tested;
    CaseVerdict v = classify_exact_overlap({t, b}, kMax, 1e-7, 25);
    CHECK(v.verified);
    for (const PieceCheck& c : v.checks) CHECK(c.verdict.depth_used == 0);
  }
  CHECK(tested >= 100);
}

TEST_CASE("one-point builder and structure") {
  CHECK_THROWS(build_one_point({0.05, 0.02, 0.02}));
  IFSystem s = build_one_point({0.02, 0.02, 0.02});
  CHECK(s.map_count() == 6);
  // S_3 is orientation-reversing with ratio q.
  CHECK(s.map(3).matrix.at(0, 0) == doctest::Approx(-0.02).epsilon(1e-14));
  CHECK(s.map(3).ratio == doctest::Approx(0.02).epsilon(1e-12));

  // h = 1/2 is S_3(0) and S_4(1), with 0 and 1 fixed by S_1 and S_6.
  CHECK(s.map(3).apply(Vec::of(0.0))[0] == 0.5);
  CHECK(s.map(4).apply(Vec::of(1.0))[0] == 0.5);
  CHECK(s.map(1).apply(Vec::of(0.0))[0] == 0.0);
  CHECK(s.map(6).apply(Vec::of(1.0))[0] == 1.0);

  // Certificate ratio vector from the construction stays below 1/2.
  double sr = similarity_dimension(
      RatioVector({0.02, 0.02, 1.0 / 36.0, 0.02, 0.02, 0.02}));
  CHECK(sr < 0.5);

  // h stays inside the covers of K_3 and K_4 at every tested depth.
  for (int d = 1; d <= 12; ++d) {
    CHECK(point_in_cover(s, 3, Vec::of(0.5), d));
    CHECK(point_in_cover(s, 4, Vec::of(0.5), d));
  }
}

TEST_CASE("one-point exceptional intervals") {
  Interval d00 = dmn_interval_onepoint(0, 0, 0.02, 0.02);
  CHECK(d00.lo == doctest::Approx(0.02 / 3.0).epsilon(1e-14));
  CHECK(d00.hi == doctest::Approx(1.0 / 36.0).epsilon(1e-14));

  CHECK(dmn_interval_onepoint(3, 0, 0.02, 0.02).is_empty());

  // Endpoints scale by r when n increases at fixed m.
  Interval d01 = dmn_interval_onepoint(0, 1, 0.02, 0.02);
  CHECK(d01.lo == doctest::Approx(d00.lo * 0.02).epsilon(1e-12));
}

TEST_CASE("one-point margin constant") {
  CHECK(margin_one_point(0, 0.02) == doctest::Approx(23.0 / 105.0).epsilon(1e-14));
  CHECK(margin_one_point(2, 0.02) ==
        doctest::Approx(23.0 / 105.0 * 4e-4).epsilon(1e-12));
  CHECK(margin_one_point(0, 0.02) < 0.25);  // strictly below the cruder p^m/4
  for (int m = 0; m < 8; ++m) CHECK(margin_one_point(m, 0.01) > 0);
}

TEST_CASE("classify_one_point fast path settles off-window parameters") {
  // p = r = 0.02: the windows for q are (r/3, 1/36), (r^2/3, 3 r^2), ... so
  // q = 0.004 avoids every m, n <= 2 window.
  CaseVerdict v = classify_one_point({0.02, 0.004, 0.02}, 2, 1e-7, 30);
  CHECK(v.verified);
  for (const PieceCheck& c : v.checks) CHECK(c.fast_path);
}

TEST_CASE("classify_one_point detects the exceptional parameter q = r/2") {
  // q x = r (1 - y) has the solution x = y = 2/3 in K_5 x K_5, so the pieces
  // S_3(K_5) and S_4(K_5) truly meet: (0,0) must stay undecided.
  CaseVerdict v = classify_one_point({0.02, 0.01, 0.02}, 0, 1e-7, 40);
  CHECK_FALSE(v.verified);
  bool found = false;
  for (const PieceCheck& c : v.undecided)
    if (c.m == 0 && c.n == 0 && c.i == 5 && c.j == 5) found = true;
  CHECK(found);
}

TEST_CASE("boundary parameters force refinement") {
  double q = dmn_interval_onepoint(0, 0, 0.02, 0.02).lo + 1e-6;
  CaseVerdict v = classify_one_point({0.02, q, 0.02}, 0, 1e-7, 30);
  bool some_deep = false;
  for (const PieceCheck& c : v.checks)
    if (!c.fast_path && c.verdict.depth_used > 0) some_deep = true;
  CHECK(some_deep);
}

TEST_CASE("wsp witnesses for the exact overlap match the brute-force records") {
  WitnessSearchResult r = wsp_witness_search_exact({0.05, 0.1}, 1e-9, 200);
  REQUIRE(r.witnesses.size() >= 5);

  // Oracle: strict records of the identity distance over n-major order.
  std::vector<WspWitness> records;
  double best = std::numeric_limits<double>::infinity();
  double lt = std::log(0.05), lb = std::log(0.1);
  for (long n = 1; n <= 200; ++n)
    for (long l = 1; l <= 200; ++l) {
      double d = std::abs(std::expm1(l * lt - n * lb));
      if (d < best) {
        best = d;
        records.push_back({l, n, 0, 0, d});
      }
    }
  REQUIRE(records.size() == r.witnesses.size());
  for (size_t i = 0; i < records.size(); ++i) {
    CHECK(r.witnesses[i].m == records[i].m);
    CHECK(r.witnesses[i].n == records[i].n);
    CHECK(r.witnesses[i].identity_distance ==
          doctest::Approx(records[i].identity_distance).epsilon(1e-12));
  }
  for (size_t i = 1; i < r.witnesses.size(); ++i)
    CHECK(r.witnesses[i].identity_distance < r.witnesses[i - 1].identity_distance);
}

TEST_CASE("rational log-ratios are rejected") {
  CHECK_THROWS(wsp_witness_search_exact({0.01, 0.1}, 1e-6, 100));  // log t / log b = 2
  CHECK_THROWS(wsp_witness_search_onepoint({0.02, 0.01, 0.02}, 1e-6, 100));  // = 1
}

TEST_CASE("one-point witnesses reproduce the displayed coefficients") {
  OnePointParams params{0.02, 0.01, 0.025};
  WitnessSearchResult r = wsp_witness_search_onepoint(params, 1e-4, 3000);
  REQUIRE(!r.witnesses.empty());
  const double a = OnePointParams::a;
  for (const WspWitness& w : r.witnesses) {
    if (w.n > 60) continue;  // direct powers stay representable here
    double pm = std::pow(params.p, static_cast<double>(w.m));
    double rn1 = std::pow(params.r, static_cast<double>(w.n + 1));
    double scale = pm * params.q / rn1;
    double offset = (rn1 - pm * params.q) * (1.0 - a) / (rn1 * params.r);
    CHECK(std::abs(w.map_scale - scale) <= 1e-12 * std::max(1.0, std::abs(scale)));
    CHECK(std::abs(w.map_offset - offset) <= 1e-12 * std::max(1.0, std::abs(offset)));
  }
  for (size_t i = 1; i < r.witnesses.size(); ++i)
    CHECK(r.witnesses[i].identity_distance < r.witnesses[i - 1].identity_distance);
}
