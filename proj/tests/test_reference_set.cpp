#include <doctest.h>

#include <cmath>

#include "opeff/reference_set.hpp"
#include "random_support.hpp"

using namespace opeff;

namespace {

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace

TEST_CASE("default reference set has the documented shape") {
  const ReferenceSet set = generate_reference_set(ReferenceSetSpec{});
  REQUIRE(set.groups.size() == 4);
  CHECK(set.groups[0].chain.size() == 8);
  CHECK(set.groups[1].chain.size() == 4);
  CHECK(set.groups[2].chain.size() == 2);
  CHECK(set.groups[3].chain.size() == 2);
  CHECK(set.groups[0].duration == doctest::Approx(2.0));
  CHECK(set.groups[3].duration == doctest::Approx(8.0));
  CHECK(set.groups[1].growth == doctest::Approx(1.21).epsilon(1e-12));

  const double expected[] = {3.3,     3.63,      3.993,     4.3923,
                             4.83153, 5.314683,  5.8461513, 6.43076643};
  for (std::size_t i = 0; i < 8; ++i)
    CHECK(set.groups[0].chain[i].pe ==
          doctest::Approx(expected[i]).epsilon(1e-9));
  CHECK(set.groups[3].chain[0].pe == doctest::Approx(4.3923).epsilon(1e-9));
  CHECK(set.groups[3].chain[1].pe == doctest::Approx(6.43076643).epsilon(1e-9));

  for (const ReferenceGroup& g : set.groups) {
    CHECK(g.chain.front().re == 3.0);
    CHECK(g.chain.front().t_r == 0.0);
    for (std::size_t i = 1; i < g.chain.size(); ++i) {
      CHECK(g.chain[i].re == g.chain[i - 1].pe);  // capitalized exactly
      CHECK(g.chain[i].t_r == g.chain[i - 1].t_p);
    }
  }
}

TEST_CASE("a doubling single-group spec yields the 2, 4, 8 chain") {
  ReferenceSetSpec spec;
  spec.base_re = 1.0;
  spec.base_duration = 1.0;
  spec.base_growth = 2.0;
  spec.group_count = 1;
  spec.horizon = 3.0;
  const ReferenceSet set = generate_reference_set(spec);
  REQUIRE(set.groups.size() == 1);
  REQUIRE(set.groups[0].chain.size() == 3);
  CHECK(set.groups[0].chain[0].pe == doctest::Approx(2.0));
  CHECK(set.groups[0].chain[1].pe == doctest::Approx(4.0));
  CHECK(set.groups[0].chain[2].pe == doctest::Approx(8.0));
}

TEST_CASE("generator rejects invalid specs") {
  ReferenceSetSpec spec;
  spec.base_growth = 1.0;
  CHECK_THROWS_WITH_AS(generate_reference_set(spec),
                       doctest::Contains("growth must exceed 1"), InvalidSpec);
  spec = ReferenceSetSpec{};
  spec.base_re = 0.0;
  CHECK_THROWS_AS(generate_reference_set(spec), InvalidSpec);
  spec = ReferenceSetSpec{};
  spec.group_count = 0;
  CHECK_THROWS_AS(generate_reference_set(spec), InvalidSpec);
  spec = ReferenceSetSpec{};
  spec.horizon = 7.0;  // slowest group could not complete one operation
  CHECK_THROWS_AS(generate_reference_set(spec), InvalidSpec);
}

TEST_CASE("chain capitals follow the geometric law") {
  const ReferenceSet set = generate_reference_set(ReferenceSetSpec{});
  for (const ReferenceGroup& g : set.groups)
    for (std::size_t i = 0; i < g.chain.size(); ++i) {
      const double expected =
          3.0 * std::pow(1.1, static_cast<double>((i + 1) * g.index));
      CHECK(close_rel(g.chain[i].pe, expected, 1e-12));
    }
}

TEST_CASE("cross-group capital matches of the default set") {
  const ReferenceSet set = generate_reference_set(ReferenceSetSpec{});
  const std::vector<CapitalMatch> matches = verify_reference_set(set);
  REQUIRE(matches.size() == 5);
  CHECK(matches[0].time == doctest::Approx(4.0));
  CHECK(matches[1].time == doctest::Approx(6.0));
  CHECK(matches[2].time == doctest::Approx(8.0));
  CHECK(matches[3].time == doctest::Approx(12.0));
  CHECK(matches[4].time == doctest::Approx(16.0));

  // t = 12: groups 1, 2 and 3 all hold the same capital
  const CapitalMatch& twelve = matches[3];
  REQUIRE(twelve.capitals.size() == 3);
  CHECK(twelve.capitals[0].first == 1);
  CHECK(twelve.capitals[1].first == 2);
  CHECK(twelve.capitals[2].first == 3);
  for (const auto& [group, capital] : twelve.capitals)
    CHECK(capital == doctest::Approx(5.314683).epsilon(1e-9));

  // t = 8: groups 1, 2 and 4
  const CapitalMatch& eight = matches[2];
  REQUIRE(eight.capitals.size() == 3);
  CHECK(eight.capitals[0].first == 1);
  CHECK(eight.capitals[1].first == 2);
  CHECK(eight.capitals[2].first == 4);
  for (const auto& [group, capital] : eight.capitals)
    CHECK(capital == doctest::Approx(4.3923).epsilon(1e-9));

  for (const CapitalMatch& m : matches) CHECK(m.max_rel_deviation <= 1e-12);
}

TEST_CASE("single-group sets have no cross-group matches") {
  ReferenceSetSpec spec;
  spec.group_count = 1;
  spec.horizon = 8.0;
  CHECK(verify_reference_set(generate_reference_set(spec)).empty());
}

TEST_CASE("output-value calibration reproduces the worked figure") {
  CHECK(calibrate_output_value(3.0, 4.0, 0.002272727) ==
        doctest::Approx(3.6292174).epsilon(3e-7));
  CHECK(calibrate_output_value(2.0, 1.0, 1.0 / 6) ==
        doctest::Approx(3.0).epsilon(1e-12));
  CHECK_THROWS_AS(calibrate_output_value(5.0, 2.0, 0.0), InvalidTarget);
  CHECK_THROWS_AS(calibrate_output_value(0.0, 2.0, 0.1), NonPositiveValue);
  CHECK_THROWS_AS(calibrate_output_value(5.0, 0.0, 0.1), ZeroDuration);
}

TEST_CASE("calibration round-trips through efficiency_potential") {
  testutil::Rng rng(31);
  for (int i = 0; i < 500; ++i) {
    const double re = testutil::log_uniform(rng, 0.01, 100.0);
    const double t_op = testutil::log_uniform(rng, 0.01, 20.0);
    const double target = testutil::log_uniform(rng, 1e-6, 10.0);
    const double pe = calibrate_output_value(re, t_op, target);
    CHECK(pe > re);
    const double back = efficiency_potential(make_lumped(re, pe, 0.0, t_op));
    CHECK(close_rel(back, target, 1e-9));
  }
}

TEST_CASE("extend_chain reinvests the released value") {
  const LumpedOperation next = extend_chain(make_lumped(3.0, 3.63, 0.0, 4.0));
  CHECK(next.re == 3.63);
  CHECK(next.pe == doctest::Approx(4.3923).epsilon(1e-12));
  CHECK(next.t_r == 4.0);
  CHECK(next.t_p == 8.0);

  const LumpedOperation doubling = extend_chain(make_lumped(1.0, 2.0, 0.0, 1.0));
  CHECK(doubling.re == 2.0);
  CHECK(doubling.pe == doctest::Approx(4.0));
  CHECK(doubling.t_r == 1.0);
  CHECK(doubling.t_p == 2.0);

  CHECK_THROWS_AS(extend_chain(make_lumped(1.0, 1.0, 0.0, 1.0)), NoValueAdded);

  const LumpedOperation base = make_lumped(3.0, 3.63, 0.0, 8.0);
  CHECK(close_rel(efficiency_potential(base),
                  efficiency_potential(extend_chain(base)), 1e-12));
}

TEST_CASE("group efficiencies grow with the group index before calibration") {
  const ReferenceSet set = generate_reference_set(ReferenceSetSpec{});
  double prev = 0.0;
  for (const ReferenceGroup& g : set.groups) {
    const double e = efficiency_potential(g.chain.front());
    CHECK(e > prev);
    prev = e;
  }
}

TEST_CASE("calibration aligns every group with group 1") {
  const ReferenceSet set = generate_reference_set(ReferenceSetSpec{});
  const ReferenceSet calibrated = calibrate_reference_set(set);
  REQUIRE(calibrated.groups.size() == 4);
  CHECK(calibrated.groups[0].chain == set.groups[0].chain);

  // the worked calibration figure: group 2's first released value
  CHECK(calibrated.groups[1].chain.front().pe ==
        doctest::Approx(3.6292174).epsilon(3e-7));

  const double target = efficiency_potential(set.groups[0].chain.front());
  for (const ReferenceGroup& g : calibrated.groups) {
    CHECK(g.chain.size() == set.groups[static_cast<std::size_t>(g.index - 1)]
                                .chain.size());
    for (const LumpedOperation& op : g.chain)
      CHECK(close_rel(efficiency_potential(op), target, 1e-9));
    for (std::size_t i = 1; i < g.chain.size(); ++i)
      CHECK(g.chain[i].re == g.chain[i - 1].pe);
  }
}
