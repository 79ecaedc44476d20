#include <doctest.h>

#include <algorithm>
#include <random>

#include "slicekit/lattice.hpp"
#include "support.hpp"

using namespace slicekit;
using testing::q;

TEST_CASE("integer intervals") {
  auto ivs = enumerate_integer_intervals(testing::cc());
  REQUIRE(ivs.size() == 6);
  for (std::size_t k = 0; k < ivs.size(); ++k) {
    CHECK(ivs[k].u == static_cast<std::int64_t>(k) - 3);
    CHECK(ivs[k].display_label == static_cast<std::int64_t>(k));
  }
  CHECK(enumerate_integer_intervals(testing::load("ex5")).size() == 9);
  ivs = enumerate_integer_intervals(ProblemInstance(2, {{0, 1}}, {1}));
  REQUIRE(ivs.size() == 2);
  CHECK(ivs[0].u == 0);
  CHECK(ivs[1].u == 1);
}

TEST_CASE("working intervals") {
  const auto ws = working_intervals(testing::load("ex3"));
  REQUIRE(ws.size() == 3);
  CHECK(ws.front().t == -2);
  CHECK(ws.back().t == 0);
}

TEST_CASE("covering condition") {
  CHECK(covering_condition(testing::cc()));
  CHECK(covering_condition(testing::load("ex3")));
  CHECK_FALSE(covering_condition(testing::load("cover_counterexample")));
}

TEST_CASE("projection intervals of the counterexample leave the stated gaps") {
  const auto inst = testing::load("cover_counterexample");
  std::vector<std::pair<Rational, Rational>> spans;
  for (std::int64_t w : {0, 3, 6}) spans.push_back(projection_interval(inst, w));
  CHECK(spans[0].second == q(1, 2));
  CHECK(spans[1].first == q(3, 4));
  CHECK(spans[1].second == q(5, 4));
  CHECK(spans[2].first == q(3, 2));
}

TEST_CASE("strong separation") {
  CHECK(strong_separation(ProblemInstance(3, {{0, 2}}, {1})) == std::vector<bool>{true});
  CHECK(strong_separation(ProblemInstance(7, {{0, 3, 4, 6}}, {1})) == std::vector<bool>{false});
  CHECK(strong_separation(ProblemInstance(2, {{0, 1}}, {1})) == std::vector<bool>{false});
  CHECK(strong_separation(testing::load("ex4")) == std::vector<bool>{true, false});
}

TEST_CASE("type assignment") {
  const Lattice lat(testing::cc());
  auto ta = type_assignment(lat, -3);
  REQUIRE(ta.entries.size() == 1);
  CHECK(ta.entries[0].type == -1);
  CHECK(ta.entries[0].cube.digits == std::vector<Digit>{2, 0});

  ta = type_assignment(lat, -1);
  REQUIRE(ta.entries.size() == 2);
  CHECK(ta.entries[0].type == -1);
  CHECK(ta.entries[1].type == -1);
  std::vector<std::vector<Digit>> cubes{ta.entries[0].cube.digits, ta.entries[1].cube.digits};
  std::sort(cubes.begin(), cubes.end());
  CHECK(cubes == std::vector<std::vector<Digit>>{{0, 0}, {2, 2}});

  // [2/4, 3/4] sits in a covering gap.
  CHECK(type_assignment(testing::load("cover_counterexample"), 2).entries.empty());
}

TEST_CASE("Xi sets") {
  auto labels = [](const std::vector<IntegerInterval>& xs) {
    std::vector<std::int64_t> out;
    for (const auto& x : xs) out.push_back(x.display_label);
    return out;
  };
  CHECK(labels(xi_set(testing::cc())) == std::vector<std::int64_t>{0, 1, 4, 5});
  CHECK(labels(xi_set(testing::load("ex1b"))) == std::vector<std::int64_t>{0, 1, 4, 5});
  CHECK(xi_set(testing::load("ex3")).size() == 7);

  // Ascending-u labels; the reference labelling counts
  // intervals from the other end, l -> 11 - l.
  const auto ex4 = labels(xi_set(testing::load("ex4")));
  CHECK(ex4 == std::vector<std::int64_t>{0, 1, 2, 3, 4, 8, 9, 11});
  std::vector<std::int64_t> mirrored;
  for (auto l : ex4) mirrored.push_back(11 - l);
  std::sort(mirrored.begin(), mirrored.end());
  CHECK(mirrored == std::vector<std::int64_t>{0, 2, 3, 7, 8, 9, 10, 11});
}

TEST_CASE("containment and type agree on random instances") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 60; ++k) {
    const auto inst = testing::random_instance(rng, 5, 2);
    const Lattice lat(inst);
    const auto cubes = lat.all_cubes();
    for (const auto& iv : lat.intervals()) {
      const Rational left = q(iv.u, inst.base()), right = q(iv.u + 1, inst.base());
      std::size_t inside = 0;
      for (const auto& c : cubes) {
        const auto [lo, hi] = projection_interval(inst, c.weight);
        const bool contained = lo <= left && right <= hi;
        const auto t = iv.u - c.weight;
        CHECK(contained == (t >= inst.m_lower() && t <= inst.m_upper() - 1));
        inside += contained;
      }
      CHECK(type_assignment(lat, iv.u).entries.size() == inside);
      CHECK(lat.cover_count(iv.u) == inside);
    }
  }
}

TEST_CASE("covering agrees with dense sampling") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 60; ++k) {
    const auto inst = testing::random_instance(rng, 5, 2);
    const Lattice lat(inst);
    std::vector<std::pair<Rational, Rational>> spans;
    for (const auto& [w, count] : lat.weight_histogram()) spans.push_back(projection_interval(inst, w));
    std::vector<Rational> points;
    const long n = inst.base();
    // Interval endpoints and midpoints at resolution 1/(4n).
    for (long a = inst.m_lower() * 4 * n; a <= inst.m_upper() * 4 * n; ++a) points.push_back(q(a, 4 * n));
    bool all = true;
    for (const auto& x : points)
      all = all && std::any_of(spans.begin(), spans.end(), [&](const auto& s) { return s.first <= x && x <= s.second; });
    CHECK(covering_condition(lat) == all);
  }
}
