#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "slicekit/error.hpp"
#include "slicekit/graphs.hpp"
#include "slicekit/spectral.hpp"
#include "support.hpp"

using namespace slicekit;

namespace {

using Rows = std::vector<std::vector<long>>;

CountMatrix xi_matrix(const std::string& name) { return build_xi_graph(Lattice(testing::load(name))).matrix; }

CountMatrix descending(const CountMatrix& m) {
  std::vector<std::size_t> order(m.size());
  std::iota(order.rbegin(), order.rend(), std::size_t{0});
  return m.permuted(order);
}

bool encloses(const RadiusResult& r, double value) { return r.lower.get_d() <= value + 1e-12 && value - 1e-12 <= r.upper.get_d(); }

}  // namespace

TEST_CASE("transition matrices of -2C+C") {
  const auto ts = transition_matrices(testing::load("ex5"));
  REQUIRE(ts.size() == 3);
  CHECK(ts[0] == CountMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}, -2));
  CHECK(ts[1] == CountMatrix::from_rows({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}, -2));
  CHECK(ts[2] == CountMatrix::from_rows({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}, -2));
}

TEST_CASE("transition matrices of -K1+K2") {
  const auto ts = transition_matrices(testing::load("ex6"));
  REQUIRE(ts.size() == 6);
  const std::vector<Rows> reference{{{1, 0}, {1, 2}}, {{0, 1}, {1, 1}}, {{1, 0}, {0, 1}},
                                  {{0, 1}, {1, 0}}, {{1, 0}, {1, 1}}, {{2, 1}, {0, 1}}};
  for (std::size_t j = 0; j < 6; ++j) CHECK(ts[j] == CountMatrix::from_rows(reference[j], -1));
}

TEST_CASE("transition matrices of C-C") {
  const auto ts = transition_matrices(testing::cc());
  REQUIRE(ts.size() == 3);
  CHECK(ts[0] == CountMatrix::from_rows({{1, 0}, {0, 2}}, -1));
  CHECK(ts[1] == CountMatrix::from_rows({{0, 1}, {1, 0}}, -1));
  CHECK(ts[2] == CountMatrix::from_rows({{2, 0}, {0, 1}}, -1));
  CHECK(ts[0].entry(0, 0) == 2);
}

TEST_CASE("row sums of T_j count the covering cubes") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 60; ++k) {
    const Lattice lat(testing::random_instance(rng, 6, 3));
    const auto& inst = lat.instance();
    const auto ts = transition_matrices(lat);
    REQUIRE(ts.size() == static_cast<std::size_t>(inst.base()));
    for (std::int64_t j = 0; j < inst.base(); ++j)
      for (std::int64_t u = inst.m_lower(); u < inst.m_upper(); ++u) {
        BigInt row = 0;
        for (std::int64_t v = inst.m_lower(); v < inst.m_upper(); ++v) row += ts[j].entry(u, v);
        CHECK(row == lat.cover_count(inst.base() * u + j));
      }
  }
}

TEST_CASE("M of C-C and C+C") {
  const CountMatrix reference = CountMatrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 1, 0, 0}, {0, 0, 1, 1}});
  CHECK(xi_matrix("ex1") == reference);
  CHECK(xi_matrix("ex1b") == reference);
  const auto r = spectral_radius(reference);
  CHECK(encloses(r, 2.0));
  CHECK(r.width() <= Rational(1, 1000000000));
  CHECK(irreducible(reference));
}

TEST_CASE("M for base 7, {0,3,4,6}, m=(-2,1), descending order") {
  const auto m = xi_matrix("ex3");
  const CountMatrix reference = CountMatrix::from_rows({{1, 1, 1, 0, 0, 0, 0},
                                                     {0, 0, 0, 0, 0, 0, 0},
                                                     {0, 0, 0, 1, 1, 1, 1},
                                                     {0, 0, 0, 1, 1, 1, 1},
                                                     {1, 1, 1, 0, 0, 0, 0},
                                                     {0, 0, 0, 0, 0, 0, 0},
                                                     {0, 0, 0, 1, 1, 1, 1}});
  CHECK(descending(m) == reference);
  CHECK_FALSE(irreducible(m));
  const double golden = (3.0 + std::sqrt(5.0)) / 2.0;
  const auto r = spectral_radius(m);
  CHECK(encloses(r, golden));
  CHECK(std::abs(r.estimate - golden) < 1e-9);

  // x^2 - 3x + 1 divides the characteristic polynomial: check via exact
  // polynomial remainder.
  auto p = characteristic_polynomial(m);
  for (std::size_t deg = p.size() - 1; deg >= 2; --deg) {
    const BigInt lead = p[deg];
    p[deg] = 0;
    p[deg - 1] += 3 * lead;
    p[deg - 2] -= lead;
  }
  CHECK(p[0] == 0);
  CHECK(p[1] == 0);
}

TEST_CASE("M for base 6, {0,3,5} x {0,4,5}, descending order") {
  const auto m = xi_matrix("ex4");
  Rows rows;
  for (int i = 0; i < 8; ++i)
    rows.push_back(i % 2 == 0 ? std::vector<long>{1, 1, 1, 0, 0, 0, 0, 0} : std::vector<long>{0, 0, 0, 1, 1, 1, 1, 1});
  CHECK(descending(m) == CountMatrix::from_rows(rows));
  const auto r = spectral_radius(m);
  CHECK(encloses(r, 4.0));
  CHECK(r.width() <= Rational(1, 1000000000));
}

TEST_CASE("characteristic polynomial") {
  const auto p = characteristic_polynomial(CountMatrix::from_rows({{1, 1}, {1, 0}}));
  REQUIRE(p.size() == 3);
  CHECK(p[0] == -1);
  CHECK(p[1] == -1);
  CHECK(p[2] == 1);
  const auto q = characteristic_polynomial(CountMatrix::from_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, 0}}));
  CHECK(q == std::vector<BigInt>{0, 6, -5, 1});
}

TEST_CASE("zero and nilpotent matrices have radius zero") {
  const auto z = spectral_radius(CountMatrix::from_rows({{0, 0}, {0, 0}}));
  CHECK(z.exact());
  CHECK(z.upper == 0);
  const auto n = spectral_radius(CountMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
  CHECK(n.upper == 0);
  CHECK(spectral_radius(CountMatrix()).upper == 0);
}

TEST_CASE("irreducibility") {
  CHECK_FALSE(irreducible(CountMatrix::from_rows({{0}})));
  CHECK(irreducible(CountMatrix::from_rows({{3}})));
  CHECK(irreducible(CountMatrix::from_rows({{0, 1}, {1, 0}})));
  CHECK_FALSE(irreducible(CountMatrix::from_rows({{1, 1}, {0, 1}})));
}

TEST_CASE("periodic and reducible radii") {
  CHECK(encloses(spectral_radius(CountMatrix::from_rows({{0, 1}, {4, 0}})), 2.0));
  CHECK(encloses(spectral_radius(CountMatrix::from_rows({{1, 1, 0}, {0, 3, 0}, {0, 0, 2}})), 3.0));
  CHECK(encloses(spectral_radius(CountMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})), 1.0));
}

TEST_CASE("radius is invariant under simultaneous permutation") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> cell(0, 2);
  for (int k = 0; k < 40; ++k) {
    const std::size_t size = 2 + k % 5;
    Rows rows(size, std::vector<long>(size));
    for (auto& row : rows)
      for (auto& c : row) c = cell(rng) == 2 ? cell(rng) : 0;
    const auto m = CountMatrix::from_rows(rows);
    std::vector<std::size_t> order(size);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    const auto a = spectral_radius(m), b = spectral_radius(m.permuted(order));
    CHECK(std::abs(a.estimate - b.estimate) < 1e-9);
    CHECK(a.lower <= b.upper);
    CHECK(b.lower <= a.upper);
    const auto cmp = compare_radii(m, a, m.permuted(order), b);
    CHECK(cmp.equal);
    CHECK(cmp.basis == Verdict::Exact);
  }
}

TEST_CASE("radius comparison") {
  const auto a = CountMatrix::from_rows({{1, 1}, {1, 1}});
  const auto b = CountMatrix::from_rows({{2}});
  const auto c = CountMatrix::from_rows({{1, 1}, {1, 0}});
  auto cmp = compare_radii(a, spectral_radius(a), b, spectral_radius(b));
  CHECK(cmp.equal);
  CHECK(cmp.basis == Verdict::Exact);
  cmp = compare_radii(a, spectral_radius(a), c, spectral_radius(c));
  CHECK_FALSE(cmp.equal);
  cmp = compare_radii(a, spectral_radius(a), b, spectral_radius(b), kDefaultRadiusTolerance, 0);
  CHECK(cmp.equal);
  CHECK(cmp.basis == Verdict::Tolerance);
}

TEST_CASE("impossible tolerance raises WideEnclosure") {
  const auto m = CountMatrix::from_rows({{1, 1}, {1, 0}});
  try {
    spectral_radius(m, 0.0);
    FAIL("expected WideEnclosure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WideEnclosure);
  }
}

TEST_CASE("matrix helpers") {
  const auto m = CountMatrix::from_rows({{1, 2}, {0, 3}}, -1);
  CHECK(m.entry(-1, 0) == 2);
  CHECK(m.left_multiply({1, 1}) == std::vector<BigInt>{1, 5});
  CHECK(m.pattern().has_edge(0, 1));
  CHECK_FALSE(m.pattern().has_edge(1, 0));
  CHECK_FALSE(m.is_zero());
  CHECK_THROWS_AS(CountMatrix::from_rows({{1, 2}}), Error);
}
