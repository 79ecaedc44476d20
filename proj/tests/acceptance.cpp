// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <cmath>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <numeric>
#include <random>
#include <sstream>

#include "slicekit/analysis.hpp"
#include "slicekit/cli.hpp"
#include "slicekit/oracle.hpp"

using namespace slicekit;

namespace {

using Rows = std::vector<std::vector<long>>;

ProblemInstance fixture(const std::string& name) { return load_instance(std::string(FIXTURE_DIR) + "/" + name + ".json"); }

// Collects the failed sub-checks of one criterion.
struct Checker {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

CountMatrix descending(const CountMatrix& m) {
  std::vector<std::size_t> order(m.size());
  std::iota(order.rbegin(), order.rend(), std::size_t{0});
  return m.permuted(order);
}

bool near(double a, double b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

bool encloses(const RadiusResult& r, double value, double width) {
  return r.lower.get_d() <= value + 1e-12 && value - 1e-12 <= r.upper.get_d() && r.width().get_d() <= width;
}

Rational random_non_nadic(std::mt19937_64& rng, const ProblemInstance& inst) {
  for (;;) {
    const long den = std::uniform_int_distribution<long>(2, 97)(rng);
    const long num = std::uniform_int_distribution<long>(inst.m_lower() * den, inst.m_upper() * den)(rng);
    const Rational x = make_rational(num, den);
    if (!is_nadic(x, inst.base())) return x;
  }
}

void criterion1(Checker& c) {
  const Model model(fixture("ex1"));
  std::vector<std::int64_t> us;
  for (const auto& v : model.xi().vertices) us.push_back(v.u);
  c.expect(us == std::vector<std::int64_t>{-3, -2, 1, 2}, "Xi u-values");
  c.expect(model.xi().matrix == CountMatrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 1, 0, 0}, {0, 0, 1, 1}}), "M");
  c.expect(encloses(model.rho(), 2.0, 1e-9), "rho(M) enclosure");
  const auto u1 = measure_u1(model);
  c.expect(u1.s && near(*u1.s, std::log(2.0) / std::log(3.0)), "dim U_1");
  c.expect(u1.measure_class == MeasureClass::PositiveFinite, "measure class");
}

void criterion2(Checker& c) {
  const Model a(fixture("ex1")), b(fixture("ex1b"));
  c.expect(a.xi().matrix == b.xi().matrix, "same M");
  c.expect(encloses(b.rho(), 2.0, 1e-9), "rho(M) = 2");
}

void criterion3(Checker& c) {
  const Model model(fixture("ex3"));
  c.expect(model.covering(), "covering");
  c.expect(!model.ssc(), "SSC false");
  c.expect(model.xi().vertices.size() == 7, "|Xi| = 7");
  const auto reference = CountMatrix::from_rows({{1, 1, 1, 0, 0, 0, 0},
                                               {0, 0, 0, 0, 0, 0, 0},
                                               {0, 0, 0, 1, 1, 1, 1},
                                               {0, 0, 0, 1, 1, 1, 1},
                                               {1, 1, 1, 0, 0, 0, 0},
                                               {0, 0, 0, 0, 0, 0, 0},
                                               {0, 0, 0, 1, 1, 1, 1}});
  c.expect(descending(model.xi().matrix) == reference, "M (descending u order)");
  const double golden = (3.0 + std::sqrt(5.0)) / 2.0;
  c.expect(near(model.rho().estimate, golden) && encloses(model.rho(), golden, 1e-9), "rho(M)");
  const auto u1 = dim_u1(model);
  c.expect(u1.s && near(*u1.s, std::log(golden) / std::log(7.0)), "dim U_1");
  c.expect(!irreducible(model.xi().matrix), "M reducible");
}

void criterion4(Checker& c) {
  const Model model(fixture("ex4"));
  c.expect(model.xi().vertices.size() == 8, "|Xi| = 8");
  Rows rows;
  for (int i = 0; i < 8; ++i)
    rows.push_back(i % 2 == 0 ? std::vector<long>{1, 1, 1, 0, 0, 0, 0, 0} : std::vector<long>{0, 0, 0, 1, 1, 1, 1, 1});
  c.expect(descending(model.xi().matrix) == CountMatrix::from_rows(rows), "M (descending u order)");
  c.expect(encloses(model.rho(), 4.0, 1e-9), "rho(M) = 4");
  const auto u1 = measure_u1(model);
  c.expect(u1.s && near(*u1.s, std::log(4.0) / std::log(6.0)), "dim U_1");
  c.expect(u1.s && *u1.s > std::log(3.0) / std::log(6.0), "dim U_1 > log3/log6");
  c.expect(u1.measure_class == MeasureClass::PositiveFinite,
           "measure class PositiveFinite (got " + to_string(u1.measure_class) + "; A2={0,4,5} has 5-4=1, SSC fails)");
}

void criterion5(Checker& c) {
  const auto t5 = transition_matrices(fixture("ex5"));
  const std::vector<Rows> p5{{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}, {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}};
  c.expect(t5.size() == 3, "three T_j for -2C+C");
  for (std::size_t j = 0; j < p5.size() && j < t5.size(); ++j)
    c.expect(t5[j] == CountMatrix::from_rows(p5[j], -2), "-2C+C T_" + std::to_string(j));
  const auto t6 = transition_matrices(fixture("ex6"));
  const std::vector<Rows> p6{{{1, 0}, {1, 2}}, {{0, 1}, {1, 1}}, {{1, 0}, {0, 1}},
                             {{0, 1}, {1, 0}}, {{1, 0}, {1, 1}}, {{2, 1}, {0, 1}}};
  c.expect(t6.size() == 6, "six T_j for -K1+K2");
  for (std::size_t j = 0; j < p6.size() && j < t6.size(); ++j)
    c.expect(t6[j] == CountMatrix::from_rows(p6[j], -1), "-K1+K2 T_" + std::to_string(j));
}

void criterion6(Checker& c) {
  const auto cc = fixture("ex1");
  const Rational x = make_rational(1, 3);
  const auto card = exact_card(cc, x);
  c.expect(card.verdict == CardVerdict::Finite && card.value == 3, "exact_card = Finite(3)");
  for (std::size_t k = 2; k <= 8; ++k) c.expect(brute_force_cube_count(cc, x, k) == 3, "oracle count at k=" + std::to_string(k));
  const auto chains = brute_force_solutions(cc, x, 2);
  const std::vector<std::vector<std::vector<Digit>>> expected{{{0, 0}, {0, 2}}, {{0, 2}, {2, 0}}, {{2, 2}, {0, 2}}};
  std::vector<std::vector<std::vector<Digit>>> got;
  for (const auto& ch : chains) got.push_back(ch.digits);
  c.expect(got == expected, "three certificates at k=2");
}

void criterion7(Checker& c) {
  std::mt19937_64 rng(20240607);
  for (const auto& name : {"ex1", "ex1b", "ex3", "ex4"}) {
    const Lattice lat(fixture(name));
    if (!covering_condition(lat)) continue;
    const auto ts = transition_matrices(lat);
    for (int s = 0; s < 100; ++s) {
      const Rational x = random_non_nadic(rng, lat.instance());
      for (std::size_t k = 0; k <= 7; ++k)
        if (norm1(cube_count_vector(lat, ts, x, k)) != brute_force_cube_count(lat.instance(), x, k)) {
          c.expect(false, std::string(name) + " x=" + to_string(x) + " k=" + std::to_string(k));
          return;
        }
    }
  }
}

void criterion8(Checker& c) {
  const Model model(fixture("ex1"));
  const auto search = enumerate_achievable_r(model, 6);
  std::vector<std::int64_t> achievable;
  for (const auto& e : search.entries)
    if (e.status == RStatus::Achievable) achievable.push_back(e.r);
  c.expect(achievable == std::vector<std::int64_t>{1, 2, 4}, "Achievable = {1,2,4}");
  c.expect(search.entry(3).status == RStatus::OnlyOnCountableSet, "r=3 OnlyOnCountableSet");
  const double s = std::log(2.0) / std::log(3.0);
  for (std::int64_t r : {2, 4}) {
    const auto d = dim_ur(model, search, r);
    c.expect(d.d_r && near(*d.d_r, s), "dim_ur(" + std::to_string(r) + ")");
  }
  c.expect(measure_ur(model, search, 2).measure_class == MeasureClass::Infinite, "measure_ur(2) = Infinite");
  for (std::int64_t r : {2, 4}) {
    const auto w = witness_ur(model, search, r);
    const auto card = exact_card(model.lattice(), w.x);
    c.expect(card.verdict == CardVerdict::Finite && card.value == r, "exact_card(witness_ur(" + std::to_string(r) + "))");
  }
}

void criterion9(Checker& c) {
  const auto inst = fixture("cover_counterexample");
  c.expect(!covering_condition(inst), "covering false");
  bool found = false;
  for (long num = 0; num <= 2 * 64 && !found; ++num) {
    const Rational x = make_rational(num, 64);
    for (std::size_t k = 0; k < 5 && !found; ++k)
      found = brute_force_cube_count(inst, x, k + 1) < brute_force_cube_count(inst, x, k);
  }
  c.expect(found, "a decrease of cube counts");
}

void criterion10(Checker& c) {
  std::mt19937_64 rng(777);
  for (const auto& name : {"ex1", "ex1b", "ex3", "ex4", "ex5"}) {
    const auto inst = fixture(name);
    for (int s = 0; s < 100; ++s) {
      const long den = std::uniform_int_distribution<long>(1, 97)(rng);
      const Rational x = make_rational(std::uniform_int_distribution<long>(inst.m_lower() * den, inst.m_upper() * den)(rng), den);
      std::uint64_t prev = 0;
      for (std::size_t k = 0; k <= 7; ++k) {
        const auto n = brute_force_cube_count(inst, x, k);
        if (n < prev) {
          c.expect(false, std::string(name) + " x=" + to_string(x) + " k=" + std::to_string(k));
          return;
        }
        prev = n;
      }
    }
  }
}

void criterion11(Checker& c) {
  const Lattice cc(fixture("ex1"));
  const auto a = lyapunov_estimate(cc, 10000, 1000, 1), b = lyapunov_estimate(cc, 10000, 1000, 1);
  c.expect(a.estimate == b.estimate, "same seed, same estimate");
  c.expect(lyapunov_estimate(Lattice(fixture("trivial")), 1000, 1000, 1).estimate == 0.0, "trivial instance = 0");
  for (std::uint64_t seed : {2, 3}) {
    const auto e = lyapunov_estimate(cc, 10000, 1000, seed);
    c.expect(std::abs(e.estimate - a.estimate) <= 0.01, "cross-seed stability, seed " + std::to_string(seed));
  }
}

void criterion12(Checker& c) {
  for (const auto& name : {"ex1", "ex1b", "ex3", "ex4", "ex5", "ex6", "cube3", "trivial", "cover_counterexample",
                           "undominated"}) {
    std::string runs[2];
    for (auto& text : runs) {
      std::ostringstream out, err;
      const int code = run({"analyze", std::string(FIXTURE_DIR) + "/" + name + ".json"}, out, err);
      auto j = nlohmann::ordered_json::parse(out.str());
      j.erase("meta");
      text = std::to_string(code) + j.dump();
    }
    c.expect(runs[0] == runs[1], name);
  }
}

}  // namespace

int main() {
  const std::vector<std::function<void(Checker&)>> criteria{criterion1, criterion2, criterion3,  criterion4,
                                                            criterion5, criterion6, criterion7,  criterion8,
                                                            criterion9, criterion10, criterion11, criterion12};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Checker c;
    try {
      criteria[k](c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (c.failures.empty() ? "PASS" : "FAIL") << " criterion " << k + 1;
    if (!c.failures.empty()) {
      ++failed;
      std::cout << ":";
      for (const auto& f : c.failures) std::cout << " [" << f << "]";
    }
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}
