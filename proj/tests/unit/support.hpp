#pragma once

#include <random>
#include <string>
#include <vector>

#include "slicekit/instance.hpp"
#include "slicekit/rational.hpp"

namespace testing {

inline std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name + ".json"; }

inline slicekit::ProblemInstance load(const std::string& name) { return slicekit::load_instance(fixture(name)); }

inline slicekit::ProblemInstance cc() { return slicekit::ProblemInstance(3, {{0, 2}, {0, 2}}, {-1, 1}); }

inline slicekit::Rational q(long p, long d = 1) { return slicekit::make_rational(p, d); }

// Small random instance: n in [2, max_n], l in [1, max_l], coefficients in [-3, 3] \ {0}.
inline slicekit::ProblemInstance random_instance(std::mt19937_64& rng, int max_n = 6, int max_l = 2) {
  std::uniform_int_distribution<int> base(2, max_n), dims(1, max_l), coin(0, 1), coef(-3, 2);
  const int n = base(rng), l = dims(rng);
  std::vector<slicekit::DigitSet> sets;
  std::vector<std::int64_t> m;
  for (int i = 0; i < l; ++i) {
    slicekit::DigitSet s;
    for (int d = 0; d < n; ++d)
      if (coin(rng)) s.push_back(d);
    if (s.empty()) s.push_back(std::uniform_int_distribution<int>(0, n - 1)(rng));
    sets.push_back(s);
    const int c = coef(rng);
    m.push_back(c >= 0 ? c + 1 : c);
  }
  return slicekit::ProblemInstance(n, sets, m);
}

// Random rational in [lo, hi] with denominator up to max_den.
inline slicekit::Rational random_point(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi, long max_den = 60) {
  const long den = std::uniform_int_distribution<long>(1, max_den)(rng);
  const long num = std::uniform_int_distribution<long>(lo * den, hi * den)(rng);
  return slicekit::make_rational(num, den);
}

}  // namespace testing
