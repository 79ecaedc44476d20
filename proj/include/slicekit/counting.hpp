#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "slicekit/lattice.hpp"
#include "slicekit/rational.hpp"
#include "slicekit/spectral.hpp"

namespace slicekit {

/// x = integer_part + 0.j1 j2 ... in base n. For rationals the digits are
/// preperiod followed by period repeated forever; terminating expansions
/// (boundary points q1/n^q2) have period {0}.
struct NadicExpansion {
  BigInt integer_part;
  std::vector<Digit> prefix;
  std::vector<Digit> preperiod;
  std::vector<Digit> period;
  bool boundary = false;

  /// Digit j_k, k >= 1.
  Digit digit(std::size_t k) const;
};

/// No range check; any rational x.
NadicExpansion nadic_expansion(std::int64_t base, const Rational& x, std::size_t depth);
/// Throws OutOfRange unless m_* <= x <= m^*.
NadicExpansion nadic_expansion(const ProblemInstance& inst, const Rational& x, std::size_t depth);

/// Inverse of the periodic description.
Rational expansion_value(std::int64_t base, const BigInt& integer_part, const std::vector<Digit>& preperiod,
                         const std::vector<Digit>& period);

/// e_i T_{j1} ... T_{jk} for the expansion of x; entries indexed from m_*.
/// Requires covering (CoveringRequired) and a non-boundary x (BoundaryPoint).
std::vector<BigInt> cube_count_vector(const Lattice& lattice, const std::vector<CountMatrix>& transitions,
                                      const Rational& x, std::size_t depth);
std::vector<BigInt> cube_count_vector(const ProblemInstance& inst, const Rational& x, std::size_t depth);

BigInt norm1(const std::vector<BigInt>& v);

/// Multiset of offsets r = n^k x - (m-weighted digit prefix) of the
/// surviving rank-k chains, stored as offset -> multiplicity.
struct SliceState {
  std::map<Rational, BigInt> offsets;
  std::size_t depth = 0;

  BigInt cardinality() const;
};

SliceState initial_state(const Rational& x);
/// One step: each chain at offset r branches to n r - w for every cube
/// weight w with n r - w in [m_*, m^*] (closed).
SliceState advance(const Lattice& lattice, const SliceState& state);

enum class CardVerdict { Finite, Infinite, ExceedsBudget };

struct CardResult {
  CardVerdict verdict = CardVerdict::ExceedsBudget;
  /// r for Finite; the cardinality at the stopping depth otherwise.
  BigInt value;
  std::size_t depth_reached = 0;
  /// The state at cycle_start recurs (Finite) or is strictly dominated on
  /// the same support (Infinite) at cycle_start + cycle_length.
  std::size_t cycle_start = 0;
  std::size_t cycle_length = 0;
  std::vector<BigInt> cardinalities;
};

inline constexpr std::uint64_t kDefaultCardBudget = 4096;

/// Exact Card(S_x) for rational x. Requires covering and strong separation
/// (HypothesisViolated). max_depth = 0 selects 64 * (preperiod + period).
CardResult exact_card(const Lattice& lattice, const Rational& x, std::uint64_t budget = kDefaultCardBudget,
                      std::size_t max_depth = 0);
CardResult exact_card(const ProblemInstance& inst, const Rational& x, std::uint64_t budget = kDefaultCardBudget,
                      std::size_t max_depth = 0);

std::string to_string(CardVerdict v);

struct LyapunovEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
};

/// Mean over samples of log ||e_i T_{x1} ... T_{xk}||_1 / (k log n) with i
/// and the digits drawn uniformly. Sample s draws from its own generator
/// seeded by (seed, s), so the result does not depend on the thread count.
LyapunovEstimate lyapunov_estimate(const Lattice& lattice, std::size_t samples, std::size_t depth,
                                   std::uint64_t seed);
/// Single-threaded reference for lyapunov_estimate.
LyapunovEstimate lyapunov_estimate_serial(const Lattice& lattice, std::size_t samples, std::size_t depth,
                                          std::uint64_t seed);

}  // namespace slicekit
