#pragma once

#include <cstdint>
#include <vector>

#include "slicekit/instance.hpp"
#include "slicekit/rational.hpp"

namespace slicekit {

/// Rank-k basic cube S_{i1...ik}([0,1]^l) with its projection interval
/// n^-k ((m, prefix) + [m_*, m^*]).
struct CubeChain {
  std::vector<std::vector<Digit>> digits;
  Rational lower;
  Rational upper;
};

inline constexpr std::size_t kOracleFrontierCap = 1'000'000;

/// Number of rank-k chains whose closed projection interval contains x.
/// Depth-first over digit tuples; a chain is extended only while its
/// interval still contains x. Parallel over the rank-1 subtrees.
std::uint64_t brute_force_cube_count(const ProblemInstance& inst, const Rational& x, std::size_t depth);
/// Single-threaded reference for brute_force_cube_count.
std::uint64_t brute_force_cube_count_serial(const ProblemInstance& inst, const Rational& x, std::size_t depth);

/// The chains themselves, lexicographic by digit tuples. Throws TooLarge if
/// a level holds more than cap chains.
std::vector<CubeChain> brute_force_solutions(const ProblemInstance& inst, const Rational& x, std::size_t depth,
                                             std::size_t cap = kOracleFrontierCap);

}  // namespace slicekit
