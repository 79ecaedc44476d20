#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "slicekit/instance.hpp"
#include "slicekit/rational.hpp"

namespace slicekit {

/// n^-1 [u, u+1], keyed by the raw integer u. display_label = u - n*m_*
/// echoes the I_0, I_1, ... numbering of figures.
struct IntegerInterval {
  std::int64_t u = 0;
  std::int64_t display_label = 0;

  friend bool operator==(const IntegerInterval&, const IntegerInterval&) = default;
};

/// J_t = [t, t+1].
struct WorkingInterval {
  std::int64_t t = 0;
};

/// Digit cube c_i = (i + [0,1]^l) / n with weight (m, i).
struct SmallCube {
  std::vector<Digit> digits;
  std::int64_t weight = 0;

  friend bool operator==(const SmallCube&, const SmallCube&) = default;
};

struct TypeEntry {
  std::int64_t type = 0;
  SmallCube cube;
};

struct TypeAssignment {
  IntegerInterval interval;
  std::vector<TypeEntry> entries;
};

/// Interval geometry of one instance: weight histogram of the depth-1 cubes
/// plus the queries built on it. Weights are stored as counts so instances
/// with many cubes per level stay cheap; explicit cubes are enumerated on
/// demand.
class Lattice {
 public:
  explicit Lattice(ProblemInstance inst);

  const ProblemInstance& instance() const noexcept { return inst_; }
  std::int64_t base() const noexcept { return inst_.base(); }
  std::int64_t first_u() const noexcept { return inst_.base() * inst_.m_lower(); }
  std::int64_t last_u() const noexcept { return inst_.base() * inst_.m_upper() - 1; }
  std::size_t interval_count() const noexcept {
    return static_cast<std::size_t>(last_u() - first_u() + 1);
  }
  bool contains_u(std::int64_t u) const noexcept { return u >= first_u() && u <= last_u(); }

  IntegerInterval interval(std::int64_t u) const;
  std::vector<IntegerInterval> intervals() const;

  /// weight -> number of cubes with that weight.
  const std::map<std::int64_t, std::uint64_t>& weight_histogram() const noexcept { return weights_; }
  std::uint64_t cubes_with_weight(std::int64_t w) const;

  /// Number of cubes whose projection contains interval u (with multiplicity).
  std::uint64_t cover_count(std::int64_t u) const;
  /// Distinct types t of interval u, ascending.
  std::vector<std::int64_t> types(std::int64_t u) const;
  bool in_xi(std::int64_t u) const { return cover_count(u) == 1; }
  /// t(I) for I in Xi, nullopt otherwise.
  std::optional<std::int64_t> xi_type(std::int64_t u) const;

  /// All cubes with the given weight, digit tuples in lexicographic order.
  std::vector<SmallCube> cubes_of_weight(std::int64_t w) const;
  std::vector<SmallCube> all_cubes() const;

 private:
  ProblemInstance inst_;
  std::map<std::int64_t, std::uint64_t> weights_;
};

std::vector<IntegerInterval> enumerate_integer_intervals(const ProblemInstance& inst);
std::vector<WorkingInterval> working_intervals(const ProblemInstance& inst);

/// Projection interval ((m,i) + [m_*, m^*]) / n of a cube, as exact endpoints.
std::pair<Rational, Rational> projection_interval(const ProblemInstance& inst, std::int64_t weight);

bool covering_condition(const ProblemInstance& inst);
bool covering_condition(const Lattice& lattice);

/// Entry i is true iff 1 is not in A_i - A_i.
std::vector<bool> strong_separation(const ProblemInstance& inst);
bool all_strongly_separated(const ProblemInstance& inst);

TypeAssignment type_assignment(const Lattice& lattice, std::int64_t u);
TypeAssignment type_assignment(const ProblemInstance& inst, std::int64_t u);

std::vector<IntegerInterval> xi_set(const Lattice& lattice);
std::vector<IntegerInterval> xi_set(const ProblemInstance& inst);

}  // namespace slicekit
