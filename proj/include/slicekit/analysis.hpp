#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slicekit/counting.hpp"
#include "slicekit/graphs.hpp"
#include "slicekit/instance.hpp"
#include "slicekit/lattice.hpp"
#include "slicekit/spectral.hpp"

namespace slicekit {

enum class MeasureClass { PositiveFinite, Infinite, PositiveOnly, NotApplicable, PositiveUndetermined };
std::string to_string(MeasureClass c);

/// Everything the analyses share for one instance: lattice, T_j, the Xi
/// graph with its components and rho(M).
class Model {
 public:
  explicit Model(ProblemInstance inst, double tolerance = kDefaultRadiusTolerance);

  const ProblemInstance& instance() const noexcept { return lattice_.instance(); }
  const Lattice& lattice() const noexcept { return lattice_; }
  const std::vector<CountMatrix>& transitions() const noexcept { return transitions_; }
  bool covering() const noexcept { return covering_; }
  bool ssc() const noexcept { return ssc_; }
  const XiGraph& xi() const noexcept { return xi_; }
  const SccDecomposition& xi_scc() const noexcept { return xi_scc_; }
  const RadiusResult& rho() const noexcept { return rho_; }
  double tolerance() const noexcept { return tolerance_; }

 private:
  Lattice lattice_;
  std::vector<CountMatrix> transitions_;
  bool covering_;
  bool ssc_;
  XiGraph xi_;
  SccDecomposition xi_scc_;
  RadiusResult rho_;
  double tolerance_;
};

/// log(rho)/log(n) from the midpoint of the enclosure; nullopt when rho = 0.
std::optional<double> radius_exponent(const RadiusResult& r, std::int64_t base);

struct U1Report {
  RadiusResult radius;
  std::optional<double> s;
  bool dim_exact = false;
  MeasureClass measure_class = MeasureClass::NotApplicable;
  /// How equality of radii was decided, when the measure test needed it.
  std::optional<Verdict> basis;
  std::vector<std::string> notes;
};

/// Infinite iff two distinct components of radius rho(M) are ordered by the
/// reachability relation, PositiveFinite otherwise; also returns how radius
/// equality was decided.
std::pair<MeasureClass, Verdict> top_component_test(const CountMatrix& m, const SccDecomposition& parts,
                                                    const RadiusResult& rho, double tolerance);

U1Report dim_u1(const Model& model);
U1Report measure_u1(const Model& model);
U1Report dim_u1(const ProblemInstance& inst);
U1Report measure_u1(const ProblemInstance& inst);

enum class RStatus { Achievable, OnlyOnCountableSet, NotReachable };
std::string to_string(RStatus s);

/// v = e_t T_{word}; seed is the working interval t.
struct ReachableVector {
  std::vector<BigInt> v;
  std::int64_t seed = 0;
  std::vector<Digit> word;
  BigInt norm;
  std::vector<std::int64_t> support;
};

/// x = integer_part + 0.preperiod (period)^inf with exactly r representations,
/// together with the route through G* that produced it.
struct AchievableWitness {
  std::size_t vector_index = 0;
  std::int64_t residue = 0;
  std::vector<CongruentSubset> path;   // omega_h .. cycle entry
  std::vector<CongruentSubset> cycle;  // closed walk back to the entry
  Rational x;
  BigInt integer_part;
  std::vector<Digit> preperiod;
  std::vector<Digit> period;
  bool verified = false;
};

/// An n-adic point with exactly r representations.
struct BoundaryWitness {
  Rational x;
  std::optional<std::size_t> vector_index;  // unset for integer points
  Digit last_digit = 0;
};

struct REntry {
  std::int64_t r = 0;
  RStatus status = RStatus::NotReachable;
  std::optional<AchievableWitness> witness;
  std::optional<BoundaryWitness> boundary;
};

/// A pair (v, h) whose omega_h lies in Xi, with its G* vertex.
struct SeedPair {
  std::size_t vector_index = 0;
  std::int64_t residue = 0;
  std::size_t vertex = 0;
  /// Reaches a nontrivial component whose digits avoid ending in 0^inf
  /// and (n-1)^inf.
  bool achieves = false;
};

struct RSearchResult {
  std::int64_t max_r = 0;
  std::vector<ReachableVector> vectors;
  std::vector<SeedPair> pairs;
  CongruentGraph gstar;
  /// Per G* component: nontrivial with a digit other than 0 and a digit
  /// other than n-1.
  std::vector<bool> good_component;
  std::vector<REntry> entries;  // r = 1 .. max_r

  const REntry& entry(std::int64_t r) const;
};

/// Requires covering and SSC (HypothesisViolated otherwise).
RSearchResult enumerate_achievable_r(const Model& model, std::int64_t max_r);
RSearchResult enumerate_achievable_r(const ProblemInstance& inst, std::int64_t max_r);

struct UrReport {
  std::int64_t r = 0;
  RStatus status = RStatus::NotReachable;
  std::optional<double> d_r;
  std::vector<double> candidates;
  bool countable_flag = false;
  std::optional<MeasureClass> measure_class;
  std::optional<bool> dominated;
  /// The (v, h) pair realizing d_r.
  std::optional<SeedPair> argmax;
};

UrReport dim_ur(const Model& model, const RSearchResult& search, std::int64_t r);
UrReport dim_ur(const ProblemInstance& inst, std::int64_t r);

/// Every J_t is reached in G_Xi from a component with exponent >= d.
bool domination_check(const Model& model, double d);
bool domination_check(const ProblemInstance& inst, double d);

UrReport measure_ur(const Model& model, const RSearchResult& search, std::int64_t r);
UrReport measure_ur(const ProblemInstance& inst, std::int64_t r);

AchievableWitness witness_ur(const Model& model, const RSearchResult& search, std::int64_t r);
AchievableWitness witness_ur(const ProblemInstance& inst, std::int64_t r);

}  // namespace slicekit
