#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "slicekit/digraph.hpp"
#include "slicekit/lattice.hpp"
#include "slicekit/spectral.hpp"

namespace slicekit {

/// Graph on all integer intervals: I1 -> I2 iff I1 has some type t with
/// I2 inside J_t. Vertex k is the interval with u = first_u + k.
struct FullGraph {
  std::vector<IntegerInterval> vertices;
  Digraph graph;

  std::size_t index_of(std::int64_t u) const;
  bool has_edge_u(std::int64_t from, std::int64_t to) const;
};

/// Induced subgraph on Xi, vertices in ascending u; matrix is the 0-1 M.
struct XiGraph {
  std::vector<IntegerInterval> vertices;
  std::vector<std::int64_t> types;
  Digraph graph;
  CountMatrix matrix;

  std::optional<std::size_t> index_of(std::int64_t u) const;
};

/// Components with the partial order H < H' (path from H to H') and the
/// spectral radius of each restricted adjacency matrix.
struct SccDecomposition {
  Components parts;
  std::vector<std::vector<bool>> reach;
  std::vector<RadiusResult> radii;

  std::size_t size() const noexcept { return parts.components.size(); }
  bool precedes(std::size_t a, std::size_t b) const { return reach[a][b]; }
};

SccDecomposition scc(const Digraph& g, double tolerance = kDefaultRadiusTolerance);

/// Members of Xi pairwise congruent mod n. support = D(omega), the working
/// intervals J_t holding a member; residue = common u mod n.
struct CongruentSubset {
  std::vector<std::int64_t> members;
  std::vector<std::int64_t> support;
  std::int64_t residue = 0;

  friend bool operator==(const CongruentSubset& a, const CongruentSubset& b) { return a.members == b.members; }
  friend bool operator<(const CongruentSubset& a, const CongruentSubset& b) { return a.members < b.members; }
};

enum class CongruentMode { Full, Reachable };

inline constexpr std::size_t kFullCongruentCap = std::size_t{1} << 20;

/// Validates and normalizes a member list. Throws NotInXi / OutOfRange if a
/// member is not in Xi or the members are not pairwise congruent.
CongruentSubset make_congruent_subset(const Lattice& lattice, std::vector<std::int64_t> members);

/// omega_h = { n p + h : p in support } when all members lie in Xi.
std::optional<CongruentSubset> lift_support(const Lattice& lattice, const std::vector<std::int64_t>& support,
                                            std::int64_t residue);

/// Successors of omega in G*. Each member of Xi has a single type, so the
/// two-sided cover rule forces D(omega') = { t(I) : I in omega }; one
/// candidate per residue.
std::vector<CongruentSubset> congruent_successors(const Lattice& lattice, const CongruentSubset& omega);

/// The edge rule evaluated literally against FullGraph edges.
bool congruent_edge_rule(const FullGraph& full, const CongruentSubset& from, const CongruentSubset& to);

/// Full mode: every nonempty congruent subset (TooLarge beyond 2^20).
/// Reachable mode: closure of all singletons plus the seeds under successors.
std::vector<CongruentSubset> congruent_vertices(const Lattice& lattice, CongruentMode mode,
                                                const std::vector<CongruentSubset>& seeds = {});

struct CongruentGraph {
  std::vector<CongruentSubset> vertices;
  Digraph graph;
  SccDecomposition scc;

  std::optional<std::size_t> index_of(const std::vector<std::int64_t>& members) const;

 private:
  friend CongruentGraph build_congruent_graph(const Lattice&, CongruentMode, const std::vector<CongruentSubset>&);
  std::map<std::vector<std::int64_t>, std::size_t> index_;
};

FullGraph build_full_graph(const Lattice& lattice);
XiGraph build_xi_graph(const Lattice& lattice);
CongruentGraph build_congruent_graph(const Lattice& lattice, CongruentMode mode = CongruentMode::Reachable,
                                     const std::vector<CongruentSubset>& seeds = {});

/// psi(x) = n (x - u/n) + t(I) for x in the open interval int(I), I in Xi.
Rational psi_step(const Lattice& lattice, const Rational& x, std::int64_t u);

std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t residue_mod(std::int64_t a, std::int64_t n);

}  // namespace slicekit
