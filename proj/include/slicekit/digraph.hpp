#pragma once

#include <cstddef>
#include <vector>

namespace slicekit {

/// Adjacency-list digraph on vertices 0..size()-1. Successor lists are kept
/// sorted and duplicate-free.
struct Digraph {
  std::vector<std::vector<std::size_t>> successors;

  Digraph() = default;
  explicit Digraph(std::size_t n) : successors(n) {}

  std::size_t size() const noexcept { return successors.size(); }
  void add_edge(std::size_t from, std::size_t to);
  bool has_edge(std::size_t from, std::size_t to) const;
  std::size_t edge_count() const;
  /// Sorts and dedups every successor list.
  void normalize();
};

/// Strongly connected components, ordered by smallest contained vertex.
/// component_of[v] indexes into components.
struct Components {
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> component_of;
};

/// Iterative Tarjan; linear time.
Components strongly_connected_components(const Digraph& g);

/// Condensation edges between distinct components.
Digraph condensation(const Digraph& g, const Components& c);

/// reach[a][b] true iff a == b or a path leads from component a to b.
std::vector<std::vector<bool>> component_reachability(const Digraph& g, const Components& c);

/// Vertices reachable from the sources (sources included).
std::vector<bool> reachable_from(const Digraph& g, const std::vector<std::size_t>& sources);

}  // namespace slicekit
