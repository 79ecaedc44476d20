#include "slicekit/graphs.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "slicekit/error.hpp"

namespace slicekit {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t residue_mod(std::int64_t a, std::int64_t n) { return a - n * floor_div(a, n); }

std::size_t FullGraph::index_of(std::int64_t u) const {
  if (vertices.empty() || u < vertices.front().u || u > vertices.back().u)
    throw Error(ErrorKind::OutOfRange, "no integer interval with u=" + std::to_string(u));
  return static_cast<std::size_t>(u - vertices.front().u);
}

bool FullGraph::has_edge_u(std::int64_t from, std::int64_t to) const {
  return graph.has_edge(index_of(from), index_of(to));
}

std::optional<std::size_t> XiGraph::index_of(std::int64_t u) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), u,
                             [](const IntegerInterval& iv, std::int64_t key) { return iv.u < key; });
  if (it == vertices.end() || it->u != u) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::optional<std::size_t> CongruentGraph::index_of(const std::vector<std::int64_t>& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SccDecomposition scc(const Digraph& g, double tolerance) {
  SccDecomposition out;
  out.parts = strongly_connected_components(g);
  out.reach = component_reachability(g, out.parts);
  for (const auto& comp : out.parts.components) out.radii.push_back(spectral_radius(g, comp, tolerance));
  return out;
}

FullGraph build_full_graph(const Lattice& lattice) {
  FullGraph out;
  out.vertices = lattice.intervals();
  out.graph = Digraph(out.vertices.size());
  const std::int64_t n = lattice.base();
  for (std::size_t k = 0; k < out.vertices.size(); ++k)
    for (std::int64_t t : lattice.types(out.vertices[k].u))
      for (std::int64_t u2 = t * n; u2 <= t * n + n - 1; ++u2) out.graph.add_edge(k, out.index_of(u2));
  out.graph.normalize();
  return out;
}

XiGraph build_xi_graph(const Lattice& lattice) {
  XiGraph out;
  out.vertices = xi_set(lattice);
  for (const auto& iv : out.vertices) out.types.push_back(*lattice.xi_type(iv.u));
  const std::size_t k = out.vertices.size();
  out.graph = Digraph(k);
  out.matrix = CountMatrix(k);
  const std::int64_t n = lattice.base();
  for (std::size_t a = 0; a < k; ++a)
    for (std::int64_t u2 = out.types[a] * n; u2 <= out.types[a] * n + n - 1; ++u2)
      if (auto b = out.index_of(u2)) {
        out.graph.add_edge(a, *b);
        out.matrix.at(a, *b) = 1;
      }
  out.graph.normalize();
  return out;
}

CongruentSubset make_congruent_subset(const Lattice& lattice, std::vector<std::int64_t> members) {
  if (members.empty()) throw Error(ErrorKind::OutOfRange, "congruent subsets are nonempty");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const std::int64_t n = lattice.base();
  CongruentSubset out;
  out.residue = residue_mod(members.front(), n);
  for (auto u : members) {
    if (!lattice.contains_u(u) || !lattice.in_xi(u))
      throw Error(ErrorKind::NotInXi, "u=" + std::to_string(u) + " is not in Xi");
    if (residue_mod(u, n) != out.residue)
      throw Error(ErrorKind::OutOfRange, "members are not congruent mod " + std::to_string(n));
    out.support.push_back(floor_div(u, n));
  }
  out.members = std::move(members);
  return out;
}

std::optional<CongruentSubset> lift_support(const Lattice& lattice, const std::vector<std::int64_t>& support,
                                            std::int64_t residue) {
  std::vector<std::int64_t> members;
  for (auto p : support) {
    const std::int64_t u = lattice.base() * p + residue;
    if (!lattice.contains_u(u) || !lattice.in_xi(u)) return std::nullopt;
    members.push_back(u);
  }
  if (members.empty()) return std::nullopt;
  return make_congruent_subset(lattice, std::move(members));
}

std::vector<CongruentSubset> congruent_successors(const Lattice& lattice, const CongruentSubset& omega) {
  std::set<std::int64_t> types;
  for (auto u : omega.members) types.insert(*lattice.xi_type(u));
  const std::vector<std::int64_t> target(types.begin(), types.end());
  std::vector<CongruentSubset> out;
  for (std::int64_t h = 0; h < lattice.base(); ++h)
    if (auto next = lift_support(lattice, target, h)) out.push_back(std::move(*next));
  return out;
}

bool congruent_edge_rule(const FullGraph& full, const CongruentSubset& from, const CongruentSubset& to) {
  for (auto a : from.members) {
    bool hit = false;
    for (auto b : to.members) hit = hit || full.has_edge_u(a, b);
    if (!hit) return false;
  }
  for (auto b : to.members) {
    bool hit = false;
    for (auto a : from.members) hit = hit || full.has_edge_u(a, b);
    if (!hit) return false;
  }
  return true;
}

std::vector<CongruentSubset> congruent_vertices(const Lattice& lattice, CongruentMode mode,
                                                const std::vector<CongruentSubset>& seeds) {
  const auto xi = xi_set(lattice);
  const std::int64_t n = lattice.base();
  std::set<CongruentSubset> found;

  if (mode == CongruentMode::Full) {
    std::map<std::int64_t, std::vector<std::int64_t>> classes;
    for (const auto& iv : xi) classes[residue_mod(iv.u, n)].push_back(iv.u);
    std::size_t total = 0;
    for (const auto& [h, us] : classes) {
      if (us.size() > 20) throw Error(ErrorKind::TooLarge, "residue class with more than 20 members");
      total += (std::size_t{1} << us.size()) - 1;
      if (total > kFullCongruentCap) throw Error(ErrorKind::TooLarge, "full G* would exceed 2^20 vertices");
    }
    for (const auto& [h, us] : classes)
      for (std::size_t mask = 1; mask < (std::size_t{1} << us.size()); ++mask) {
        std::vector<std::int64_t> members;
        for (std::size_t b = 0; b < us.size(); ++b)
          if (mask & (std::size_t{1} << b)) members.push_back(us[b]);
        found.insert(make_congruent_subset(lattice, std::move(members)));
      }
    return {found.begin(), found.end()};
  }

  std::deque<CongruentSubset> todo;
  auto visit = [&](CongruentSubset s) {
    if (found.insert(s).second) todo.push_back(std::move(s));
  };
  for (const auto& iv : xi) visit(make_congruent_subset(lattice, {iv.u}));
  for (const auto& s : seeds) visit(s);
  while (!todo.empty()) {
    auto cur = std::move(todo.front());
    todo.pop_front();
    for (auto& next : congruent_successors(lattice, cur)) visit(std::move(next));
  }
  return {found.begin(), found.end()};
}

CongruentGraph build_congruent_graph(const Lattice& lattice, CongruentMode mode,
                                     const std::vector<CongruentSubset>& seeds) {
  CongruentGraph out;
  out.vertices = congruent_vertices(lattice, mode, seeds);
  for (std::size_t k = 0; k < out.vertices.size(); ++k) out.index_[out.vertices[k].members] = k;
  out.graph = Digraph(out.vertices.size());
  for (std::size_t k = 0; k < out.vertices.size(); ++k)
    for (const auto& next : congruent_successors(lattice, out.vertices[k]))
      out.graph.add_edge(k, out.index_.at(next.members));
  out.graph.normalize();
  out.scc = scc(out.graph);
  return out;
}

Rational psi_step(const Lattice& lattice, const Rational& x, std::int64_t u) {
  if (!lattice.contains_u(u)) throw Error(ErrorKind::OutOfRange, "no integer interval with u=" + std::to_string(u));
  const auto t = lattice.xi_type(u);
  if (!t) throw Error(ErrorKind::NotInXi, "u=" + std::to_string(u) + " is not in Xi");
  const std::int64_t n = lattice.base();
  const Rational left = make_rational(u, n), right = make_rational(u + 1, n);
  if (!(x > left && x < right))
    throw Error(ErrorKind::NotInterior, to_string(x) + " is not interior to interval u=" + std::to_string(u));
  Rational out = x * static_cast<long>(n) - static_cast<long>(u) + static_cast<long>(*t);
  out.canonicalize();
  return out;
}

}  // namespace slicekit
