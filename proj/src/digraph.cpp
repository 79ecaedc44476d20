#include "slicekit/digraph.hpp"

#include <algorithm>
#include <limits>

namespace slicekit {

void Digraph::add_edge(std::size_t from, std::size_t to) { successors[from].push_back(to); }

bool Digraph::has_edge(std::size_t from, std::size_t to) const {
  const auto& s = successors[from];
  return std::binary_search(s.begin(), s.end(), to);
}

std::size_t Digraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& s : successors) total += s.size();
  return total;
}

void Digraph::normalize() {
  for (auto& s : successors) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
}

Components strongly_connected_components(const Digraph& g) {
  constexpr auto kUnvisited = std::numeric_limits<std::size_t>::max();
  const std::size_t n = g.size();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> found;
  std::size_t counter = 0;

  struct Frame {
    std::size_t v;
    std::size_t next_edge;
  };
  std::vector<Frame> call;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& frame = call.back();
      const auto v = frame.v;
      const auto& succ = g.successors[v];
      if (frame.next_edge < succ.size()) {
        const auto w = succ[frame.next_edge++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        found.push_back(std::move(comp));
      }
      call.pop_back();
      if (!call.empty()) {
        const auto parent = call.back().v;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  Components out;
  out.components = std::move(found);
  out.component_of.assign(n, 0);
  for (std::size_t c = 0; c < out.components.size(); ++c)
    for (auto v : out.components[c]) out.component_of[v] = c;
  return out;
}

Digraph condensation(const Digraph& g, const Components& c) {
  Digraph dag(c.components.size());
  for (std::size_t v = 0; v < g.size(); ++v)
    for (auto w : g.successors[v])
      if (c.component_of[v] != c.component_of[w]) dag.add_edge(c.component_of[v], c.component_of[w]);
  dag.normalize();
  return dag;
}

std::vector<std::vector<bool>> component_reachability(const Digraph& g, const Components& c) {
  const auto dag = condensation(g, c);
  const std::size_t k = dag.size();
  std::vector<std::vector<bool>> reach(k);
  for (std::size_t a = 0; a < k; ++a) reach[a] = reachable_from(dag, {a});
  return reach;
}

std::vector<bool> reachable_from(const Digraph& g, const std::vector<std::size_t>& sources) {
  std::vector<bool> seen(g.size(), false);
  std::vector<std::size_t> todo;
  for (auto s : sources)
    if (!seen[s]) {
      seen[s] = true;
      todo.push_back(s);
    }
  while (!todo.empty()) {
    const auto v = todo.back();
    todo.pop_back();
    for (auto w : g.successors[v])
      if (!seen[w]) {
        seen[w] = true;
        todo.push_back(w);
      }
  }
  return seen;
}

}  // namespace slicekit
