#include "slicekit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "slicekit/error.hpp"

namespace slicekit {

std::string to_string(MeasureClass c) {
  switch (c) {
    case MeasureClass::PositiveFinite: return "PositiveFinite";
    case MeasureClass::Infinite: return "Infinite";
    case MeasureClass::PositiveOnly: return "PositiveOnly";
    case MeasureClass::NotApplicable: return "NotApplicable";
    case MeasureClass::PositiveUndetermined: return "PositiveUndetermined";
  }
  return "Unknown";
}

std::string to_string(RStatus s) {
  switch (s) {
    case RStatus::Achievable: return "Achievable";
    case RStatus::OnlyOnCountableSet: return "OnlyOnCountableSet";
    case RStatus::NotReachable: return "NotReachable";
  }
  return "Unknown";
}

Model::Model(ProblemInstance inst, double tolerance)
    : lattice_(std::move(inst)),
      transitions_(transition_matrices(lattice_)),
      covering_(covering_condition(lattice_)),
      ssc_(all_strongly_separated(lattice_.instance())),
      xi_(build_xi_graph(lattice_)),
      xi_scc_(scc(xi_.graph, tolerance)),
      rho_(spectral_radius(xi_.matrix, tolerance)),
      tolerance_(tolerance) {}

std::optional<double> radius_exponent(const RadiusResult& r, std::int64_t base) {
  if (r.upper <= 0) return std::nullopt;
  return std::log(r.estimate) / std::log(static_cast<double>(base));
}

namespace {

// Exponents below this are treated as zero.
constexpr double kExponentSlack = 1e-9;

bool radius_above_one(const RadiusResult& r) { return r.lower > 1; }

}  // namespace

std::pair<MeasureClass, Verdict> top_component_test(const CountMatrix& m, const SccDecomposition& parts,
                                                    const RadiusResult& rho, double tolerance) {
  std::vector<std::size_t> top;
  Verdict basis = Verdict::Exact;
  for (std::size_t c = 0; c < parts.size(); ++c) {
    const auto sub = m.principal_submatrix(parts.parts.components[c]);
    const auto cmp = compare_radii(sub, parts.radii[c], m, rho, tolerance);
    if (cmp.basis == Verdict::Tolerance) basis = Verdict::Tolerance;
    if (cmp.equal) top.push_back(c);
  }
  for (auto a : top)
    for (auto b : top)
      if (a != b && parts.precedes(a, b)) return {MeasureClass::Infinite, basis};
  return {MeasureClass::PositiveFinite, basis};
}

U1Report dim_u1(const Model& model) {
  U1Report out;
  out.radius = model.rho();
  out.s = radius_exponent(out.radius, model.instance().base());
  out.dim_exact = model.covering();
  if (!out.dim_exact) out.notes.push_back("covering condition fails: s is a lower bound for dim U_1");
  if (!out.s) out.notes.push_back("rho(M) = 0: U_1 is at most countable");
  return out;
}

U1Report measure_u1(const Model& model) {
  U1Report out = dim_u1(model);
  const bool s_positive = out.s && radius_above_one(out.radius);
  if (!model.covering() || !model.ssc() || !s_positive) {
    out.measure_class = s_positive ? MeasureClass::PositiveOnly : MeasureClass::NotApplicable;
    if (!model.ssc()) out.notes.push_back("strong separation fails for some digit set");
    return out;
  }
  const auto [measure, basis] = top_component_test(model.xi().matrix, model.xi_scc(), model.rho(), model.tolerance());
  out.measure_class = measure;
  out.basis = basis;
  return out;
}

U1Report dim_u1(const ProblemInstance& inst) { return dim_u1(Model(inst)); }
U1Report measure_u1(const ProblemInstance& inst) { return measure_u1(Model(inst)); }

const REntry& RSearchResult::entry(std::int64_t r) const {
  if (r < 1 || r > max_r)
    throw Error(ErrorKind::OutOfRange, "r=" + std::to_string(r) + " outside the searched range 1.." +
                                           std::to_string(max_r));
  return entries[static_cast<std::size_t>(r - 1)];
}

namespace {

void require_hypotheses(const Model& model) {
  if (!model.covering())
    throw Error(ErrorKind::HypothesisViolated, "the multiplicity search requires the covering condition");
  if (!model.ssc())
    throw Error(ErrorKind::HypothesisViolated, "the multiplicity search requires the strong separation condition");
}

std::vector<ReachableVector> reachable_vectors(const Model& model, std::int64_t max_r) {
  const auto& inst = model.instance();
  const auto size = static_cast<std::size_t>(inst.norm1());
  const BigInt cap(static_cast<long>(max_r));
  std::vector<ReachableVector> out;
  std::map<std::vector<BigInt>, std::size_t> seen;
  auto record = [&](std::vector<BigInt> v, std::int64_t seed, std::vector<Digit> word) {
    const BigInt norm = norm1(v);
    if (norm > cap || seen.count(v)) return;
    ReachableVector rv;
    for (std::size_t k = 0; k < size; ++k)
      if (v[k] != 0) rv.support.push_back(inst.m_lower() + static_cast<std::int64_t>(k));
    seen.emplace(v, out.size());
    rv.v = std::move(v);
    rv.seed = seed;
    rv.word = std::move(word);
    rv.norm = norm;
    out.push_back(std::move(rv));
  };
  for (std::size_t k = 0; k < size; ++k) {
    std::vector<BigInt> e(size, BigInt(0));
    e[k] = 1;
    record(std::move(e), inst.m_lower() + static_cast<std::int64_t>(k), {});
  }
  // Breadth first; digits in ascending order give shortlex-minimal words.
  for (std::size_t head = 0; head < out.size(); ++head)
    for (std::size_t j = 0; j < model.transitions().size(); ++j) {
      auto next = model.transitions()[j].left_multiply(out[head].v);
      auto word = out[head].word;
      word.push_back(static_cast<Digit>(j));
      record(std::move(next), out[head].seed, std::move(word));
    }
  return out;
}

// Shortest path inside `allowed` from `from` to the first vertex accepted by
// `target`; vertices after `from`, ending at the target. Empty if from is
// accepted and zero length is allowed.
template <class Target>
std::optional<std::vector<std::size_t>> shortest_path(const Digraph& g, std::size_t from, Target target,
                                                      const std::vector<bool>& allowed, bool allow_empty) {
  if (allow_empty && target(from)) return std::vector<std::size_t>{};
  std::vector<std::size_t> parent(g.size(), g.size());
  std::vector<bool> visited(g.size(), false);
  std::deque<std::size_t> queue;
  std::optional<std::size_t> hit;
  for (auto s : g.successors[from]) {
    if (!allowed[s] || visited[s]) continue;
    visited[s] = true;
    parent[s] = from;
    queue.push_back(s);
  }
  while (!queue.empty() && !hit) {
    const auto v = queue.front();
    queue.pop_front();
    if (target(v)) {
      hit = v;
      break;
    }
    for (auto s : g.successors[v]) {
      if (!allowed[s] || visited[s]) continue;
      visited[s] = true;
      parent[s] = v;
      queue.push_back(s);
    }
  }
  if (!hit) return std::nullopt;
  std::vector<std::size_t> path;
  for (auto v = *hit;; v = parent[v]) {
    path.push_back(v);
    if (parent[v] == from) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

AchievableWitness build_witness(const Model& model, const RSearchResult& search, const SeedPair& pair,
                                std::int64_t r) {
  const auto& g = search.gstar;
  const auto n = model.instance().base();
  AchievableWitness w;
  w.vector_index = pair.vector_index;
  w.residue = pair.residue;

  const std::vector<bool> everywhere(g.vertices.size(), true);
  auto in_good = [&](std::size_t v) { return search.good_component[g.scc.parts.component_of[v]]; };
  const auto lead = shortest_path(g.graph, pair.vertex, in_good, everywhere, true);
  std::vector<std::size_t> path{pair.vertex};
  path.insert(path.end(), lead->begin(), lead->end());
  const auto entry = path.back();

  const auto comp = g.scc.parts.component_of[entry];
  std::vector<bool> inside(g.vertices.size(), false);
  for (auto v : g.scc.parts.components[comp]) inside[v] = true;
  auto not_zero = [&](std::size_t v) { return g.vertices[v].residue != 0; };
  auto not_top = [&](std::size_t v) { return g.vertices[v].residue != n - 1; };
  auto back = [&](std::size_t v) { return v == entry; };

  // entry -> a (digit != 0) -> b (digit != n-1) -> entry, at least one step.
  std::vector<std::size_t> walk;
  auto to_a = *shortest_path(g.graph, entry, not_zero, inside, true);
  const auto a = to_a.empty() ? entry : to_a.back();
  auto to_b = *shortest_path(g.graph, a, not_top, inside, true);
  const auto b = to_b.empty() ? a : to_b.back();
  auto home = *shortest_path(g.graph, b, back, inside, b != entry);
  walk.insert(walk.end(), to_a.begin(), to_a.end());
  walk.insert(walk.end(), to_b.begin(), to_b.end());
  walk.insert(walk.end(), home.begin(), home.end());

  const auto& rv = search.vectors[pair.vector_index];
  std::vector<Digit> pre = rv.word, per;
  for (auto v : path) {
    w.path.push_back(g.vertices[v]);
    pre.push_back(static_cast<Digit>(g.vertices[v].residue));
  }
  for (auto v : walk) {
    w.cycle.push_back(g.vertices[v]);
    per.push_back(static_cast<Digit>(g.vertices[v].residue));
  }
  w.x = expansion_value(n, BigInt(static_cast<long>(rv.seed)), pre, per);
  const auto canonical = nadic_expansion(n, w.x, 0);
  w.integer_part = canonical.integer_part;
  w.preperiod = canonical.preperiod;
  w.period = canonical.period;

  const auto budget = std::max<std::uint64_t>(kDefaultCardBudget, static_cast<std::uint64_t>(r));
  const auto card = exact_card(model.lattice(), w.x, budget);
  w.verified = card.verdict == CardVerdict::Finite && card.value == r;
  return w;
}

}  // namespace

RSearchResult enumerate_achievable_r(const Model& model, std::int64_t max_r) {
  require_hypotheses(model);
  if (max_r < 1) throw Error(ErrorKind::OutOfRange, "max_r must be at least 1");
  const auto& lattice = model.lattice();
  const auto& inst = model.instance();
  const auto n = inst.base();

  RSearchResult out;
  out.max_r = max_r;
  out.vectors = reachable_vectors(model, max_r);

  // Seeds omega_h = { n p + h : p in D } for every reachable support.
  std::vector<CongruentSubset> seeds;
  std::vector<std::pair<std::size_t, CongruentSubset>> lifted;
  for (std::size_t k = 0; k < out.vectors.size(); ++k)
    for (std::int64_t h = 0; h < n; ++h)
      if (auto omega = lift_support(lattice, out.vectors[k].support, h)) {
        seeds.push_back(*omega);
        lifted.emplace_back(k, std::move(*omega));
      }
  out.gstar = build_congruent_graph(lattice, CongruentMode::Reachable, seeds);

  const auto& g = out.gstar;
  out.good_component.assign(g.scc.size(), false);
  for (std::size_t c = 0; c < g.scc.size(); ++c) {
    const auto& members = g.scc.parts.components[c];
    const bool nontrivial = members.size() > 1 || g.graph.has_edge(members[0], members[0]);
    bool low = false, high = false;
    for (auto v : members) {
      low = low || g.vertices[v].residue != 0;
      high = high || g.vertices[v].residue != n - 1;
    }
    out.good_component[c] = nontrivial && low && high;
  }
  for (auto& [k, omega] : lifted) {
    SeedPair pair;
    pair.vector_index = k;
    pair.residue = omega.residue;
    pair.vertex = *g.index_of(omega.members);
    const auto from = g.scc.parts.component_of[pair.vertex];
    for (std::size_t c = 0; c < g.scc.size() && !pair.achieves; ++c)
      pair.achieves = out.good_component[c] && g.scc.precedes(from, c);
    out.pairs.push_back(pair);
  }

  out.entries.resize(static_cast<std::size_t>(max_r));
  for (std::int64_t r = 1; r <= max_r; ++r) out.entries[static_cast<std::size_t>(r - 1)].r = r;
  for (const auto& pair : out.pairs) {
    if (!pair.achieves) continue;
    const auto r = out.vectors[pair.vector_index].norm.get_si();
    auto& e = out.entries[static_cast<std::size_t>(r - 1)];
    if (e.status == RStatus::Achievable) continue;
    e.status = RStatus::Achievable;
    e.witness = build_witness(model, out, pair, r);
  }

  // n-adic points. Integers c first, then i + 0.j1...jk with jk != 0 whose
  // count is sum_t beta_t gamma_jk(t) for beta = e_i T_j1 ... T_j(k-1).
  const auto budget = std::max<std::uint64_t>(kDefaultCardBudget, static_cast<std::uint64_t>(max_r));
  std::map<std::int64_t, std::optional<BigInt>> alpha;
  for (std::int64_t c = inst.m_lower(); c <= inst.m_upper(); ++c) {
    const auto card = exact_card(lattice, Rational(static_cast<long>(c)), budget);
    alpha[c] = card.verdict == CardVerdict::Finite ? std::optional<BigInt>(card.value) : std::nullopt;
  }
  auto mark_boundary = [&](const BigInt& value, BoundaryWitness w) {
    if (value < 1 || value > max_r) return;
    auto& e = out.entries[value.get_ui() - 1];
    if (e.boundary) return;
    e.boundary = std::move(w);
    if (e.status == RStatus::NotReachable) e.status = RStatus::OnlyOnCountableSet;
  };
  for (std::int64_t c = inst.m_lower(); c <= inst.m_upper(); ++c)
    if (alpha[c]) mark_boundary(*alpha[c], {Rational(static_cast<long>(c)), std::nullopt, 0});

  const auto& weights = lattice.weight_histogram();
  auto gamma = [&](std::int64_t t, std::int64_t j) -> std::optional<BigInt> {
    BigInt total = 0;
    for (const auto& [w, count] : weights) {
      const std::int64_t c = n * t + j - w;
      if (c < inst.m_lower() || c > inst.m_upper()) continue;
      if (!alpha[c]) return std::nullopt;
      total += *alpha[c] * BigInt(std::to_string(count));
    }
    return total;
  };
  for (std::size_t k = 0; k < out.vectors.size(); ++k) {
    const auto& rv = out.vectors[k];
    for (std::int64_t j = 1; j < n; ++j) {
      BigInt value = 0;
      bool finite = true;
      for (auto t : rv.support) {
        const auto gj = gamma(t, j);
        if (!gj) {
          finite = false;
          break;
        }
        value += rv.v[static_cast<std::size_t>(t - inst.m_lower())] * *gj;
      }
      if (!finite) continue;
      BoundaryWitness w;
      w.vector_index = k;
      w.last_digit = static_cast<Digit>(j);
      auto digits = rv.word;
      digits.push_back(static_cast<Digit>(j));
      w.x = expansion_value(n, BigInt(static_cast<long>(rv.seed)), digits, {});
      mark_boundary(value, std::move(w));
    }
  }
  return out;
}

RSearchResult enumerate_achievable_r(const ProblemInstance& inst, std::int64_t max_r) {
  return enumerate_achievable_r(Model(inst), max_r);
}

namespace {

// Per G* component: best exponent over components it precedes (rho > 0 only).
std::vector<std::optional<double>> component_values(const RSearchResult& search, std::int64_t base) {
  const auto& s = search.gstar.scc;
  std::vector<std::optional<double>> own(s.size()), best(s.size());
  for (std::size_t c = 0; c < s.size(); ++c) own[c] = radius_exponent(s.radii[c], base);
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b)
      if (s.precedes(a, b) && own[b] && (!best[a] || *own[b] > *best[a])) best[a] = own[b];
  return best;
}

}  // namespace

UrReport dim_ur(const Model& model, const RSearchResult& search, std::int64_t r) {
  const auto& e = search.entry(r);
  UrReport out;
  out.r = r;
  out.status = e.status;
  if (e.status == RStatus::NotReachable)
    throw Error(ErrorKind::NotAchievable, "no point has exactly " + std::to_string(r) + " representations");
  if (e.status == RStatus::OnlyOnCountableSet) {
    out.countable_flag = true;
    out.d_r = 0.0;
    return out;
  }
  const auto base = model.instance().base();
  const auto values = component_values(search, base);
  for (const auto& v : values)
    if (v && *v > kExponentSlack) out.candidates.push_back(*v);
  std::sort(out.candidates.begin(), out.candidates.end());
  out.candidates.erase(std::unique(out.candidates.begin(), out.candidates.end(),
                                   [](double a, double b) { return std::abs(a - b) <= 1e-12; }),
                       out.candidates.end());

  const auto& g = search.gstar;
  for (const auto& pair : search.pairs) {
    if (!pair.achieves || search.vectors[pair.vector_index].norm != r) continue;
    const auto& v = values[g.scc.parts.component_of[pair.vertex]];
    if (v && (!out.d_r || *v > *out.d_r + 1e-12)) {
      out.d_r = *v;
      out.argmax = pair;
    }
  }
  if (*out.d_r <= kExponentSlack) {
    out.d_r = 0.0;
    out.countable_flag = true;
  } else {
    const bool listed = std::any_of(out.candidates.begin(), out.candidates.end(),
                                    [&](double c) { return std::abs(c - *out.d_r) <= 1e-12; });
    if (!listed) throw std::logic_error("d_r is not among the component exponents");
  }
  const auto s = radius_exponent(model.rho(), base);
  if (!s || *out.d_r > *s + model.tolerance())
    throw std::logic_error("d_r exceeds log rho(M) / log n");
  return out;
}

UrReport dim_ur(const ProblemInstance& inst, std::int64_t r) {
  const Model model(inst);
  return dim_ur(model, enumerate_achievable_r(model, std::max<std::int64_t>(r, 1)), r);
}

bool domination_check(const Model& model, double d) {
  const auto& xi = model.xi();
  const auto& parts = model.xi_scc();
  const auto base = model.instance().base();
  std::vector<std::size_t> sources;
  for (std::size_t c = 0; c < parts.size(); ++c) {
    const auto e = radius_exponent(parts.radii[c], base);
    if (e && *e >= d - kExponentSlack)
      sources.insert(sources.end(), parts.parts.components[c].begin(), parts.parts.components[c].end());
  }
  if (sources.empty()) return false;
  const auto reached = reachable_from(xi.graph, sources);
  std::vector<bool> hit(static_cast<std::size_t>(model.instance().norm1()), false);
  for (std::size_t v = 0; v < reached.size(); ++v)
    if (reached[v]) hit[static_cast<std::size_t>(xi.types[v] - model.instance().m_lower())] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool domination_check(const ProblemInstance& inst, double d) { return domination_check(Model(inst), d); }

UrReport measure_ur(const Model& model, const RSearchResult& search, std::int64_t r) {
  const auto& e = search.entry(r);
  if (e.status != RStatus::Achievable)
    throw Error(ErrorKind::NotAchievable, "r=" + std::to_string(r) + " is not achievable off the n-adic points");
  UrReport out = dim_ur(model, search, r);
  out.dominated = domination_check(model, *out.d_r);
  out.measure_class = *out.dominated ? MeasureClass::Infinite : MeasureClass::PositiveUndetermined;
  return out;
}

UrReport measure_ur(const ProblemInstance& inst, std::int64_t r) {
  const Model model(inst);
  return measure_ur(model, enumerate_achievable_r(model, std::max<std::int64_t>(r, 1)), r);
}

AchievableWitness witness_ur(const Model&, const RSearchResult& search, std::int64_t r) {
  const auto& e = search.entry(r);
  if (e.status != RStatus::Achievable)
    throw Error(ErrorKind::NotAchievable, "r=" + std::to_string(r) + " is not achievable off the n-adic points");
  return *e.witness;
}

AchievableWitness witness_ur(const ProblemInstance& inst, std::int64_t r) {
  const Model model(inst);
  return witness_ur(model, enumerate_achievable_r(model, std::max<std::int64_t>(r, 1)), r);
}

}  // namespace slicekit
