#include "slicekit/report.hpp"

#include <cstdio>
#include <limits>

#include "slicekit/error.hpp"

namespace slicekit {

std::string decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", value);
  return buf;
}

Json json_integer(const BigInt& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

Json json_radius(const RadiusResult& r) {
  Json out;
  out["lower"] = to_string(r.lower);
  out["upper"] = to_string(r.upper);
  out["decimal"] = decimal(r.estimate);
  return out;
}

Json json_exponent(const std::optional<double>& e) {
  if (!e) return nullptr;
  return decimal(*e);
}

Json json_matrix(const CountMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(json_integer(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json json_instance(const ProblemInstance& inst) {
  Json out;
  out["n"] = inst.base();
  out["digit_sets"] = inst.digit_sets();
  out["coefficients"] = inst.coefficients();
  return out;
}

Json json_bounds(const ProblemInstance& inst) {
  Json out;
  out["m_lower"] = inst.m_lower();
  out["m_upper"] = inst.m_upper();
  out["norm1"] = inst.norm1();
  return out;
}

Json json_ssc(const ProblemInstance& inst) {
  Json out = Json::array();
  for (bool b : strong_separation(inst)) out.push_back(b);
  return out;
}

Json json_integer_intervals(const Lattice& lattice) {
  Json out = Json::array();
  for (const auto& iv : lattice.intervals()) {
    Json e;
    e["u"] = iv.u;
    e["label"] = iv.display_label;
    e["cover_count"] = lattice.cover_count(iv.u);
    e["types"] = lattice.types(iv.u);
    out.push_back(std::move(e));
  }
  return out;
}

Json json_xi(const Model& model) {
  Json out;
  Json u = Json::array(), labels = Json::array();
  for (const auto& v : model.xi().vertices) {
    u.push_back(v.u);
    labels.push_back(v.display_label);
  }
  out["u"] = std::move(u);
  out["labels"] = std::move(labels);
  out["types"] = model.xi().types;
  return out;
}

Json json_m(const Model& model) {
  Json out;
  Json index = Json::array();
  for (const auto& v : model.xi().vertices) index.push_back(v.u);
  out["index"] = std::move(index);
  out["rows"] = json_matrix(model.xi().matrix);
  out["radius"] = json_radius(model.rho());
  out["irreducible"] = irreducible(model.xi().matrix);
  return out;
}

Json json_t(const Model& model) {
  const auto& inst = model.instance();
  Json out;
  out["index_range"] = {inst.m_lower(), inst.m_upper() - 1};
  Json mats = Json::array();
  for (const auto& t : model.transitions()) mats.push_back(json_matrix(t));
  out["matrices"] = std::move(mats);
  return out;
}

Json json_scc(const SccDecomposition& s, const std::vector<Json>& labels) {
  Json comps = Json::array();
  for (std::size_t c = 0; c < s.size(); ++c) {
    Json e;
    Json members = Json::array();
    for (auto v : s.parts.components[c]) members.push_back(labels[v]);
    e["members"] = std::move(members);
    e["radius"] = json_radius(s.radii[c]);
    Json above = Json::array();
    for (std::size_t d = 0; d < s.size(); ++d)
      if (d != c && s.precedes(c, d)) above.push_back(d);
    e["precedes"] = std::move(above);
    comps.push_back(std::move(e));
  }
  return comps;
}

Json json_graphs(const Model& model, const RSearchResult* search) {
  Json out;
  const auto& xi = model.xi();
  std::vector<Json> xi_labels;
  Json adjacency = Json::object();
  for (std::size_t v = 0; v < xi.vertices.size(); ++v) {
    xi_labels.emplace_back(xi.vertices[v].u);
    Json succ = Json::array();
    for (auto w : xi.graph.successors[v]) succ.push_back(xi.vertices[w].u);
    adjacency[std::to_string(xi.vertices[v].u)] = std::move(succ);
  }
  out["xi"] = {{"adjacency", std::move(adjacency)}, {"sccs", json_scc(model.xi_scc(), xi_labels)}};

  const CongruentGraph gstar =
      search ? search->gstar : build_congruent_graph(model.lattice(), CongruentMode::Reachable);
  std::vector<Json> labels;
  Json vertices = Json::array(), edges = Json::array();
  for (std::size_t v = 0; v < gstar.vertices.size(); ++v) {
    labels.emplace_back(gstar.vertices[v].members);
    vertices.push_back(gstar.vertices[v].members);
    for (auto w : gstar.graph.successors[v]) edges.push_back({v, w});
  }
  out["gstar"] = {{"vertices", std::move(vertices)}, {"edges", std::move(edges)},
                  {"sccs", json_scc(gstar.scc, labels)}};
  return out;
}

Json json_u1(const U1Report& report) {
  Json out;
  out["radius"] = json_radius(report.radius);
  out["dim"] = json_exponent(report.s);
  out["dim_exact"] = report.dim_exact;
  out["measure_class"] = to_string(report.measure_class);
  out["basis"] = report.basis ? Json(to_string(*report.basis)) : Json(nullptr);
  out["notes"] = report.notes;
  return out;
}

namespace {

Json json_digits(const std::vector<Digit>& digits) {
  std::string s;
  for (auto d : digits) {
    if (!s.empty()) s += ' ';
    s += std::to_string(d);
  }
  return s;
}

}  // namespace

Json json_witness(const RSearchResult& search, const AchievableWitness& w) {
  const auto& rv = search.vectors[w.vector_index];
  Json out;
  out["x"] = to_string(w.x);
  out["integer_part"] = json_integer(w.integer_part);
  out["preperiod"] = json_digits(w.preperiod);
  out["period"] = json_digits(w.period);
  out["seed"] = rv.seed;
  out["word"] = json_digits(rv.word);
  out["support"] = rv.support;
  out["residue"] = w.residue;
  Json path = Json::array(), cycle = Json::array();
  for (const auto& s : w.path) path.push_back(s.members);
  for (const auto& s : w.cycle) cycle.push_back(s.members);
  out["path"] = std::move(path);
  out["cycle"] = std::move(cycle);
  out["verified"] = w.verified;
  return out;
}

Json json_r_search(const RSearchResult& search) {
  Json out;
  out["max_r"] = search.max_r;
  Json vectors = Json::array();
  for (const auto& rv : search.vectors) {
    Json e;
    Json v = Json::array();
    for (const auto& z : rv.v) v.push_back(json_integer(z));
    e["v"] = std::move(v);
    e["seed"] = rv.seed;
    e["word"] = json_digits(rv.word);
    e["norm"] = json_integer(rv.norm);
    vectors.push_back(std::move(e));
  }
  out["vectors"] = std::move(vectors);
  Json entries = Json::array();
  for (const auto& e : search.entries) {
    Json j;
    j["r"] = e.r;
    j["status"] = to_string(e.status);
    j["witness"] = e.witness ? json_witness(search, *e.witness) : Json(nullptr);
    j["boundary_point"] = e.boundary ? Json(to_string(e.boundary->x)) : Json(nullptr);
    entries.push_back(std::move(j));
  }
  out["entries"] = std::move(entries);
  return out;
}

Json json_ur(const UrReport& report) {
  Json out;
  out["r"] = report.r;
  out["status"] = to_string(report.status);
  out["dim"] = json_exponent(report.d_r);
  Json candidates = Json::array();
  for (double c : report.candidates) candidates.push_back(decimal(c));
  out["candidates"] = std::move(candidates);
  out["countable"] = report.countable_flag;
  out["measure_class"] = report.measure_class ? Json(to_string(*report.measure_class)) : Json(nullptr);
  out["dominated"] = report.dominated ? Json(*report.dominated) : Json(nullptr);
  if (report.argmax)
    out["argmax"] = {{"vector", report.argmax->vector_index}, {"residue", report.argmax->residue}};
  else
    out["argmax"] = nullptr;
  return out;
}

Json json_count(const Model& model, const Rational& x, std::size_t depth, std::uint64_t budget) {
  const auto& inst = model.instance();
  Json out;
  out["x"] = to_string(x);
  const auto expansion = nadic_expansion(inst, x, depth);
  out["expansion"] = {{"integer_part", json_integer(expansion.integer_part)},
                      {"preperiod", json_digits(expansion.preperiod)},
                      {"period", json_digits(expansion.period)},
                      {"boundary", expansion.boundary}};
  const auto card = exact_card(model.lattice(), x, budget);
  out["verdict"] = to_string(card.verdict);
  out["value"] = card.verdict == CardVerdict::Infinite ? Json(nullptr) : json_integer(card.value);
  out["result"] = card.verdict == CardVerdict::Finite ? "Finite(" + to_string(card.value) + ")" : to_string(card.verdict);
  out["depth_reached"] = card.depth_reached;
  out["cycle_start"] = card.cycle_start;
  out["cycle_length"] = card.cycle_length;
  Json cards = Json::array();
  for (const auto& c : card.cardinalities) cards.push_back(json_integer(c));
  out["cardinalities"] = std::move(cards);
  if (depth > 0 && !expansion.boundary) {
    Json v = Json::array();
    for (const auto& z : cube_count_vector(model.lattice(), model.transitions(), x, depth)) v.push_back(json_integer(z));
    out["vector"] = {{"depth", depth}, {"entries", std::move(v)}};
  } else {
    out["vector"] = nullptr;
  }
  return out;
}

Json json_oracle(const ProblemInstance& inst, const Rational& x, std::size_t depth) {
  Json out;
  out["x"] = to_string(x);
  out["depth"] = depth;
  const auto chains = brute_force_solutions(inst, x, depth);
  out["count"] = chains.size();
  Json list = Json::array();
  for (const auto& c : chains) {
    Json e;
    e["digits"] = c.digits;
    e["lower"] = to_string(c.lower);
    e["upper"] = to_string(c.upper);
    list.push_back(std::move(e));
  }
  out["chains"] = std::move(list);
  return out;
}

Json json_lyapunov(const LyapunovEstimate& e, std::size_t samples, std::size_t depth, std::uint64_t seed) {
  Json out;
  out["samples"] = samples;
  out["depth"] = depth;
  out["seed"] = seed;
  out["estimate"] = decimal(e.estimate);
  out["standard_error"] = decimal(e.standard_error);
  return out;
}

}  // namespace slicekit
