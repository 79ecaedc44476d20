#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "slicekit/analysis.hpp"
#include "slicekit/counting.hpp"
#include "slicekit/oracle.hpp"

namespace slicekit {

using Json = nlohmann::ordered_json;

/// Fixed formatting so reports are byte-stable.
std::string decimal(double value);

Json json_integer(const BigInt& z);
Json json_radius(const RadiusResult& r);
Json json_exponent(const std::optional<double>& e);
Json json_matrix(const CountMatrix& m);

Json json_instance(const ProblemInstance& inst);
Json json_bounds(const ProblemInstance& inst);
Json json_ssc(const ProblemInstance& inst);
Json json_integer_intervals(const Lattice& lattice);
Json json_xi(const Model& model);
Json json_m(const Model& model);
Json json_t(const Model& model);
Json json_scc(const SccDecomposition& s, const std::vector<Json>& labels);
/// G_Xi and G*; the latter is the reachable closure of singletons and the
/// search seeds when a search is given.
Json json_graphs(const Model& model, const RSearchResult* search);
Json json_u1(const U1Report& report);
Json json_r_search(const RSearchResult& search);
Json json_ur(const UrReport& report);
Json json_witness(const RSearchResult& search, const AchievableWitness& w);
Json json_count(const Model& model, const Rational& x, std::size_t depth, std::uint64_t budget);
Json json_oracle(const ProblemInstance& inst, const Rational& x, std::size_t depth);
Json json_lyapunov(const LyapunovEstimate& e, std::size_t samples, std::size_t depth, std::uint64_t seed);

}  // namespace slicekit
