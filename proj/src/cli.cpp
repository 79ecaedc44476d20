#include "slicekit/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include "slicekit/analysis.hpp"
#include "slicekit/render.hpp"
#include "slicekit/report.hpp"

namespace slicekit {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadDocument:
    case ErrorKind::BadBase:
    case ErrorKind::DigitOutOfRange:
    case ErrorKind::DuplicateDigit:
    case ErrorKind::EmptyDigitSet:
    case ErrorKind::ZeroCoefficient:
    case ErrorKind::LengthMismatch:
    case ErrorKind::NotPlanar: return 1;
    case ErrorKind::OutOfRange:
    case ErrorKind::NotInterior:
    case ErrorKind::NotInXi:
    case ErrorKind::BoundaryPoint:
    case ErrorKind::CoveringRequired:
    case ErrorKind::HypothesisViolated:
    case ErrorKind::NotAchievable: return 2;
    case ErrorKind::TooLarge:
    case ErrorKind::WideEnclosure: return 3;
  }
  return 1;
}

namespace {

const std::vector<std::string> kCommands = {"analyze",     "check",  "matrices", "dim-u1",   "count",  "oracle",
                                            "enumerate-r", "dim-ur", "witness",  "lyapunov", "render"};

struct Options {
  std::string command;
  std::string instance;
  std::optional<std::string> x;
  std::optional<std::size_t> depth;
  std::uint64_t budget = kDefaultCardBudget;
  std::int64_t max_r = 8;
  std::optional<std::int64_t> r;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  std::optional<std::string> out;
  bool json = false;
};

void flatten(const Json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    return;
  }
  if (j.is_array()) {
    const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
    if (flat) {
      out << path << " = " << j.dump() << "\n";
      return;
    }
    for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], path + "[" + std::to_string(k) + "]", out);
    return;
  }
  out << path << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

Rational require_x(const Options& o) {
  if (!o.x) throw Error(ErrorKind::BadDocument, o.command + " requires --x");
  return parse_rational(*o.x);
}

std::int64_t require_r(const Options& o) {
  if (!o.r) throw Error(ErrorKind::BadDocument, o.command + " requires --r");
  if (*o.r < 1) throw Error(ErrorKind::BadDocument, "--r must be at least 1");
  return *o.r;
}

Json search_section(const RSearchResult* search, const std::string& reason) {
  Json out;
  out["applicable"] = search != nullptr;
  if (!search) {
    out["reason"] = reason;
    return out;
  }
  out.update(json_r_search(*search));
  return out;
}

Json ur_entry(const Model& model, const RSearchResult& search, std::int64_t r) {
  const auto& e = search.entry(r);
  return json_ur(e.status == RStatus::Achievable ? measure_ur(model, search, r) : dim_ur(model, search, r));
}

// Returns the exit status of the subcommand body (the report is filled in).
int dispatch(const Options& o, const ProblemInstance& inst, Json& report, std::ostream& out) {
  const auto& cmd = o.command;
  if (cmd == "render") {
    const auto svg = render_grid(inst, o.depth.value_or(1));
    if (!o.out) {
      out << svg;
      return -1;
    }
    std::ofstream file(*o.out, std::ios::binary);
    if (!file) throw Error(ErrorKind::BadDocument, "cannot write " + *o.out);
    file << svg;
    report["render"] = {{"path", *o.out}, {"depth", o.depth.value_or(1)}, {"bytes", svg.size()}};
    return 0;
  }
  if (cmd == "oracle") {
    report["oracle"] = json_oracle(inst, require_x(o), o.depth.value_or(4));
    return 0;
  }

  const Model model(inst);
  if (cmd == "check" || cmd == "analyze") {
    report["bounds"] = json_bounds(inst);
    report["covering"] = model.covering();
    report["ssc"] = json_ssc(inst);
    report["integer_intervals"] = json_integer_intervals(model.lattice());
    report["xi"] = json_xi(model);
    if (cmd == "check") return 0;
  }
  if (cmd == "matrices" || cmd == "analyze") {
    report["M"] = json_m(model);
    report["T"] = json_t(model);
    if (cmd == "matrices") return 0;
  }
  if (cmd == "analyze") {
    std::optional<RSearchResult> search;
    std::string reason;
    if (!model.covering())
      reason = "covering condition fails";
    else if (!model.ssc())
      reason = "strong separation fails";
    else
      search = enumerate_achievable_r(model, o.max_r);
    report["graphs"] = json_graphs(model, search ? &*search : nullptr);
    report["u1"] = json_u1(measure_u1(model));
    report["r_search"] = search_section(search ? &*search : nullptr, reason);
    Json ur = Json::array();
    if (search)
      for (const auto& e : search->entries)
        if (e.status != RStatus::NotReachable) ur.push_back(ur_entry(model, *search, e.r));
    report["ur"] = std::move(ur);
    return 0;
  }
  if (cmd == "dim-u1") {
    report["u1"] = json_u1(measure_u1(model));
    return 0;
  }
  if (cmd == "count") {
    report["count"] = json_count(model, require_x(o), o.depth.value_or(0), o.budget);
    return report["count"]["verdict"] == "ExceedsBudget" ? 3 : 0;
  }
  if (cmd == "enumerate-r") {
    const auto search = enumerate_achievable_r(model, o.max_r);
    report["r_search"] = search_section(&search, "");
    return 0;
  }
  if (cmd == "dim-ur") {
    const auto r = require_r(o);
    const auto search = enumerate_achievable_r(model, std::max(o.max_r, r));
    report["ur"] = ur_entry(model, search, r);
    return 0;
  }
  if (cmd == "witness") {
    const auto r = require_r(o);
    const auto search = enumerate_achievable_r(model, std::max(o.max_r, r));
    report["witness"] = json_witness(search, witness_ur(model, search, r));
    return 0;
  }
  if (cmd == "lyapunov") {
    const auto depth = o.depth.value_or(1000);
    report["lyapunov"] = json_lyapunov(lyapunov_estimate(model.lattice(), o.samples, depth, o.seed), o.samples,
                                       depth, o.seed);
    return 0;
  }
  throw Error(ErrorKind::BadDocument, "unknown command " + cmd);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"Slices of products of self-similar sets: conditions, graphs, dimensions and counts", "slicekit"};
  Options o;
  app.add_option("command", o.command, "Subcommand")->required()->check(CLI::IsMember(kCommands));
  app.add_option("instance", o.instance, "Instance JSON file")->required();
  app.add_option("--x", o.x, "Rational point p/q");
  app.add_option("--depth", o.depth, "Rank / digit depth");
  app.add_option("--budget", o.budget, "Cardinality budget for exact counting");
  app.add_option("--max-r", o.max_r, "Largest multiplicity searched")->check(CLI::PositiveNumber);
  app.add_option("--r", o.r, "Multiplicity");
  app.add_option("--samples", o.samples, "Lyapunov samples");
  app.add_option("--seed", o.seed, "Lyapunov seed");
  app.add_option("--out", o.out, "Output path (render)");
  app.add_flag("--json", o.json, "Emit JSON (always on for analyze)");
  app.set_version_flag("--version", kVersion);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  }

  Json report;
  report["command"] = o.command;
  int status = 0;
  try {
    const auto inst = load_instance(o.instance);
    if (inst.cubes_per_level() > 1'000'000)
      err << "warning: " << inst.cubes_per_level() << " cubes per level; the oracle will be slow\n";
    report["instance"] = json_instance(inst);
    status = dispatch(o, inst, report, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  if (status < 0) return 0;

  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  report["meta"] = {{"version", kVersion}, {"elapsed_ms", elapsed.count()}};
  if (o.json || o.command == "analyze")
    out << report.dump(2) << "\n";
  else
    flatten(report, "", out);
  return status;
}

}  // namespace slicekit
