#include "slicekit/lattice.hpp"

#include <algorithm>
#include <limits>

#include "slicekit/error.hpp"

namespace slicekit {

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                           : a + b;
}

// Depth-first enumeration of digit tuples whose weight equals target.
// suffix_lo/hi[k] bound the weight contributed by coordinates k..l-1.
void collect_cubes(const ProblemInstance& inst, std::size_t k, std::int64_t partial, std::int64_t target,
                   const std::vector<std::int64_t>& suffix_lo, const std::vector<std::int64_t>& suffix_hi,
                   std::vector<Digit>& digits, std::vector<SmallCube>& out) {
  const auto l = inst.dimension();
  if (k == l) {
    if (partial == target) out.push_back({digits, partial});
    return;
  }
  if (target - partial < suffix_lo[k] || target - partial > suffix_hi[k]) return;
  const std::int64_t m = inst.coefficients()[k];
  for (Digit d : inst.digit_sets()[k]) {
    digits[k] = d;
    collect_cubes(inst, k + 1, partial + m * d, target, suffix_lo, suffix_hi, digits, out);
  }
}

}  // namespace

Lattice::Lattice(ProblemInstance inst) : inst_(std::move(inst)) {
  weights_[0] = 1;
  for (std::size_t k = 0; k < inst_.dimension(); ++k) {
    std::map<std::int64_t, std::uint64_t> next;
    const std::int64_t m = inst_.coefficients()[k];
    for (const auto& [w, count] : weights_)
      for (Digit d : inst_.digit_sets()[k]) {
        auto& slot = next[w + m * d];
        slot = saturating_add(slot, count);
      }
    weights_ = std::move(next);
  }
}

IntegerInterval Lattice::interval(std::int64_t u) const {
  if (!contains_u(u)) throw Error(ErrorKind::OutOfRange, "no integer interval with u=" + std::to_string(u));
  return {u, u - first_u()};
}

std::vector<IntegerInterval> Lattice::intervals() const {
  std::vector<IntegerInterval> out;
  out.reserve(interval_count());
  for (std::int64_t u = first_u(); u <= last_u(); ++u) out.push_back({u, u - first_u()});
  return out;
}

std::uint64_t Lattice::cubes_with_weight(std::int64_t w) const {
  auto it = weights_.find(w);
  return it == weights_.end() ? 0 : it->second;
}

std::uint64_t Lattice::cover_count(std::int64_t u) const {
  std::uint64_t total = 0;
  for (std::int64_t t = inst_.m_lower(); t <= inst_.m_upper() - 1; ++t)
    total = saturating_add(total, cubes_with_weight(u - t));
  return total;
}

std::vector<std::int64_t> Lattice::types(std::int64_t u) const {
  std::vector<std::int64_t> out;
  for (std::int64_t t = inst_.m_lower(); t <= inst_.m_upper() - 1; ++t)
    if (cubes_with_weight(u - t) > 0) out.push_back(t);
  return out;
}

std::optional<std::int64_t> Lattice::xi_type(std::int64_t u) const {
  if (!contains_u(u) || !in_xi(u)) return std::nullopt;
  return types(u).front();
}

std::vector<SmallCube> Lattice::cubes_of_weight(std::int64_t w) const {
  const auto l = inst_.dimension();
  std::vector<std::int64_t> lo(l + 1, 0), hi(l + 1, 0);
  for (std::size_t k = l; k-- > 0;) {
    const std::int64_t m = inst_.coefficients()[k];
    const auto& set = inst_.digit_sets()[k];
    const std::int64_t a = m * set.front(), b = m * set.back();
    lo[k] = lo[k + 1] + std::min(a, b);
    hi[k] = hi[k + 1] + std::max(a, b);
  }
  std::vector<SmallCube> out;
  if (cubes_with_weight(w) == 0) return out;
  std::vector<Digit> digits(l);
  collect_cubes(inst_, 0, 0, w, lo, hi, digits, out);
  return out;
}

std::vector<SmallCube> Lattice::all_cubes() const {
  std::vector<SmallCube> out;
  for (const auto& entry : weights_) {
    auto cubes = cubes_of_weight(entry.first);
    out.insert(out.end(), cubes.begin(), cubes.end());
  }
  std::sort(out.begin(), out.end(), [](const SmallCube& a, const SmallCube& b) { return a.digits < b.digits; });
  return out;
}

std::vector<IntegerInterval> enumerate_integer_intervals(const ProblemInstance& inst) {
  return Lattice(inst).intervals();
}

std::vector<WorkingInterval> working_intervals(const ProblemInstance& inst) {
  std::vector<WorkingInterval> out;
  for (std::int64_t t = inst.m_lower(); t <= inst.m_upper() - 1; ++t) out.push_back({t});
  return out;
}

std::pair<Rational, Rational> projection_interval(const ProblemInstance& inst, std::int64_t weight) {
  return {make_rational(weight + inst.m_lower(), inst.base()), make_rational(weight + inst.m_upper(), inst.base())};
}

bool covering_condition(const Lattice& lattice) {
  // Everything scaled by n: projection intervals become [w + m_*, w + m^*]
  // and the target becomes [n m_*, n m^*]; weights arrive sorted.
  const auto& inst = lattice.instance();
  std::int64_t reach = inst.base() * inst.m_lower();
  for (const auto& entry : lattice.weight_histogram()) {
    const std::int64_t w = entry.first;
    if (w + inst.m_lower() > reach) return false;
    reach = std::max(reach, w + inst.m_upper());
  }
  return reach >= inst.base() * inst.m_upper();
}

bool covering_condition(const ProblemInstance& inst) { return covering_condition(Lattice(inst)); }

std::vector<bool> strong_separation(const ProblemInstance& inst) {
  std::vector<bool> out;
  for (const auto& set : inst.digit_sets()) {
    bool ok = true;
    for (std::size_t k = 1; k < set.size(); ++k)
      if (set[k] - set[k - 1] == 1) ok = false;
    out.push_back(ok);
  }
  return out;
}

bool all_strongly_separated(const ProblemInstance& inst) {
  auto flags = strong_separation(inst);
  return std::all_of(flags.begin(), flags.end(), [](bool b) { return b; });
}

TypeAssignment type_assignment(const Lattice& lattice, std::int64_t u) {
  TypeAssignment out{lattice.interval(u), {}};
  const auto& inst = lattice.instance();
  for (std::int64_t t = inst.m_lower(); t <= inst.m_upper() - 1; ++t)
    for (auto& cube : lattice.cubes_of_weight(u - t)) out.entries.push_back({t, std::move(cube)});
  return out;
}

TypeAssignment type_assignment(const ProblemInstance& inst, std::int64_t u) {
  return type_assignment(Lattice(inst), u);
}

std::vector<IntegerInterval> xi_set(const Lattice& lattice) {
  std::vector<IntegerInterval> out;
  for (std::int64_t u = lattice.first_u(); u <= lattice.last_u(); ++u)
    if (lattice.in_xi(u)) out.push_back(lattice.interval(u));
  return out;
}

std::vector<IntegerInterval> xi_set(const ProblemInstance& inst) { return xi_set(Lattice(inst)); }

}  // namespace slicekit
