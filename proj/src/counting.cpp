#include "slicekit/counting.hpp"

#include <cmath>
#include <random>
#include <unordered_map>

#include "slicekit/error.hpp"

namespace slicekit {

Digit NadicExpansion::digit(std::size_t k) const {
  if (k == 0) throw Error(ErrorKind::OutOfRange, "digits are numbered from 1");
  if (k <= preperiod.size()) return preperiod[k - 1];
  return period[(k - 1 - preperiod.size()) % period.size()];
}

NadicExpansion nadic_expansion(std::int64_t base, const Rational& x, std::size_t depth) {
  NadicExpansion out;
  out.integer_part = floor_of(x);
  Rational frac = x - out.integer_part;
  const BigInt q = frac.get_den();
  BigInt rem = frac.get_num();
  const BigInt n(static_cast<long>(base));

  // Long division; remainders index positions until one repeats.
  std::map<BigInt, std::size_t> seen;
  std::vector<Digit> digits;
  while (seen.find(rem) == seen.end()) {
    seen.emplace(rem, digits.size());
    BigInt scaled = rem * n;
    BigInt d;
    mpz_fdiv_qr(d.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), q.get_mpz_t());
    digits.push_back(static_cast<Digit>(d.get_si()));
  }
  const std::size_t start = seen.at(rem);
  out.preperiod.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start));
  out.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end());
  out.boundary = is_nadic(x, base);
  if (out.boundary) {
    // Terminating form: the cycle is the zero remainder.
    while (!out.preperiod.empty() && out.preperiod.back() == 0) out.preperiod.pop_back();
    out.period = {0};
  }
  for (std::size_t k = 1; k <= depth; ++k) out.prefix.push_back(out.digit(k));
  return out;
}

NadicExpansion nadic_expansion(const ProblemInstance& inst, const Rational& x, std::size_t depth) {
  if (x < inst.m_lower() || x > inst.m_upper())
    throw Error(ErrorKind::OutOfRange, to_string(x) + " outside [m_*, m^*]");
  return nadic_expansion(inst.base(), x, depth);
}

Rational expansion_value(std::int64_t base, const BigInt& integer_part, const std::vector<Digit>& preperiod,
                         const std::vector<Digit>& period) {
  const BigInt n(static_cast<long>(base));
  BigInt pre = 0, per = 0, pre_scale = 1, per_scale = 1;
  for (Digit d : preperiod) {
    pre = pre * n + d;
    pre_scale *= n;
  }
  for (Digit d : period) {
    per = per * n + d;
    per_scale *= n;
  }
  // 0.pre(per)^inf = (pre + per / (n^|per| - 1)) / n^|pre|
  Rational tail = period.empty() ? Rational(0) : Rational(per, per_scale - 1);
  Rational out = Rational(integer_part) + (Rational(pre) + tail) / Rational(pre_scale);
  out.canonicalize();
  return out;
}

BigInt norm1(const std::vector<BigInt>& v) {
  BigInt s = 0;
  for (const auto& z : v) s += abs(z);
  return s;
}

std::vector<BigInt> cube_count_vector(const Lattice& lattice, const std::vector<CountMatrix>& transitions,
                                      const Rational& x, std::size_t depth) {
  const auto& inst = lattice.instance();
  if (!covering_condition(lattice))
    throw Error(ErrorKind::CoveringRequired, "the counting formula requires the covering condition");
  const auto expansion = nadic_expansion(inst, x, depth);
  if (expansion.boundary)
    throw Error(ErrorKind::BoundaryPoint, to_string(x) + " is of the form q1/n^q2");
  std::vector<BigInt> v(static_cast<std::size_t>(inst.norm1()), BigInt(0));
  const BigInt row = expansion.integer_part - inst.m_lower();
  v[row.get_ui()] = 1;
  for (Digit j : expansion.prefix) v = transitions[static_cast<std::size_t>(j)].left_multiply(v);
  return v;
}

std::vector<BigInt> cube_count_vector(const ProblemInstance& inst, const Rational& x, std::size_t depth) {
  Lattice lattice(inst);
  return cube_count_vector(lattice, transition_matrices(lattice), x, depth);
}

BigInt SliceState::cardinality() const {
  BigInt total = 0;
  for (const auto& entry : offsets) total += entry.second;
  return total;
}

SliceState initial_state(const Rational& x) {
  SliceState s;
  s.offsets[x] = 1;
  return s;
}

SliceState advance(const Lattice& lattice, const SliceState& state) {
  const auto& inst = lattice.instance();
  const auto& weights = lattice.weight_histogram();
  const long n = static_cast<long>(inst.base());
  SliceState next;
  next.depth = state.depth + 1;
  for (const auto& [r, mult] : state.offsets) {
    const Rational scaled = r * n;
    // n r - w in [m_*, m^*]  <=>  w in [n r - m^*, n r - m_*]
    const BigInt w_lo_big = ceil_of(scaled - inst.m_upper());
    const BigInt w_hi_big = floor_of(scaled - inst.m_lower());
    if (w_lo_big > w_hi_big) continue;
    const std::int64_t w_lo = w_lo_big.get_si(), w_hi = w_hi_big.get_si();
    for (auto it = weights.lower_bound(w_lo); it != weights.end() && it->first <= w_hi; ++it) {
      Rational child = scaled - static_cast<long>(it->first);
      child.canonicalize();
      next.offsets[child] += mult * BigInt(std::to_string(it->second));
    }
  }
  return next;
}

std::string to_string(CardVerdict v) {
  switch (v) {
    case CardVerdict::Finite: return "Finite";
    case CardVerdict::Infinite: return "Infinite";
    case CardVerdict::ExceedsBudget: return "ExceedsBudget";
  }
  return "Unknown";
}

CardResult exact_card(const Lattice& lattice, const Rational& x, std::uint64_t budget, std::size_t max_depth) {
  const auto& inst = lattice.instance();
  if (!covering_condition(lattice))
    throw Error(ErrorKind::HypothesisViolated, "exact counting requires the covering condition");
  if (!all_strongly_separated(inst))
    throw Error(ErrorKind::HypothesisViolated, "exact counting requires the strong separation condition");
  const auto expansion = nadic_expansion(inst, x, 0);
  if (max_depth == 0) max_depth = 64 * (expansion.preperiod.size() + expansion.period.size());
  max_depth = std::max<std::size_t>(max_depth, 64);

  struct Seen {
    std::size_t depth;
    std::vector<BigInt> multiplicities;
  };
  std::map<std::vector<Rational>, std::vector<Seen>> history;

  CardResult out;
  SliceState state = initial_state(x);
  const BigInt cap(std::to_string(budget));
  for (;;) {
    const BigInt card = state.cardinality();
    out.cardinalities.push_back(card);
    out.depth_reached = state.depth;
    out.value = card;
    if (card > cap) return out;

    std::vector<Rational> support;
    std::vector<BigInt> mult;
    for (const auto& [r, m] : state.offsets) {
      support.push_back(r);
      mult.push_back(m);
    }
    auto& earlier = history[support];
    for (const auto& prev : earlier) {
      bool ge = true, gt = false;
      for (std::size_t i = 0; i < mult.size(); ++i) {
        if (mult[i] < prev.multiplicities[i]) ge = false;
        if (mult[i] > prev.multiplicities[i]) gt = true;
      }
      if (!ge) continue;
      out.cycle_start = prev.depth;
      out.cycle_length = state.depth - prev.depth;
      // Covering gives every chain a child, so a dominated recurrence adds at
      // least one chain per cycle forever.
      out.verdict = gt ? CardVerdict::Infinite : CardVerdict::Finite;
      return out;
    }
    earlier.push_back({state.depth, std::move(mult)});

    if (state.depth >= max_depth) return out;
    state = advance(lattice, state);
  }
}

CardResult exact_card(const ProblemInstance& inst, const Rational& x, std::uint64_t budget, std::size_t max_depth) {
  return exact_card(Lattice(inst), x, budget, max_depth);
}

namespace {

struct DenseTransitions {
  std::size_t size;
  std::vector<std::vector<double>> matrices;  // row-major per digit
};

DenseTransitions dense_transitions(const Lattice& lattice) {
  DenseTransitions out;
  const auto ts = transition_matrices(lattice);
  out.size = ts.empty() ? 0 : ts.front().size();
  for (const auto& t : ts) {
    std::vector<double> cells(out.size * out.size);
    for (std::size_t i = 0; i < out.size; ++i)
      for (std::size_t j = 0; j < out.size; ++j) cells[i * out.size + j] = t.at(i, j).get_d();
    out.matrices.push_back(std::move(cells));
  }
  return out;
}

// log ||e_i T_{x1} ... T_{xk}||_1 for one random draw; renormalized each step.
double lyapunov_sample(const DenseTransitions& dt, std::size_t depth, std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::size_t> row(0, dt.size - 1);
  std::uniform_int_distribution<std::size_t> digit(0, dt.matrices.size() - 1);
  std::vector<double> v(dt.size, 0.0), w(dt.size);
  v[row(rng)] = 1.0;
  double log_norm = 0.0;
  for (std::size_t k = 0; k < depth; ++k) {
    const auto& t = dt.matrices[digit(rng)];
    std::fill(w.begin(), w.end(), 0.0);
    for (std::size_t i = 0; i < dt.size; ++i) {
      if (v[i] == 0.0) continue;
      for (std::size_t j = 0; j < dt.size; ++j) w[j] += v[i] * t[i * dt.size + j];
    }
    double s = 0.0;
    for (double c : w) s += c;
    log_norm += std::log(s);
    for (std::size_t j = 0; j < dt.size; ++j) v[j] = w[j] / s;
  }
  return log_norm;
}

LyapunovEstimate summarize(const std::vector<double>& logs, std::size_t depth, std::int64_t base) {
  LyapunovEstimate out;
  if (logs.empty() || depth == 0) return out;
  const double scale = static_cast<double>(depth) * std::log(static_cast<double>(base));
  double sum = 0.0;
  for (double l : logs) sum += l / scale;
  const double mean = sum / static_cast<double>(logs.size());
  double var = 0.0;
  for (double l : logs) var += (l / scale - mean) * (l / scale - mean);
  out.estimate = mean;
  if (logs.size() > 1)
    out.standard_error = std::sqrt(var / static_cast<double>(logs.size() - 1) / static_cast<double>(logs.size()));
  return out;
}

void require_covering(const Lattice& lattice) {
  if (!covering_condition(lattice))
    throw Error(ErrorKind::CoveringRequired, "the Lyapunov estimate requires the covering condition");
}

}  // namespace

LyapunovEstimate lyapunov_estimate_serial(const Lattice& lattice, std::size_t samples, std::size_t depth,
                                          std::uint64_t seed) {
  require_covering(lattice);
  const auto dt = dense_transitions(lattice);
  std::vector<double> logs(samples);
  for (std::size_t s = 0; s < samples; ++s) logs[s] = lyapunov_sample(dt, depth, seed, s);
  return summarize(logs, depth, lattice.base());
}

LyapunovEstimate lyapunov_estimate(const Lattice& lattice, std::size_t samples, std::size_t depth,
                                   std::uint64_t seed) {
  require_covering(lattice);
  const auto dt = dense_transitions(lattice);
  std::vector<double> logs(samples);
  const auto count = static_cast<std::int64_t>(samples);
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < count; ++s)
    logs[static_cast<std::size_t>(s)] = lyapunov_sample(dt, depth, seed, static_cast<std::uint64_t>(s));
  // Reduction happens serially in sample order, so the sum is reproducible.
  return summarize(logs, depth, lattice.base());
}

}  // namespace slicekit
