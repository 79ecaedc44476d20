#include "slicekit/oracle.hpp"

#include "slicekit/error.hpp"

namespace slicekit {

namespace {

// Every digit tuple of one level with its weight, lexicographic.
struct Tuple {
  std::vector<Digit> digits;
  std::int64_t weight;
};

std::vector<Tuple> level_tuples(const ProblemInstance& inst) {
  std::vector<Tuple> out{{{}, 0}};
  for (std::size_t k = 0; k < inst.dimension(); ++k) {
    std::vector<Tuple> next;
    for (const auto& t : out)
      for (Digit d : inst.digit_sets()[k]) {
        Tuple grown = t;
        grown.digits.push_back(d);
        grown.weight += inst.coefficients()[k] * d;
        next.push_back(std::move(grown));
      }
    out = std::move(next);
  }
  return out;
}

struct Walker {
  const ProblemInstance& inst;
  const std::vector<Tuple>& tuples;
  const Rational& x;
  std::size_t depth;

  bool contains(const Rational& prefix, const Rational& scale) const {
    return prefix + scale * inst.m_lower() <= x && x <= prefix + scale * inst.m_upper();
  }

  // prefix = sum_j n^-j (m, i_j) over the chain so far; scale = n^-level.
  std::uint64_t count(const Rational& prefix, const Rational& scale, std::size_t level) const {
    if (level == depth) return 1;
    const Rational child_scale = scale / static_cast<long>(inst.base());
    std::uint64_t total = 0;
    for (const auto& t : tuples) {
      const Rational child = prefix + child_scale * t.weight;
      if (contains(child, child_scale)) total += count(child, child_scale, level + 1);
    }
    return total;
  }
};

void check_range(const ProblemInstance& inst, const Rational& x) {
  if (x < inst.m_lower() || x > inst.m_upper())
    throw Error(ErrorKind::OutOfRange, to_string(x) + " outside [m_*, m^*]");
}

}  // namespace

std::uint64_t brute_force_cube_count_serial(const ProblemInstance& inst, const Rational& x, std::size_t depth) {
  check_range(inst, x);
  const auto tuples = level_tuples(inst);
  Walker walker{inst, tuples, x, depth};
  return walker.count(Rational(0), Rational(1), 0);
}

std::uint64_t brute_force_cube_count(const ProblemInstance& inst, const Rational& x, std::size_t depth) {
  check_range(inst, x);
  if (depth == 0) return 1;
  const auto tuples = level_tuples(inst);
  Walker walker{inst, tuples, x, depth};
  const Rational scale = Rational(1, static_cast<unsigned long>(inst.base()));
  const auto count = static_cast<std::int64_t>(tuples.size());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (std::int64_t k = 0; k < count; ++k) {
    const Rational child = scale * tuples[static_cast<std::size_t>(k)].weight;
    if (walker.contains(child, scale)) total += walker.count(child, scale, 1);
  }
  return total;
}

std::vector<CubeChain> brute_force_solutions(const ProblemInstance& inst, const Rational& x, std::size_t depth,
                                             std::size_t cap) {
  check_range(inst, x);
  const auto tuples = level_tuples(inst);
  // One entry per surviving chain and level: parent in the previous level,
  // tuple taken, and the prefix sum so far.
  struct Node {
    std::size_t parent;
    std::size_t tuple;
    Rational prefix;
  };
  std::vector<std::vector<Node>> levels{{{0, 0, Rational(0)}}};
  Rational scale = 1;
  for (std::size_t level = 0; level < depth; ++level) {
    scale /= static_cast<long>(inst.base());
    std::vector<Node> next;
    const auto& frontier = levels.back();
    for (std::size_t p = 0; p < frontier.size(); ++p)
      for (std::size_t k = 0; k < tuples.size(); ++k) {
        Rational child = frontier[p].prefix + scale * tuples[k].weight;
        if (child + scale * inst.m_lower() <= x && x <= child + scale * inst.m_upper()) {
          if (next.size() >= cap) throw Error(ErrorKind::TooLarge, "oracle frontier exceeds the chain cap");
          next.push_back({p, k, std::move(child)});
        }
      }
    levels.push_back(std::move(next));
  }
  // Breadth-first expansion in tuple order already yields lexicographic order.
  std::vector<CubeChain> out;
  out.reserve(levels.back().size());
  for (std::size_t leaf = 0; leaf < levels.back().size(); ++leaf) {
    CubeChain chain;
    chain.digits.resize(depth);
    std::size_t at = leaf;
    for (std::size_t level = depth; level > 0; --level) {
      const auto& node = levels[level][at];
      chain.digits[level - 1] = tuples[node.tuple].digits;
      at = node.parent;
    }
    const auto& prefix = levels.back()[leaf].prefix;
    chain.lower = prefix + scale * inst.m_lower();
    chain.upper = prefix + scale * inst.m_upper();
    chain.lower.canonicalize();
    chain.upper.canonicalize();
    out.push_back(std::move(chain));
  }
  return out;
}

}  // namespace slicekit
