#include "slicekit/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "slicekit/error.hpp"

namespace slicekit {

namespace {

constexpr std::size_t kIterationCap = 1'000'000;
constexpr unsigned kIterateBits = 52;
constexpr unsigned kReportBits = 40;

struct SparseEntry {
  std::size_t col;
  BigInt value;
  double approx;
};
using SparseRows = std::vector<std::vector<SparseEntry>>;

// Certified bounds for one irreducible block of size >= 2.
RadiusResult irreducible_block_radius(const SparseRows& rows, const Rational& tolerance) {
  const std::size_t k = rows.size();
  std::vector<double> x(k, 1.0), y(k);

  auto certify = [&](const std::vector<double>& iterate) {
    const double top = *std::max_element(iterate.begin(), iterate.end());
    std::vector<BigInt> X(k);
    for (std::size_t i = 0; i < k; ++i) {
      const double scaled = std::ldexp(iterate[i] / top, kIterateBits);
      X[i] = BigInt(std::max(1.0, std::round(scaled)));
    }
    RadiusResult r;
    bool first = true;
    for (std::size_t i = 0; i < k; ++i) {
      BigInt acc = 0;
      for (const auto& e : rows[i]) acc += e.value * X[e.col];
      Rational ratio(acc, X[i]);
      ratio.canonicalize();
      if (first || ratio < r.lower) r.lower = ratio;
      if (first || ratio > r.upper) r.upper = ratio;
      first = false;
    }
    return r;
  };

  // The first certificate is taken on the starting vector; integer radii with
  // a constant Perron vector are settled without iterating.
  RadiusResult best = certify(x);
  for (std::size_t iter = 1; iter <= kIterationCap && best.width() > tolerance; ++iter) {
    for (std::size_t i = 0; i < k; ++i) {
      double acc = x[i];
      for (const auto& e : rows[i]) acc += e.approx * x[e.col];
      y[i] = acc;
    }
    const double top = *std::max_element(y.begin(), y.end());
    for (std::size_t i = 0; i < k; ++i) x[i] = std::max(y[i] / top, 1e-300);
    if (iter % 32 != 0) continue;

    double lo = 0, hi = 0;
    for (std::size_t i = 0; i < k; ++i) {
      double acc = 0;
      for (const auto& e : rows[i]) acc += e.approx * x[e.col];
      const double ratio = acc / x[i];
      if (i == 0 || ratio < lo) lo = ratio;
      if (i == 0 || ratio > hi) hi = ratio;
    }
    if (hi - lo <= 1e-3 * tolerance.get_d() || iter % 4096 == 0) {
      auto candidate = certify(x);
      if (candidate.width() < best.width()) best = candidate;
    }
  }
  best.estimate = Rational((best.lower + best.upper) / 2).get_d();
  return best;
}

RadiusResult radius_from_rows(const SparseRows& rows, double tolerance) {
  const Rational tol(tolerance);
  RadiusResult total;
  total.lower = 0;
  total.upper = 0;
  const std::size_t n = rows.size();
  if (n == 0) return total;

  Digraph pattern(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& e : rows[i]) pattern.add_edge(i, e.col);
  pattern.normalize();
  const auto comps = strongly_connected_components(pattern);

  for (const auto& comp : comps.components) {
    RadiusResult block;
    if (comp.size() == 1) {
      const auto v = comp.front();
      BigInt diag = 0;
      for (const auto& e : rows[v])
        if (e.col == v) diag += e.value;
      block.lower = block.upper = Rational(diag);
      block.estimate = diag.get_d();
    } else {
      std::vector<std::size_t> local(n, n);
      for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = i;
      SparseRows sub(comp.size());
      for (std::size_t i = 0; i < comp.size(); ++i)
        for (const auto& e : rows[comp[i]])
          if (local[e.col] != n) sub[i].push_back({local[e.col], e.value, e.approx});
      block = irreducible_block_radius(sub, tol);
    }
    if (block.lower > total.lower) total.lower = block.lower;
    if (block.upper > total.upper) total.upper = block.upper;
  }

  if (!total.exact()) {
    total.lower = round_down(total.lower, kReportBits);
    total.upper = round_up(total.upper, kReportBits);
  }
  if (total.width() > tol)
    throw Error(ErrorKind::WideEnclosure, "spectral radius enclosure [" + to_string(total.lower) + ", " +
                                              to_string(total.upper) + "] wider than tolerance");
  total.estimate = Rational((total.lower + total.upper) / 2).get_d();
  return total;
}

// ---- exact polynomial helpers over Q, coefficients lowest degree first ----

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// Remainder and quotient of a / b, b nonzero.
std::pair<Poly, Poly> divide(Poly a, const Poly& b) {
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const Rational factor = a.back() / b.back();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly monic(Poly p) {
  trim(p);
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Poly squarefree(const Poly& p) {
  const auto g = gcd(p, derivative(p));
  return monic(divide(p, g).first);
}

Rational evaluate(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

int sign_changes(const std::vector<Poly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    const int s = sgn(evaluate(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Number of distinct roots of squarefree p in the closed interval [a, b].
int roots_in(const Poly& p, const Rational& a, const Rational& b) {
  if (p.size() <= 1) return 0;
  std::vector<Poly> chain{p, derivative(p)};
  while (chain.back().size() > 1) {
    auto r = divide(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  int count = sign_changes(chain, a) - sign_changes(chain, b);
  if (evaluate(p, a) == 0) ++count;
  return count;
}

Poly to_rational_poly(const std::vector<BigInt>& coeffs) {
  Poly p;
  for (const auto& c : coeffs) p.emplace_back(c);
  trim(p);
  return p;
}

}  // namespace

CountMatrix::CountMatrix(std::size_t size, std::int64_t first_index)
    : size_(size), first_index_(first_index), cells_(size * size, BigInt(0)) {}

CountMatrix CountMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::int64_t first_index) {
  CountMatrix m(rows.size(), first_index);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw Error(ErrorKind::BadDocument, "matrix rows must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[i][j] < 0) throw Error(ErrorKind::BadDocument, "matrix entries must be nonnegative");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

const BigInt& CountMatrix::entry(std::int64_t u, std::int64_t v) const {
  const auto r = u - first_index_, c = v - first_index_;
  if (r < 0 || c < 0 || r >= static_cast<std::int64_t>(size_) || c >= static_cast<std::int64_t>(size_))
    throw Error(ErrorKind::OutOfRange, "matrix index out of range");
  return at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
}

bool CountMatrix::is_zero() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const BigInt& z) { return z == 0; });
}

std::vector<BigInt> CountMatrix::left_multiply(const std::vector<BigInt>& row) const {
  std::vector<BigInt> out(size_, BigInt(0));
  for (std::size_t i = 0; i < size_; ++i) {
    if (row[i] == 0) continue;
    for (std::size_t j = 0; j < size_; ++j)
      if (at(i, j) != 0) out[j] += row[i] * at(i, j);
  }
  return out;
}

Digraph CountMatrix::pattern() const {
  Digraph g(size_);
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j)
      if (at(i, j) > 0) g.add_edge(i, j);
  return g;
}

CountMatrix CountMatrix::principal_submatrix(const std::vector<std::size_t>& indices) const {
  CountMatrix sub(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < indices.size(); ++j) sub.at(i, j) = at(indices[i], indices[j]);
  return sub;
}

CountMatrix CountMatrix::permuted(const std::vector<std::size_t>& order) const {
  auto out = principal_submatrix(order);
  out.first_index_ = first_index_;
  return out;
}

std::vector<CountMatrix> transition_matrices(const Lattice& lattice) {
  const auto& inst = lattice.instance();
  const auto size = static_cast<std::size_t>(inst.norm1());
  const std::int64_t lo = inst.m_lower(), hi = inst.m_upper() - 1, n = inst.base();
  std::vector<CountMatrix> out;
  for (std::int64_t j = 0; j < n; ++j) {
    CountMatrix t(size, lo);
    for (std::int64_t u = lo; u <= hi; ++u)
      for (std::int64_t v = lo; v <= hi; ++v) {
        const auto count = lattice.cubes_with_weight(n * u + j - v);
        if (count > 0) t.at(static_cast<std::size_t>(u - lo), static_cast<std::size_t>(v - lo)) =
            BigInt(std::to_string(count));
      }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<CountMatrix> transition_matrices(const ProblemInstance& inst) {
  return transition_matrices(Lattice(inst));
}

RadiusResult spectral_radius(const CountMatrix& matrix, double tolerance) {
  SparseRows rows(matrix.size());
  for (std::size_t i = 0; i < matrix.size(); ++i)
    for (std::size_t j = 0; j < matrix.size(); ++j)
      if (matrix.at(i, j) != 0) rows[i].push_back({j, matrix.at(i, j), matrix.at(i, j).get_d()});
  return radius_from_rows(rows, tolerance);
}

RadiusResult spectral_radius(const Digraph& g, const std::vector<std::size_t>& vertices, double tolerance) {
  std::vector<std::size_t> local(g.size(), g.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = i;
  SparseRows rows(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (auto w : g.successors[vertices[i]])
      if (local[w] != g.size()) rows[i].push_back({local[w], BigInt(1), 1.0});
  return radius_from_rows(rows, tolerance);
}

bool irreducible(const CountMatrix& matrix) {
  if (matrix.size() == 0) return false;
  auto g = matrix.pattern();
  g.normalize();
  const auto comps = strongly_connected_components(g);
  if (comps.components.size() != 1) return false;
  if (matrix.size() == 1) return matrix.at(0, 0) > 0;
  return true;
}

std::vector<BigInt> characteristic_polynomial(const CountMatrix& matrix) {
  // Faddeev-LeVerrier over Q: exact and adequate for the small blocks where
  // it is used.
  const std::size_t n = matrix.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  std::vector<Rational> a(n * n), mk(n * n, Rational(0)), tmp(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = Rational(matrix.at(i / n, i % n));
  for (std::size_t k = 1; k <= n; ++k) {
    // mk <- A * mk + c[n-k+1] I
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational acc = 0;
        for (std::size_t p = 0; p < n; ++p) acc += a[i * n + p] * mk[p * n + j];
        if (i == j) acc += c[n - k + 1];
        tmp[i * n + j] = acc;
      }
    mk.swap(tmp);
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t p = 0; p < n; ++p) trace += a[i * n + p] * mk[p * n + i];
    c[n - k] = -trace / static_cast<long>(k);
  }
  std::vector<BigInt> out;
  for (const auto& q : c) out.push_back(q.get_num());
  return out;
}

RadiusComparison compare_radii(const CountMatrix& a, const RadiusResult& ra, const CountMatrix& b,
                               const RadiusResult& rb, double tolerance, std::size_t exact_limit) {
  if (a.size() <= exact_limit && b.size() <= exact_limit && a.size() > 0 && b.size() > 0) {
    const auto qa = squarefree(to_rational_poly(characteristic_polynomial(a)));
    const auto qb = squarefree(to_rational_poly(characteristic_polynomial(b)));
    if (roots_in(qa, ra.lower, ra.upper) == 1 && roots_in(qb, rb.lower, rb.upper) == 1) {
      const Rational lo = std::max(ra.lower, rb.lower);
      const Rational hi = std::min(ra.upper, rb.upper);
      if (lo > hi) return {false, Verdict::Exact};
      const auto g = gcd(qa, qb);
      return {roots_in(g, lo, hi) >= 1, Verdict::Exact};
    }
  }
  const Rational gap = std::max(ra.lower, rb.lower) - std::min(ra.upper, rb.upper);
  return {gap <= Rational(tolerance), Verdict::Tolerance};
}

std::string to_string(Verdict v) { return v == Verdict::Exact ? "exact" : "tolerance"; }

}  // namespace slicekit
