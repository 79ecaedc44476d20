#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slicekit/digraph.hpp"
#include "slicekit/lattice.hpp"
#include "slicekit/rational.hpp"

namespace slicekit {

/// Dense square matrix of nonnegative integers. Rows and columns carry an
/// integer index starting at first_index (m_* for the T_j matrices, 0
/// otherwise).
class CountMatrix {
 public:
  CountMatrix() = default;
  CountMatrix(std::size_t size, std::int64_t first_index = 0);

  static CountMatrix from_rows(const std::vector<std::vector<long>>& rows, std::int64_t first_index = 0);

  std::size_t size() const noexcept { return size_; }
  std::int64_t first_index() const noexcept { return first_index_; }

  BigInt& at(std::size_t row, std::size_t col) { return cells_[row * size_ + col]; }
  const BigInt& at(std::size_t row, std::size_t col) const { return cells_[row * size_ + col]; }

  /// Entry addressed by the external indices (u, v).
  const BigInt& entry(std::int64_t u, std::int64_t v) const;

  bool is_zero() const;
  /// Row vector times matrix.
  std::vector<BigInt> left_multiply(const std::vector<BigInt>& row) const;
  Digraph pattern() const;
  CountMatrix principal_submatrix(const std::vector<std::size_t>& indices) const;
  CountMatrix permuted(const std::vector<std::size_t>& order) const;

  friend bool operator==(const CountMatrix& a, const CountMatrix& b) {
    return a.size_ == b.size_ && a.first_index_ == b.first_index_ && a.cells_ == b.cells_;
  }

 private:
  std::size_t size_ = 0;
  std::int64_t first_index_ = 0;
  std::vector<BigInt> cells_;
};

/// T_0 .. T_{n-1}: b_uv = #{ i : (nu + j) - (m, i) = v }, u, v in [m_*, m^*-1].
std::vector<CountMatrix> transition_matrices(const Lattice& lattice);
std::vector<CountMatrix> transition_matrices(const ProblemInstance& inst);

/// Certified enclosure lower <= rho <= upper of a Perron root.
struct RadiusResult {
  double estimate = 0.0;
  Rational lower;
  Rational upper;

  Rational width() const { return upper - lower; }
  bool exact() const { return lower == upper; }
};

inline constexpr double kDefaultRadiusTolerance = 1e-9;

/// Power iteration on each irreducible diagonal block (shifted by the
/// identity so periodic blocks converge) followed by Collatz-Wielandt
/// min/max ratio bounds taken exactly on an integer iterate. Throws
/// WideEnclosure if the certified width stays above tolerance.
RadiusResult spectral_radius(const CountMatrix& matrix, double tolerance = kDefaultRadiusTolerance);
/// Spectral radius of the 0-1 adjacency matrix of g restricted to vertices.
RadiusResult spectral_radius(const Digraph& g, const std::vector<std::size_t>& vertices,
                             double tolerance = kDefaultRadiusTolerance);

/// True iff the positive-entry digraph is strongly connected (a 1x1 zero
/// matrix is not irreducible).
bool irreducible(const CountMatrix& matrix);

/// Coefficients of det(xI - A), lowest degree first.
std::vector<BigInt> characteristic_polynomial(const CountMatrix& matrix);

enum class Verdict { Exact, Tolerance };

struct RadiusComparison {
  bool equal = false;
  Verdict basis = Verdict::Tolerance;
};

/// Decides rho(a) == rho(b). Matrices of size <= exact_limit are settled
/// exactly via Sturm root isolation of their characteristic polynomials
/// inside the certified enclosures; otherwise (or if isolation fails) the
/// enclosures are compared at the given tolerance.
RadiusComparison compare_radii(const CountMatrix& a, const RadiusResult& ra, const CountMatrix& b,
                               const RadiusResult& rb, double tolerance = kDefaultRadiusTolerance,
                               std::size_t exact_limit = 12);

std::string to_string(Verdict v);

}  // namespace slicekit
