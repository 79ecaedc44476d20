#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace slicekit {

using Digit = std::int64_t;
using DigitSet = std::vector<Digit>;

/// m_* = sum of negative coefficients, m^* = sum of positive ones.
struct Bounds {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::int64_t norm1 = 0;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Base n, digit sets A_1..A_l and coefficient vector m. Immutable once
/// constructed; construction validates every invariant.
class ProblemInstance {
 public:
  ProblemInstance(std::int64_t base, std::vector<DigitSet> digit_sets,
                  std::vector<std::int64_t> coefficients);

  std::int64_t base() const noexcept { return base_; }
  const std::vector<DigitSet>& digit_sets() const noexcept { return digit_sets_; }
  const std::vector<std::int64_t>& coefficients() const noexcept { return coefficients_; }
  std::size_t dimension() const noexcept { return digit_sets_.size(); }

  const Bounds& bounds() const noexcept { return bounds_; }
  std::int64_t m_lower() const noexcept { return bounds_.lower; }
  std::int64_t m_upper() const noexcept { return bounds_.upper; }
  std::int64_t norm1() const noexcept { return bounds_.norm1; }

  /// |A_1| * ... * |A_l|, saturating at UINT64_MAX.
  std::uint64_t cubes_per_level() const noexcept { return cubes_per_level_; }

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;

 private:
  std::int64_t base_;
  std::vector<DigitSet> digit_sets_;
  std::vector<std::int64_t> coefficients_;
  Bounds bounds_;
  std::uint64_t cubes_per_level_ = 1;
};

ProblemInstance parse_instance(std::string_view json_text);
ProblemInstance load_instance(const std::string& path);
std::string serialize_instance(const ProblemInstance& inst);

Bounds derived_bounds(const ProblemInstance& inst);

}  // namespace slicekit
