#include "slicekit/instance.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "slicekit/error.hpp"

namespace slicekit {

namespace {

// Keeps every weight (m, i) and every scaled endpoint n * m^* well inside int64.
constexpr std::int64_t kMagnitudeCap = std::int64_t{1} << 40;

}  // namespace

ProblemInstance::ProblemInstance(std::int64_t base, std::vector<DigitSet> digit_sets,
                                 std::vector<std::int64_t> coefficients)
    : base_(base), digit_sets_(std::move(digit_sets)), coefficients_(std::move(coefficients)) {
  if (base_ < 2) throw Error(ErrorKind::BadBase, "base must be >= 2, got " + std::to_string(base_));
  if (base_ > (std::int64_t{1} << 20))
    throw Error(ErrorKind::BadBase, "base above 2^20 is not supported");
  if (digit_sets_.empty()) throw Error(ErrorKind::LengthMismatch, "at least one digit set is required");
  if (digit_sets_.size() != coefficients_.size())
    throw Error(ErrorKind::LengthMismatch,
                std::to_string(digit_sets_.size()) + " digit sets but " +
                    std::to_string(coefficients_.size()) + " coefficients");

  for (std::size_t k = 0; k < digit_sets_.size(); ++k) {
    auto& set = digit_sets_[k];
    if (set.empty()) throw Error(ErrorKind::EmptyDigitSet, "digit set " + std::to_string(k) + " is empty");
    for (Digit d : set)
      if (d < 0 || d > base_ - 1)
        throw Error(ErrorKind::DigitOutOfRange,
                    "digit " + std::to_string(d) + " not in {0,...," + std::to_string(base_ - 1) + "}");
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end())
      throw Error(ErrorKind::DuplicateDigit, "digit set " + std::to_string(k) + " repeats a digit");
    if (cubes_per_level_ > std::numeric_limits<std::uint64_t>::max() / set.size())
      cubes_per_level_ = std::numeric_limits<std::uint64_t>::max();
    else
      cubes_per_level_ *= set.size();
  }

  for (std::int64_t m : coefficients_) {
    if (m == 0) throw Error(ErrorKind::ZeroCoefficient, "coefficients must be nonzero");
    if (m > kMagnitudeCap || m < -kMagnitudeCap)
      throw Error(ErrorKind::OutOfRange, "coefficient magnitude above 2^40");
    if (m < 0)
      bounds_.lower += m;
    else
      bounds_.upper += m;
    if (bounds_.upper > kMagnitudeCap || -bounds_.lower > kMagnitudeCap)
      throw Error(ErrorKind::OutOfRange, "coefficient sums above 2^40");
  }
  bounds_.norm1 = bounds_.upper - bounds_.lower;
  if (bounds_.norm1 > kMagnitudeCap / base_)
    throw Error(ErrorKind::OutOfRange, "n * ||m||_1 above 2^40");
}

Bounds derived_bounds(const ProblemInstance& inst) { return inst.bounds(); }

ProblemInstance parse_instance(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::BadDocument, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::BadDocument, "instance must be a JSON object");
  for (const auto& item : doc.items()) {
    const auto& key = item.key();
    if (key != "n" && key != "digit_sets" && key != "coefficients")
      throw Error(ErrorKind::BadDocument, "unknown key '" + key + "'");
  }
  for (const char* key : {"n", "digit_sets", "coefficients"})
    if (!doc.contains(key)) throw Error(ErrorKind::BadDocument, std::string("missing key '") + key + "'");

  const auto& n = doc["n"];
  if (!n.is_number_integer()) throw Error(ErrorKind::BadDocument, "'n' must be an integer");

  const auto& sets = doc["digit_sets"];
  if (!sets.is_array()) throw Error(ErrorKind::BadDocument, "'digit_sets' must be an array");
  std::vector<DigitSet> digit_sets;
  for (const auto& set : sets) {
    if (!set.is_array()) throw Error(ErrorKind::BadDocument, "each digit set must be an array");
    DigitSet digits;
    for (const auto& d : set) {
      if (!d.is_number_integer()) throw Error(ErrorKind::BadDocument, "digits must be integers");
      digits.push_back(d.get<std::int64_t>());
    }
    digit_sets.push_back(std::move(digits));
  }

  const auto& coeffs = doc["coefficients"];
  if (!coeffs.is_array()) throw Error(ErrorKind::BadDocument, "'coefficients' must be an array");
  std::vector<std::int64_t> coefficients;
  for (const auto& c : coeffs) {
    if (!c.is_number_integer()) throw Error(ErrorKind::BadDocument, "coefficients must be integers");
    coefficients.push_back(c.get<std::int64_t>());
  }

  return ProblemInstance(n.get<std::int64_t>(), std::move(digit_sets), std::move(coefficients));
}

ProblemInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadDocument, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string serialize_instance(const ProblemInstance& inst) {
  nlohmann::ordered_json doc;
  doc["n"] = inst.base();
  doc["digit_sets"] = inst.digit_sets();
  doc["coefficients"] = inst.coefficients();
  return doc.dump();
}

}  // namespace slicekit
