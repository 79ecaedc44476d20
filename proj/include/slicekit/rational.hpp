#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace slicekit {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses the exact text forms "p/q" and "k". Decimal or exponent forms are
/// rejected with Error(BadDocument).
Rational parse_rational(std::string_view text);

/// Canonical "p/q" or "k".
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

BigInt floor_of(const Rational& q);
BigInt ceil_of(const Rational& q);

/// True iff q = a / n^b for integers a and b >= 0.
bool is_nadic(const Rational& q, std::int64_t n);

/// Largest dyadic rational with denominator 2^bits that is <= q (resp. >= q).
Rational round_down(const Rational& q, unsigned bits);
Rational round_up(const Rational& q, unsigned bits);

}  // namespace slicekit
