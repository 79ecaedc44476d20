#include "slicekit/rational.hpp"

#include <cctype>

#include "slicekit/error.hpp"

namespace slicekit {

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer_text(text))
      throw Error(ErrorKind::BadDocument, "not an exact rational: '" + std::string(text) + "'");
    return Rational(parse_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorKind::BadDocument, "not an exact rational: '" + std::string(text) + "'");
  BigInt d = parse_integer(den);
  if (d == 0) throw Error(ErrorKind::BadDocument, "zero denominator in '" + std::string(text) + "'");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational make_rational(std::int64_t num, std::int64_t den) {
  Rational q(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

BigInt floor_of(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt ceil_of(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_nadic(const Rational& q, std::int64_t n) {
  BigInt den = q.get_den();
  const BigInt base(static_cast<long>(n));
  // Strip every prime factor shared with n.
  for (;;) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), base.get_mpz_t());
    if (g == 1) break;
    while (mpz_divisible_p(den.get_mpz_t(), g.get_mpz_t())) den /= g;
  }
  return den == 1;
}

Rational round_down(const Rational& q, unsigned bits) {
  BigInt scale = 1;
  scale <<= bits;
  BigInt scaled = floor_of(q * scale);
  Rational r(scaled, scale);
  r.canonicalize();
  return r;
}

Rational round_up(const Rational& q, unsigned bits) { return -round_down(-q, bits); }

}  // namespace slicekit
