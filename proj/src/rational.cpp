#include "upos/rational.hpp"

#include <cctype>

#include "upos/errors.hpp"

namespace upos {

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Integer integer_from(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational ratio(const Integer& n, const Integer& d) {
  if (d == 0) throw DivisionByZero("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) ||
      (slash != std::string_view::npos && (den.front() == '-' || den.front() == '+'))) {
    throw InvalidInput("not a rational literal: '" + std::string(text) + "'");
  }
  Integer d = integer_from(den);
  if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  Rational q(integer_from(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

int sign(const Rational& q) { return sgn(q); }
int sign(const Integer& z) { return sgn(z); }

long ilog2(const Rational& q) {
  Integer num = abs(q.get_num());
  const Integer& den = q.get_den();
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  // 2^e <= |q| < 2^(e+1) after at most one correction step.
  Rational scaled = abs(q);
  if (e >= 0) {
    scaled /= Rational(Integer(1) << static_cast<unsigned long>(e));
  } else {
    scaled *= Rational(Integer(1) << static_cast<unsigned long>(-e));
  }
  if (scaled < 1) --e;
  return e;
}

Rational sqrt_floor(const Rational& q, unsigned long bits) {
  // floor(sqrt(num * 4^bits / den)) / 2^bits
  Integer scaled = (q.get_num() << (2 * bits)) / q.get_den();
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Rational r(root, Integer(1) << bits);
  r.canonicalize();
  return r;
}

Rational sqrt_ceil(const Rational& q, unsigned long bits) {
  Rational r = sqrt_floor(q, bits);
  if (r * r < q) {
    r += Rational(1, Integer(1) << bits);
    r.canonicalize();
  }
  return r;
}

Integer floor_div(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Rational pow(const Rational& q, unsigned long e) {
  Integer n;
  Integer d;
  mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), e);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw InvalidInput("simplest_between: empty interval");
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_between(-hi, -lo);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  const Rational frac = 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl));
  return Rational(fl) + frac;
}

}  // namespace upos
