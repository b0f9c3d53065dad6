#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "upos/interval.hpp"
#include "upos/rational.hpp"

namespace upos {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t k);
  static UniPoly x() { return monomial(Rational(1), 1); }
  /// Monic polynomial with the given rational roots.
  static UniPoly from_roots(const std::vector<Rational>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Coefficient of x^k (zero beyond the degree).
  Rational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& lc() const;

  Rational eval(const Rational& x) const;
  Interval eval(const Interval& x) const;
  ComplexInterval eval(const ComplexInterval& z) const;

  UniPoly derivative() const;
  UniPoly monic() const;
  /// Integer coefficients with content 1 and positive leading coefficient.
  UniPoly primitive() const;
  std::vector<Integer> integer_coeffs() const;
  /// p(-x)
  UniPoly reflect() const;
  /// p(x + a)
  UniPoly shift(const Rational& a) const;
  /// p(c x)
  UniPoly scale(const Rational& c) const;
  /// x^deg p(1/x)
  UniPoly reverse() const;
  /// p(x)^k
  UniPoly pow(unsigned k) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string str(const char* var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; throws DivisionByZero for b = 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// p / gcd(p, p'), monic. Throws InvalidInput for the zero polynomial.
UniPoly squarefree_part(const UniPoly& p);
bool is_squarefree(const UniPoly& p);
/// Yun decomposition: factors[i] is the product of the roots of multiplicity i+1.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);

/// Sturm chain of p, each member scaled by a positive constant to integer content 1.
std::vector<UniPoly> sturm_sequence(const UniPoly& p);
/// Number of real roots of p in the open interval (a, b). Throws InvalidInput
/// unless a < b and p is squarefree, EndpointRoot if p(a) = 0 or p(b) = 0.
int sturm_count(const UniPoly& p, const Rational& a, const Rational& b);
int sturm_count(const std::vector<UniPoly>& chain, const Rational& a, const Rational& b);
/// Number of distinct real roots of p.
int real_root_count(const UniPoly& p);

/// Resultant of two nonzero polynomials.
Rational resultant(const UniPoly& p, const UniPoly& q);

/// Polynomial in y whose coefficients are polynomials in x: terms[j] multiplies y^j.
struct BiPoly {
  std::vector<UniPoly> terms;

  int degree_y() const;
  int degree_x() const;
  UniPoly at_x(const Rational& x0) const;
};

/// Res_y(p, q) as a polynomial in x. Both inputs must have positive y-degree.
UniPoly resultant_bivariate(const BiPoly& p, const BiPoly& q);

UniPoly cyclotomic(unsigned n);
/// Euler's totient.
unsigned long totient(unsigned long n);

/// Positive rational lower bound on the distance between distinct roots; 1 below degree 2.
Rational mignotte_gap(const UniPoly& p);
/// Rational upper bound on the modulus of every root (Cauchy).
Rational root_bound(const UniPoly& p);

}  // namespace upos
