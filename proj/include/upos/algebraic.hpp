#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "upos/poly.hpp"
#include "upos/roots.hpp"

namespace upos {

/// Degree above which algebraic operations give up with ResourceLimit.
inline constexpr int kMaxAlgebraicDegree = 256;

/// A complex algebraic number: a squarefree integer polynomial together with
/// a box that isolates one of its roots. Copies share state; values are
/// immutable, only the cached box gets tighter over time.
class AlgebraicNumber {
 public:
  AlgebraicNumber();
  AlgebraicNumber(const Rational& q);  // NOLINT(google-explicit-constructor)
  AlgebraicNumber(long n);             // NOLINT(google-explicit-constructor)

  /// Trusts the caller: p squarefree, box isolates a root and is smaller than
  /// mignotte_gap(p) / 4 (real roots: point or sign-change interval).
  static AlgebraicNumber from_isolated(const UniPoly& p, const Box& box, bool minimal);
  /// The root of p (any nonzero polynomial) that lies in every enclosure
  /// produced by `enclose(bits)`; enclosures must shrink to that root.
  static AlgebraicNumber from_enclosure(const UniPoly& p, const std::function<ComplexInterval(long)>& enclose);
  /// re + im * i
  static AlgebraicNumber gaussian(const Rational& re, const Rational& im);
  /// exp(2 pi i t)
  static AlgebraicNumber unit_root(const Rational& t);

  const UniPoly& defining() const;
  int degree() const { return defining().degree(); }
  bool minimal() const;
  bool is_real() const;
  bool is_rational() const;
  /// Throws InvalidInput unless is_rational().
  const Rational& rational() const;

  /// Current isolating box (a snapshot).
  Box region() const;
  /// Tightens the cached box to at most `target` in both directions.
  void refine(const Rational& target) const;
  /// Enclosure of width at most 2^-bits around the number.
  ComplexInterval enclose(long bits) const;
  Interval enclose_real(long bits) const;

  double approx_re() const;
  double approx_im() const;
  std::string str() const;

 private:
  struct Node;
  explicit AlgebraicNumber(std::shared_ptr<Node> node);
  std::shared_ptr<Node> node_;
};

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator-(const AlgebraicNumber& a);

AlgebraicNumber alg_add(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber alg_mul(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber alg_neg(const AlgebraicNumber& a);
/// Throws DivisionByZero for 0.
AlgebraicNumber alg_inv(const AlgebraicNumber& a);
AlgebraicNumber alg_conj(const AlgebraicNumber& a);
/// a^n; negative n needs a != 0.
AlgebraicNumber alg_pow(const AlgebraicNumber& a, long n);
/// num(a) / den(a); throws DivisionByZero if den(a) = 0.
AlgebraicNumber alg_eval(const UniPoly& num, const UniPoly& den, const AlgebraicNumber& a);
AlgebraicNumber alg_eval(const UniPoly& f, const AlgebraicNumber& a);
/// Re(a) and Im(a) as real algebraic numbers.
AlgebraicNumber alg_re(const AlgebraicNumber& a);
AlgebraicNumber alg_im(const AlgebraicNumber& a);
/// Nonnegative square root of a real a >= 0.
AlgebraicNumber alg_sqrt(const AlgebraicNumber& a);
/// |a| as a real algebraic number.
AlgebraicNumber alg_abs(const AlgebraicNumber& a);

bool alg_is_zero(const AlgebraicNumber& a);
bool alg_equals(const AlgebraicNumber& a, const AlgebraicNumber& b);
/// Sign of a real number; throws InvalidInput for non-real input.
int alg_sign_real(const AlgebraicNumber& a);
/// -1, 0, +1 as |a| <, =, > |b|.
int compare_modulus(const AlgebraicNumber& a, const AlgebraicNumber& b);
/// Order N of a as a root of unity, if it is one. Throws InvalidInput for 0.
std::optional<unsigned> is_root_of_unity(const AlgebraicNumber& a);
/// Enclosure of arg(a) / (2 pi) in a branch continuous around a, within [-1/2, 1].
Interval arg_turns(const AlgebraicNumber& a, long bits);

/// All roots of a nonzero polynomial, each once, with minimal defining polynomials
/// when factoring succeeds: real roots ascending, then non-real by (Re, Im).
std::vector<AlgebraicNumber> roots_of(const UniPoly& p);

}  // namespace upos
