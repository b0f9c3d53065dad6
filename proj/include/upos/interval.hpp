#pragma once

#include <mpfr.h>

#include <string>

#include "upos/rational.hpp"

namespace upos {

/// Owning wrapper around an MPFR float.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64);
  BigFloat(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  /// Exact value; throws InvalidInput for NaN or infinities.
  Rational to_rational() const;
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }

  /// Round-to-nearest arithmetic for approximate computations.
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a);
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_); }

 private:
  mpfr_t value_;
};

/// Closed interval [lo, hi] with MPFR endpoints; every operation rounds
/// outward so the true result is always enclosed.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 64);
  Interval(const Rational& q, mpfr_prec_t prec);
  Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec);
  Interval(BigFloat lo, BigFloat hi);

  static Interval pi(mpfr_prec_t prec);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  mpfr_prec_t precision() const { return lo_.precision(); }

  Rational lower() const { return lo_.to_rational(); }
  Rational upper() const { return hi_.to_rational(); }
  Rational width() const { return upper() - lower(); }
  double mid_double() const;

  bool contains_zero() const;
  bool contains(const Rational& q) const;
  bool positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool negative() const { return mpfr_sgn(hi_.get()) < 0; }
  bool nonnegative() const { return mpfr_sgn(lo_.get()) >= 0; }
  /// log2 of the width, or a very negative number for a point interval.
  long width_exponent() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);

  friend Interval sqr(const Interval& a);
  friend Interval sqrt(const Interval& a);
  friend Interval abs(const Interval& a);
  friend Interval cos(const Interval& a);
  friend Interval sin(const Interval& a);
  /// Argument of the box x + iy in a branch continuous over the box; the
  /// returned range lies in [-pi, 2 pi]. Returns [-pi, pi] if the box holds 0.
  friend Interval atan2(const Interval& y, const Interval& x);
  friend Interval hull(const Interval& a, const Interval& b);
  friend bool overlaps(const Interval& a, const Interval& b);

  std::string str() const;

 private:
  BigFloat lo_;
  BigFloat hi_;
};

struct ComplexInterval {
  Interval re;
  Interval im;

  explicit ComplexInterval(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
  ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  Interval abs2() const { return sqr(re) + sqr(im); }
};

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const Interval& a, const ComplexInterval& b);
ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a);
ComplexInterval conj(const ComplexInterval& a);
/// e^{i t} for a real interval t.
ComplexInterval expi(const Interval& t);

}  // namespace upos
