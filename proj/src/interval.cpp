#include "upos/interval.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "upos/errors.hpp"

namespace upos {

// ---- BigFloat -------------------------------------------------------------

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  mpfr_init2(value_, prec);
  mpfr_set_q(value_, q.get_mpq_t(), rnd);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

Rational BigFloat::to_rational() const {
  if (mpfr_nan_p(value_) || mpfr_inf_p(value_)) {
    throw InvalidInput("non-finite floating value");
  }
  if (mpfr_zero_p(value_)) return Rational(0);
  Integer m;
  const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), value_);
  Rational r(m);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

namespace {

mpfr_prec_t joint(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}

// ---- Interval -------------------------------------------------------------

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

Interval::Interval(const Rational& q, mpfr_prec_t prec)
    : lo_(q, prec, MPFR_RNDD), hi_(q, prec, MPFR_RNDU) {}

Interval::Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec)
    : lo_(lo, prec, MPFR_RNDD), hi_(hi, prec, MPFR_RNDU) {
  if (lo > hi) throw InvalidInput("interval with lo > hi");
}

Interval::Interval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

Interval Interval::pi(mpfr_prec_t prec) {
  BigFloat lo(prec);
  BigFloat hi(prec);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

double Interval::mid_double() const {
  BigFloat m(precision() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m.to_double();
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
}

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

long Interval::width_exponent() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  if (w.is_zero()) return std::numeric_limits<long>::min() / 4;
  return static_cast<long>(mpfr_get_exp(w.get()));
}

std::string Interval::str() const {
  std::ostringstream os;
  os << "[" << lo_.to_double() << ", " << hi_.to_double() << "]";
  return os.str();
}

namespace {

mpfr_prec_t joint(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

void min_into(BigFloat& acc, const BigFloat& v) {
  if (mpfr_less_p(v.get(), acc.get())) mpfr_set(acc.get(), v.get(), MPFR_RNDD);
}

void max_into(BigFloat& acc, const BigFloat& v) {
  if (mpfr_greater_p(v.get(), acc.get())) mpfr_set(acc.get(), v.get(), MPFR_RNDU);
}

// True when some integer may lie in [lo(t), hi(u)] for enclosures t, u.
bool may_contain_integer(const Interval& t, const Interval& u) {
  BigFloat a(t.precision());
  BigFloat b(u.precision());
  mpfr_ceil(a.get(), t.lo().get());
  mpfr_floor(b.get(), u.hi().get());
  return mpfr_lessequal_p(a.get(), b.get());
}

}  // namespace

Interval operator+(const Interval& a, const Interval& b) {
  const mpfr_prec_t p = joint(a, b);
  BigFloat lo(p);
  BigFloat hi(p);
  mpfr_add(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator-(const Interval& a, const Interval& b) {
  const mpfr_prec_t p = joint(a, b);
  BigFloat lo(p);
  BigFloat hi(p);
  mpfr_sub(lo.get(), a.lo().get(), b.hi().get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.hi().get(), b.lo().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator-(const Interval& a) {
  BigFloat lo(a.precision());
  BigFloat hi(a.precision());
  mpfr_neg(lo.get(), a.hi().get(), MPFR_RNDD);
  mpfr_neg(hi.get(), a.lo().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t p = joint(a, b);
  const BigFloat* xs[2] = {&a.lo(), &a.hi()};
  const BigFloat* ys[2] = {&b.lo(), &b.hi()};
  BigFloat lo(p);
  BigFloat hi(p);
  BigFloat t(p);
  bool first = true;
  for (const BigFloat* x : xs) {
    for (const BigFloat* y : ys) {
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first) {
        mpfr_set(lo.get(), t.get(), MPFR_RNDD);
      } else {
        min_into(lo, t);
      }
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first) {
        mpfr_set(hi.get(), t.get(), MPFR_RNDU);
      } else {
        max_into(hi, t);
      }
      first = false;
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DivisionByZero("interval division by an interval containing 0");
  const mpfr_prec_t p = b.precision();
  BigFloat lo(p);
  BigFloat hi(p);
  mpfr_ui_div(lo.get(), 1, b.hi().get(), MPFR_RNDD);
  mpfr_ui_div(hi.get(), 1, b.lo().get(), MPFR_RNDU);
  return a * Interval(std::move(lo), std::move(hi));
}

Interval sqr(const Interval& a) {
  const mpfr_prec_t p = a.precision();
  BigFloat lo(p);
  BigFloat hi(p);
  BigFloat t(p);
  mpfr_sqr(hi.get(), a.lo().get(), MPFR_RNDU);
  mpfr_sqr(t.get(), a.hi().get(), MPFR_RNDU);
  max_into(hi, t);
  if (a.contains_zero()) {
    mpfr_set_zero(lo.get(), 1);
  } else {
    mpfr_sqr(lo.get(), a.lo().get(), MPFR_RNDD);
    mpfr_sqr(t.get(), a.hi().get(), MPFR_RNDD);
    min_into(lo, t);
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval sqrt(const Interval& a) {
  if (a.negative()) throw InvalidInput("sqrt of a negative interval");
  const mpfr_prec_t p = a.precision();
  BigFloat lo(p);
  BigFloat hi(p);
  if (mpfr_sgn(a.lo().get()) <= 0) {
    mpfr_set_zero(lo.get(), 1);
  } else {
    mpfr_sqrt(lo.get(), a.lo().get(), MPFR_RNDD);
  }
  mpfr_sqrt(hi.get(), a.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval abs(const Interval& a) {
  if (a.nonnegative()) return a;
  if (a.negative()) return -a;
  const mpfr_prec_t p = a.precision();
  BigFloat lo(p);
  BigFloat hi(p);
  mpfr_neg(hi.get(), a.lo().get(), MPFR_RNDU);
  max_into(hi, a.hi());
  return Interval(std::move(lo), std::move(hi));
}

Interval cos(const Interval& a) {
  const mpfr_prec_t p = a.precision();
  const Interval two_pi = Interval(Rational(2), p) * Interval::pi(p);
  BigFloat lo(p);
  BigFloat hi(p);
  BigFloat t(p);
  mpfr_set_si(lo.get(), -1, MPFR_RNDD);
  mpfr_set_si(hi.get(), 1, MPFR_RNDU);
  BigFloat w(p);
  mpfr_sub(w.get(), a.hi().get(), a.lo().get(), MPFR_RNDU);
  if (mpfr_cmp(w.get(), two_pi.lo().get()) >= 0) return Interval(std::move(lo), std::move(hi));

  mpfr_cos(lo.get(), a.lo().get(), MPFR_RNDD);
  mpfr_cos(t.get(), a.hi().get(), MPFR_RNDD);
  min_into(lo, t);
  mpfr_cos(hi.get(), a.lo().get(), MPFR_RNDU);
  mpfr_cos(t.get(), a.hi().get(), MPFR_RNDU);
  max_into(hi, t);

  const Interval left(a.lo(), a.lo());
  const Interval right(a.hi(), a.hi());
  // maxima at 2 pi k
  if (may_contain_integer(left / two_pi, right / two_pi)) mpfr_set_si(hi.get(), 1, MPFR_RNDU);
  // minima at pi + 2 pi k
  const Interval pi = Interval::pi(p);
  if (may_contain_integer((left - pi) / two_pi, (right - pi) / two_pi)) {
    mpfr_set_si(lo.get(), -1, MPFR_RNDD);
  }
  if (mpfr_cmp_si(lo.get(), -1) < 0) mpfr_set_si(lo.get(), -1, MPFR_RNDD);
  if (mpfr_cmp_si(hi.get(), 1) > 0) mpfr_set_si(hi.get(), 1, MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval sin(const Interval& a) {
  const mpfr_prec_t p = a.precision();
  const Interval half_pi = Interval::pi(p) * Interval(Rational(1, 2), p);
  return cos(a - half_pi);
}

namespace {

Interval atan2_corners(const Interval& y, const Interval& x) {
  const mpfr_prec_t p = std::max(x.precision(), y.precision());
  const BigFloat* xs[2] = {&x.lo(), &x.hi()};
  const BigFloat* ys[2] = {&y.lo(), &y.hi()};
  BigFloat lo(p);
  BigFloat hi(p);
  BigFloat t(p);
  bool first = true;
  for (const BigFloat* xv : xs) {
    for (const BigFloat* yv : ys) {
      mpfr_atan2(t.get(), yv->get(), xv->get(), MPFR_RNDD);
      if (first) {
        mpfr_set(lo.get(), t.get(), MPFR_RNDD);
      } else {
        min_into(lo, t);
      }
      mpfr_atan2(t.get(), yv->get(), xv->get(), MPFR_RNDU);
      if (first) {
        mpfr_set(hi.get(), t.get(), MPFR_RNDU);
      } else {
        max_into(hi, t);
      }
      first = false;
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

}  // namespace

Interval atan2(const Interval& y, const Interval& x) {
  const mpfr_prec_t p = std::max(x.precision(), y.precision());
  const Interval pi = Interval::pi(p);
  if (x.contains_zero() && y.contains_zero()) return hull(-pi, pi);
  const bool straddles_cut = mpfr_sgn(x.lo().get()) < 0 && y.contains_zero();
  if (!straddles_cut) return atan2_corners(y, x);
  // The box lies in the left half plane across the negative real axis.
  return atan2_corners(-y, -x) + pi;
}

Interval hull(const Interval& a, const Interval& b) {
  const mpfr_prec_t p = joint(a, b);
  BigFloat lo(p);
  BigFloat hi(p);
  mpfr_min(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_max(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

bool overlaps(const Interval& a, const Interval& b) {
  return mpfr_lessequal_p(a.lo().get(), b.hi().get()) && mpfr_lessequal_p(b.lo().get(), a.hi().get());
}

// ---- ComplexInterval -------------------------------------------------------

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re + b.re, a.im + b.im};
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re - b.re, a.im - b.im};
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexInterval operator*(const Interval& a, const ComplexInterval& b) { return {a * b.re, a * b.im}; }

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
  const Interval d = b.abs2();
  const ComplexInterval n = a * conj(b);
  return {n.re / d, n.im / d};
}

ComplexInterval operator-(const ComplexInterval& a) { return {-a.re, -a.im}; }

ComplexInterval conj(const ComplexInterval& a) { return {a.re, -a.im}; }

ComplexInterval expi(const Interval& t) { return {cos(t), sin(t)}; }

}  // namespace upos
