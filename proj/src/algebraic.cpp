#include "upos/algebraic.hpp"

#include <algorithm>
#include <cstdio>
#include <mutex>

#include "upos/errors.hpp"
#include "upos/factor.hpp"

namespace upos {

struct AlgebraicNumber::Node {
  UniPoly poly;  // primitive, squarefree
  bool minimal = true;
  bool real = true;
  std::optional<Rational> value;
  mutable std::mutex mu;
  mutable Box box;
};

namespace {

constexpr long kMaxBits = 1L << 16;

Rational two_pow(long e) {
  if (e >= 0) return Rational(Integer(1) << static_cast<unsigned long>(e));
  return Rational(Integer(1), Integer(1) << static_cast<unsigned long>(-e));
}

long magnitude_bits(const Box& b) {
  Rational m = std::max({abs(b.re_lo), abs(b.re_hi), abs(b.im_lo), abs(b.im_hi)});
  m += 1;
  return std::max(0L, ilog2(m) + 1);
}

mpfr_prec_t work_prec(long bits, const Box& b) { return static_cast<mpfr_prec_t>(bits + 64 + magnitude_bits(b)); }

Rational size_upper(const ComplexInterval& e) {
  return std::max(e.re.upper() - e.re.lower(), e.im.upper() - e.im.lower());
}

// Resultants of this degree are still formed; their squarefree part must then
// fit under kMaxAlgebraicDegree.
constexpr long kMaxResultantDegree = 1024;

void check_degree(long d, long cap = kMaxAlgebraicDegree) {
  if (d > cap) throw ResourceLimit("algebraic degree " + std::to_string(d) + " exceeds the cap");
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(std::shared_ptr<Node> node) : node_(std::move(node)) {}

AlgebraicNumber::AlgebraicNumber() : AlgebraicNumber(Rational(0)) {}

AlgebraicNumber::AlgebraicNumber(long n) : AlgebraicNumber(Rational(n)) {}

AlgebraicNumber::AlgebraicNumber(const Rational& q) : node_(std::make_shared<Node>()) {
  node_->poly = UniPoly{-q, Rational(1)}.primitive();
  node_->value = q;
  node_->box = Box::point(q);
}

AlgebraicNumber AlgebraicNumber::from_isolated(const UniPoly& p, const Box& box, bool minimal) {
  if (p.degree() < 1) throw InvalidInput("defining polynomial must be non-constant");
  if (p.degree() == 1) return AlgebraicNumber(-p[0] / p[1]);
  if (box.re_lo == box.re_hi && box.im_lo == 0 && box.im_hi == 0) {
    // a rational root of a polynomial flagged as minimal cannot happen; keep it exact
    return AlgebraicNumber(box.re_lo);
  }
  auto node = std::make_shared<Node>();
  node->poly = p.primitive();
  node->minimal = minimal;
  node->real = box.is_real();
  node->box = box;
  return AlgebraicNumber(std::move(node));
}

AlgebraicNumber AlgebraicNumber::from_enclosure(const UniPoly& p,
                                                const std::function<ComplexInterval(long)>& enclose) {
  if (p.is_zero()) throw InvalidInput("from_enclosure: zero polynomial");
  const UniPoly sf = squarefree_part(p).primitive();
  check_degree(sf.degree());
  if (sf.degree() < 1) throw InvalidInput("from_enclosure: constant polynomial");
  std::vector<UniPoly> factors;
  std::vector<bool> minimal;
  if (sf.degree() == 1) {
    factors.push_back(sf);
    minimal.push_back(true);
  } else {
    const Factorization fz = factor_squarefree(sf);
    factors = fz.factors;
    for (std::size_t i = 0; i < factors.size(); ++i) minimal.push_back(fz.complete || i + 1 < factors.size());
  }
  std::vector<std::size_t> alive(factors.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  for (long bits = 24; bits <= kMaxBits; bits *= 2) {
    ComplexInterval e;
    try {
      e = enclose(bits);
    } catch (const DivisionByZero&) {
      continue;
    }
    std::vector<std::size_t> next;
    for (std::size_t i : alive) {
      if (factors[i].eval(e).contains_zero()) next.push_back(i);
    }
    if (next.empty()) throw Error("from_enclosure: enclosure excludes every root");
    alive = std::move(next);
    if (alive.size() != 1) continue;
    const UniPoly& g = factors[alive[0]];
    if (g.degree() == 1) return AlgebraicNumber(-g[0] / g[1]);
    const Rational gap = mignotte_gap(g);
    if (size_upper(e) * 4 >= gap) continue;
    auto node = std::make_shared<Node>();
    node->poly = g;
    node->minimal = minimal[alive[0]];
    if (e.im.contains_zero()) {
      // The box and its mirror image are closer than the root separation, so
      // the root equals its conjugate.
      const Rational lo = e.re.lower();
      const Rational hi = e.re.upper();
      const int slo = sign(g.eval(lo));
      const int shi = sign(g.eval(hi));
      if (slo == 0) return AlgebraicNumber(lo);
      if (shi == 0) return AlgebraicNumber(hi);
      if (slo == shi) throw Error("from_enclosure: real enclosure without sign change");
      node->real = true;
      node->box = Box::real(lo, hi);
    } else {
      node->real = false;
      node->box = {e.re.lower(), e.re.upper(), e.im.lower(), e.im.upper()};
    }
    return AlgebraicNumber(std::move(node));
  }
  throw ResourceLimit("from_enclosure: precision limit reached");
}

AlgebraicNumber AlgebraicNumber::gaussian(const Rational& re, const Rational& im) {
  if (im == 0) return AlgebraicNumber(re);
  const UniPoly p{re * re + im * im, -2 * re, Rational(1)};
  return from_enclosure(p, [&](long bits) {
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 64);
    return ComplexInterval(Interval(re, prec), Interval(im, prec));
  });
}

AlgebraicNumber AlgebraicNumber::unit_root(const Rational& t) {
  Rational f = t - Rational(floor_div(t));
  const unsigned long n = f.get_den().get_ui();
  if (n == 1) return AlgebraicNumber(1);
  if (n == 2) return AlgebraicNumber(-1);
  if (n == 4) return gaussian(Rational(0), f == Rational(1, 4) ? Rational(1) : Rational(-1));
  return from_enclosure(cyclotomic(static_cast<unsigned>(n)), [f](long bits) {
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 64);
    const Interval turn = Interval(Rational(2), prec) * Interval::pi(prec) * Interval(f, prec);
    return expi(turn);
  });
}

const UniPoly& AlgebraicNumber::defining() const { return node_->poly; }
bool AlgebraicNumber::minimal() const { return node_->minimal; }
bool AlgebraicNumber::is_real() const { return node_->real; }
bool AlgebraicNumber::is_rational() const { return node_->value.has_value(); }

const Rational& AlgebraicNumber::rational() const {
  if (!node_->value) throw InvalidInput("algebraic number is not rational");
  return *node_->value;
}

Box AlgebraicNumber::region() const {
  std::lock_guard<std::mutex> lock(node_->mu);
  return node_->box;
}

void AlgebraicNumber::refine(const Rational& target) const {
  if (node_->value) return;
  Box current = region();
  if (current.size() <= target) return;
  Box better = refine_root(node_->poly, current, target);
  std::lock_guard<std::mutex> lock(node_->mu);
  if (better.size() < node_->box.size()) node_->box = better;
}

ComplexInterval AlgebraicNumber::enclose(long bits) const {
  if (node_->value) {
    const mpfr_prec_t prec = work_prec(bits, node_->box);
    return ComplexInterval(Interval(*node_->value, prec), Interval(Rational(0), prec));
  }
  refine(two_pow(-bits));
  const Box b = region();
  return b.enclose(work_prec(bits, b));
}

Interval AlgebraicNumber::enclose_real(long bits) const {
  if (!node_->real) throw InvalidInput("enclose_real of a non-real number");
  return enclose(bits).re;
}

double AlgebraicNumber::approx_re() const { return enclose(60).re.mid_double(); }
double AlgebraicNumber::approx_im() const { return node_->real ? 0.0 : enclose(60).im.mid_double(); }

std::string AlgebraicNumber::str() const {
  if (node_->value) return to_string(*node_->value);
  char buf[96];
  if (node_->real) {
    std::snprintf(buf, sizeof buf, "%.12g", approx_re());
  } else {
    const double im = approx_im();
    std::snprintf(buf, sizeof buf, "%.12g%s%.12gi", approx_re(), im < 0 ? "-" : "+", im < 0 ? -im : im);
  }
  return std::string(buf) + " (root of " + node_->poly.str() + ")";
}

// ---- arithmetic ---------------------------------------------------------------

namespace {

// Root of an exactly transformed polynomial whose box is the transformed old box;
// only the box size needs re-checking against the new separation bound.
AlgebraicNumber transformed(const UniPoly& p, const Box& box, bool real, bool minimal) {
  const UniPoly g = p.primitive();
  if (g.degree() == 1) return AlgebraicNumber(-g[0] / g[1]);
  Box b = box;
  const Rational target = mignotte_gap(g) / 4;
  if (b.size() >= target) b = refine_root(g, b, target / 2);
  if (real) b.im_lo = b.im_hi = 0;
  return AlgebraicNumber::from_isolated(g, b, minimal);
}

AlgebraicNumber add_rational(const AlgebraicNumber& a, const Rational& q) {
  if (q == 0) return a;
  const Box b = a.region();
  return transformed(a.defining().shift(-q), {b.re_lo + q, b.re_hi + q, b.im_lo, b.im_hi}, a.is_real(),
                     a.minimal());
}

AlgebraicNumber mul_rational(const AlgebraicNumber& a, const Rational& q) {
  if (q == 0) return AlgebraicNumber(0);
  if (q == 1) return a;
  const Box b = a.region();
  Box s{b.re_lo * q, b.re_hi * q, b.im_lo * q, b.im_hi * q};
  if (q < 0) {
    std::swap(s.re_lo, s.re_hi);
    std::swap(s.im_lo, s.im_hi);
  }
  return transformed(a.defining().scale(1 / q), s, a.is_real(), a.minimal());
}

BiPoly constant_in_x(const UniPoly& p) {
  BiPoly r;
  for (const Rational& c : p.coeffs()) r.terms.push_back(UniPoly::constant(c));
  return r;
}

// Whether a is a root of h, where h divides a's defining polynomial.
bool root_of(const AlgebraicNumber& a, const UniPoly& h) {
  if (h.degree() < 1) return false;
  if (a.is_rational()) return h.eval(a.rational()) == 0;
  const UniPoly& p = a.defining();
  if (h.degree() == p.degree()) return true;
  const UniPoly co = p / h;
  for (long bits = 32; bits <= kMaxBits; bits *= 2) {
    const ComplexInterval e = a.enclose(bits);
    if (!h.eval(e).contains_zero()) return false;
    if (!co.eval(e).contains_zero()) return true;
  }
  throw ResourceLimit("root_of: precision limit reached");
}

UniPoly x_power_mod(long n, const UniPoly& p) {
  UniPoly result = UniPoly::constant(Rational(1));
  UniPoly base = UniPoly::x() % p;
  while (n > 0) {
    if (n & 1) result = (result * base) % p;
    n >>= 1;
    if (n > 0) base = (base * base) % p;
  }
  return result;
}


// Minimal polynomial of x (+ or *) y acting on Q[x]/(p) (x) Q[y]/(q), found by a
// Krylov iteration from 1. It is the squarefree part of the resultant
// Res_y(p(y), q(x - y)) (sum) or Res_y(p(y), y^n q(x / y)) (product), obtained
// without forming that resultant.
UniPoly composed_annihilator(const UniPoly& p, const UniPoly& q, bool product) {
  const std::size_t m = static_cast<std::size_t>(p.degree());
  const std::size_t n = static_cast<std::size_t>(q.degree());
  const std::size_t dim = m * n;
  const UniPoly pm = p.monic();
  const UniPoly qm = q.monic();
  using Vec = std::vector<Rational>;  // entry i * n + j is the coefficient of x^i y^j
  auto times_x = [&](const Vec& v) {
    Vec r(dim);
    for (std::size_t j = 0; j < n; ++j) {
      const Rational top = v[(m - 1) * n + j];
      for (std::size_t i = m - 1; i > 0; --i) r[i * n + j] = v[(i - 1) * n + j];
      r[j] = 0;
      if (top != 0) {
        for (std::size_t i = 0; i < m; ++i) r[i * n + j] -= top * pm[i];
      }
    }
    return r;
  };
  auto times_y = [&](const Vec& v) {
    Vec r(dim);
    for (std::size_t i = 0; i < m; ++i) {
      const Rational top = v[i * n + n - 1];
      for (std::size_t j = n - 1; j > 0; --j) r[i * n + j] = v[i * n + j - 1];
      r[i * n] = 0;
      if (top != 0) {
        for (std::size_t j = 0; j < n; ++j) r[i * n + j] -= top * qm[j];
      }
    }
    return r;
  };
  auto apply = [&](const Vec& v) {
    if (product) return times_x(times_y(v));
    Vec a = times_x(v);
    const Vec b = times_y(v);
    for (std::size_t k = 0; k < dim; ++k) a[k] += b[k];
    return a;
  };
  struct Row {
    std::size_t pivot;
    Vec v;
    UniPoly comb;  // v = comb(gamma) * 1
  };
  std::vector<Row> rows;
  Vec power(dim);
  power[0] = 1;
  for (std::size_t k = 0; k <= dim; ++k) {
    Vec r = power;
    UniPoly comb = UniPoly::monomial(Rational(1), k);
    for (const Row& row : rows) {
      const Rational f = r[row.pivot];
      if (f == 0) continue;
      for (std::size_t t = 0; t < dim; ++t) {
        if (row.v[t] != 0) r[t] -= f * row.v[t];
      }
      comb -= row.comb * f;
    }
    std::size_t piv = 0;
    while (piv < dim && r[piv] == 0) ++piv;
    if (piv == dim) return comb.primitive();
    const Rational inv = 1 / r[piv];
    for (Rational& c : r) c *= inv;
    comb *= inv;
    rows.push_back({piv, std::move(r), std::move(comb)});
    power = apply(power);
  }
  throw Error("composed_annihilator: no dependency found");
}

}  // namespace

AlgebraicNumber alg_add(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational()) return add_rational(b, a.rational());
  if (b.is_rational()) return add_rational(a, b.rational());
  check_degree(static_cast<long>(a.degree()) * b.degree(), kMaxResultantDegree);
  const UniPoly r = composed_annihilator(a.defining(), b.defining(), false);
  return AlgebraicNumber::from_enclosure(r, [a, b](long bits) { return a.enclose(bits + 1) + b.enclose(bits + 1); });
}

AlgebraicNumber alg_mul(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational()) return mul_rational(b, a.rational());
  if (b.is_rational()) return mul_rational(a, b.rational());
  check_degree(static_cast<long>(a.degree()) * b.degree(), kMaxResultantDegree);
  const UniPoly r = composed_annihilator(a.defining(), b.defining(), true);
  return AlgebraicNumber::from_enclosure(r, [a, b](long bits) {
    const ComplexInterval ea = a.enclose(bits + 2 + magnitude_bits(b.region()));
    const ComplexInterval eb = b.enclose(bits + 2 + magnitude_bits(a.region()));
    return ea * eb;
  });
}

AlgebraicNumber alg_neg(const AlgebraicNumber& a) {
  if (a.is_rational()) return AlgebraicNumber(-a.rational());
  const Box b = a.region();
  return AlgebraicNumber::from_isolated(a.defining().reflect(), {-b.re_hi, -b.re_lo, -b.im_hi, -b.im_lo},
                                        a.minimal());
}

AlgebraicNumber alg_conj(const AlgebraicNumber& a) {
  if (a.is_real()) return a;
  return AlgebraicNumber::from_isolated(a.defining(), a.region().conj(), a.minimal());
}

AlgebraicNumber alg_inv(const AlgebraicNumber& a) {
  if (alg_is_zero(a)) throw DivisionByZero("inverse of zero");
  if (a.is_rational()) return AlgebraicNumber(1 / a.rational());
  return AlgebraicNumber::from_enclosure(a.defining().reverse(), [a](long bits) {
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 64);
    const ComplexInterval e = a.enclose(bits + 8);
    return ComplexInterval(Interval(Rational(1), prec), Interval(Rational(0), prec)) / e;
  });
}

AlgebraicNumber alg_eval(const UniPoly& num, const UniPoly& den, const AlgebraicNumber& a) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (a.is_rational()) {
    const Rational d = den.eval(a.rational());
    if (d == 0) throw DivisionByZero("denominator vanishes");
    return AlgebraicNumber(num.eval(a.rational()) / d);
  }
  const UniPoly& p = a.defining();
  const UniPoly A = num % p;
  const UniPoly D = den % p;
  if (D.is_zero() || root_of(a, gcd(D, p).primitive())) throw DivisionByZero("denominator vanishes");
  if (A.is_zero()) return AlgebraicNumber(0);
  if (A.degree() <= 0 && D.degree() <= 0) return AlgebraicNumber(A[0] / D[0]);
  // Res_y(p(y), x D(y) - A(y))
  BiPoly lin;
  const std::size_t n = static_cast<std::size_t>(std::max(A.degree(), D.degree())) + 1;
  for (std::size_t j = 0; j < n; ++j) lin.terms.push_back(UniPoly{-A[j], D[j]});
  const UniPoly r = resultant_bivariate(constant_in_x(p), lin);
  return AlgebraicNumber::from_enclosure(r, [a, A, D](long bits) {
    const long extra = 8 + 2 * static_cast<long>(std::max(A.degree(), D.degree())) * (1 + magnitude_bits(a.region()));
    const ComplexInterval e = a.enclose(bits + extra);
    return A.eval(e) / D.eval(e);
  });
}

AlgebraicNumber alg_eval(const UniPoly& f, const AlgebraicNumber& a) {
  return alg_eval(f, UniPoly::constant(Rational(1)), a);
}

AlgebraicNumber alg_pow(const AlgebraicNumber& a, long n) {
  if (n < 0) return alg_inv(alg_pow(a, -n));
  if (n == 0) return AlgebraicNumber(1);
  if (n == 1) return a;
  if (a.is_rational()) return AlgebraicNumber(pow(a.rational(), static_cast<unsigned long>(n)));
  return alg_eval(x_power_mod(n, a.defining()), a);
}

AlgebraicNumber alg_re(const AlgebraicNumber& a) {
  if (a.is_real()) return a;
  return mul_rational(alg_add(a, alg_conj(a)), Rational(1, 2));
}

AlgebraicNumber alg_im(const AlgebraicNumber& a) {
  if (a.is_real()) return AlgebraicNumber(0);
  // (a - conj a) / (2i) = (conj a - a) i / 2
  const AlgebraicNumber d = alg_add(alg_conj(a), alg_neg(a));
  return alg_mul(d, AlgebraicNumber::gaussian(Rational(0), Rational(1, 2)));
}

AlgebraicNumber alg_sqrt(const AlgebraicNumber& a) {
  const int s = alg_sign_real(a);
  if (s < 0) throw InvalidInput("square root of a negative number");
  if (s == 0) return AlgebraicNumber(0);
  if (a.is_rational()) {
    const Rational& q = a.rational();
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), q.get_den().get_mpz_t());
    if (rn * rn == q.get_num() && rd * rd == q.get_den()) return AlgebraicNumber(ratio(rn, rd));
  }
  const UniPoly& p = a.defining();
  std::vector<Rational> c(2 * p.coeffs().size() - 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[2 * i] = p.coeffs()[i];
  return AlgebraicNumber::from_enclosure(UniPoly(std::move(c)), [a](long bits) {
    const Interval e = a.enclose(2 * bits + 8).re;
    const Interval r = sqrt(e);
    return ComplexInterval(r, Interval(Rational(0), r.precision()));
  });
}

AlgebraicNumber alg_abs(const AlgebraicNumber& a) {
  if (a.is_real()) return alg_sign_real(a) < 0 ? alg_neg(a) : a;
  return alg_sqrt(alg_mul(a, alg_conj(a)));
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) { return alg_add(a, b); }
AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) { return alg_add(a, alg_neg(b)); }
AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) { return alg_mul(a, b); }
AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) { return alg_mul(a, alg_inv(b)); }
AlgebraicNumber operator-(const AlgebraicNumber& a) { return alg_neg(a); }

// ---- predicates ---------------------------------------------------------------

bool alg_is_zero(const AlgebraicNumber& a) {
  if (a.is_rational()) return a.rational() == 0;
  if (a.defining()[0] != 0) return false;
  return root_of(a, UniPoly::x());
}

bool alg_equals(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational()) return a.rational() == b.rational();
  if (a.is_real() != b.is_real()) return false;
  if (a.is_rational() || b.is_rational()) {
    const AlgebraicNumber& x = a.is_rational() ? b : a;
    const Rational& q = a.is_rational() ? a.rational() : b.rational();
    if (x.defining().eval(q) != 0) return false;
    return root_of(x, UniPoly{-q, Rational(1)});
  }
  const ComplexInterval ea = a.enclose(64);
  const ComplexInterval eb = b.enclose(64);
  if (!overlaps(ea.re, eb.re) || !overlaps(ea.im, eb.im)) return false;
  const UniPoly g = gcd(a.defining(), b.defining()).primitive();
  if (g.degree() < 1) return false;
  if (!root_of(a, g) || !root_of(b, g)) return false;
  const Rational target = mignotte_gap(g) / 4;
  a.refine(target);
  b.refine(target);
  return a.region().overlaps(b.region());
}

int alg_sign_real(const AlgebraicNumber& a) {
  if (!a.is_real()) throw InvalidInput("sign of a non-real number");
  if (a.is_rational()) return sign(a.rational());
  if (alg_is_zero(a)) return 0;
  for (long bits = 32; bits <= kMaxBits; bits *= 2) {
    const Interval e = a.enclose_real(bits);
    if (e.positive()) return 1;
    if (e.negative()) return -1;
  }
  throw ResourceLimit("alg_sign_real: precision limit reached");
}

namespace {

AlgebraicNumber modulus_squared(const AlgebraicNumber& a) {
  if (a.is_real()) return alg_pow(a, 2);
  return alg_mul(a, alg_conj(a));
}

int compare_enclosures(const Interval& x, const Interval& y) {
  if (mpfr_less_p(x.hi().get(), y.lo().get())) return -1;
  if (mpfr_greater_p(x.lo().get(), y.hi().get())) return 1;
  return 0;
}

}  // namespace

int compare_modulus(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational()) {
    const Rational x = abs(a.rational());
    const Rational y = abs(b.rational());
    return x < y ? -1 : (x > y ? 1 : 0);
  }
  {
    const int c = compare_enclosures(a.enclose(64).abs2(), b.enclose(64).abs2());
    if (c != 0) return c;
  }
  const AlgebraicNumber ma = modulus_squared(a);
  const AlgebraicNumber mb = modulus_squared(b);
  if (alg_equals(ma, mb)) return 0;
  for (long bits = 64; bits <= kMaxBits; bits *= 2) {
    const int c = compare_enclosures(ma.enclose_real(bits), mb.enclose_real(bits));
    if (c != 0) return c;
  }
  throw ResourceLimit("compare_modulus: precision limit reached");
}

Interval arg_turns(const AlgebraicNumber& a, long bits) {
  const ComplexInterval e = a.enclose(bits + 8);
  const mpfr_prec_t prec = std::max(e.re.precision(), e.im.precision());
  const Interval two_pi = Interval(Rational(2), prec) * Interval::pi(prec);
  return atan2(e.im, e.re) / two_pi;
}

std::optional<unsigned> is_root_of_unity(const AlgebraicNumber& a) {
  if (alg_is_zero(a)) throw InvalidInput("is_root_of_unity of zero");
  if (a.is_rational()) {
    if (a.rational() == 1) return 1U;
    if (a.rational() == -1) return 2U;
    return std::nullopt;
  }
  if (a.is_real()) return std::nullopt;
  if (!a.enclose(64).abs2().contains(Rational(1))) return std::nullopt;
  const unsigned long d = static_cast<unsigned long>(a.degree());
  const Interval theta = arg_turns(a, 64);
  const mpfr_prec_t prec = theta.precision();
  for (unsigned long n = 3; n <= 2 * d * d; ++n) {
    const unsigned long phi = totient(n);
    if (a.minimal() ? phi != d : phi > d) continue;
    // n theta must be (close to) an integer
    const Interval t = theta * Interval(Rational(static_cast<long>(n)), prec);
    BigFloat c(prec), f(prec);
    mpfr_ceil(c.get(), t.lo().get());
    mpfr_floor(f.get(), t.hi().get());
    if (mpfr_greater_p(c.get(), f.get())) continue;
    const UniPoly g = gcd(a.defining(), cyclotomic(static_cast<unsigned>(n))).primitive();
    if (g.degree() >= 1 && root_of(a, g)) return static_cast<unsigned>(n);
  }
  return std::nullopt;
}

std::vector<AlgebraicNumber> roots_of(const UniPoly& p) {
  if (p.is_zero()) throw InvalidInput("roots of the zero polynomial");
  std::vector<AlgebraicNumber> out;
  if (p.degree() < 1) return out;
  const UniPoly sf = squarefree_part(p).primitive();
  const Factorization fz = factor_squarefree(sf);
  for (std::size_t i = 0; i < fz.factors.size(); ++i) {
    const UniPoly& g = fz.factors[i];
    const bool minimal = fz.complete || i + 1 < fz.factors.size();
    for (const Box& b : isolate_roots(g)) out.push_back(AlgebraicNumber::from_isolated(g, b, minimal));
  }
  struct Keyed {
    bool real;
    Rational re, im;
    std::string poly;
    AlgebraicNumber value;
  };
  std::vector<Keyed> keyed;
  const Rational grid = two_pow(40);
  for (const AlgebraicNumber& r : out) {
    const ComplexInterval e = r.enclose(64);
    const Rational re = floor_div((e.re.lower() + e.re.upper()) / 2 * grid);
    const Rational im = floor_div((e.im.lower() + e.im.upper()) / 2 * grid);
    keyed.push_back({r.is_real(), re, im, r.defining().str(), r});
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& x, const Keyed& y) {
    if (x.real != y.real) return x.real;
    if (x.re != y.re) return x.re < y.re;
    if (x.im != y.im) return x.im < y.im;
    return x.poly < y.poly;
  });
  // Real roots from different factors may tie on the grid; order them exactly.
  for (std::size_t i = 0; i + 1 < keyed.size(); ++i) {
    for (std::size_t j = i + 1; j < keyed.size() && keyed[j].real && keyed[i].real && keyed[j].re == keyed[i].re; ++j) {
      if (alg_sign_real(keyed[j].value - keyed[i].value) < 0) std::swap(keyed[i], keyed[j]);
    }
  }
  out.clear();
  for (Keyed& k : keyed) out.push_back(std::move(k.value));
  return out;
}

}  // namespace upos
