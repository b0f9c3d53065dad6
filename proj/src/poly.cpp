#include "upos/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "upos/errors.hpp"

namespace upos {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::from_roots(const std::vector<Rational>& roots) {
  UniPoly p = constant(Rational(1));
  for (const Rational& r : roots) p = p * UniPoly{-r, Rational(1)};
  return p;
}

const Rational& UniPoly::lc() const {
  if (c_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
  return c_.back();
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Interval UniPoly::eval(const Interval& x) const {
  const mpfr_prec_t prec = x.precision();
  Interval acc(Rational(0), prec);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Interval(*it, prec);
  return acc;
}

ComplexInterval UniPoly::eval(const ComplexInterval& z) const {
  const mpfr_prec_t prec = std::max(z.re.precision(), z.im.precision());
  ComplexInterval acc(Interval(Rational(0), prec), Interval(Rational(0), prec));
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * z;
    acc.re = acc.re + Interval(*it, prec);
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return {};
  UniPoly r = *this;
  const Rational l = lc();
  for (Rational& v : r.c_) v /= l;
  return r;
}

std::vector<Integer> UniPoly::integer_coeffs() const {
  Integer den(1);
  for (const Rational& v : c_) den = lcm(den, v.get_den());
  std::vector<Integer> out;
  out.reserve(c_.size());
  Integer g(0);
  for (const Rational& v : c_) {
    Integer z = v.get_num() * (den / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    out.push_back(std::move(z));
  }
  if (g != 0) {
    if (out.back() < 0) g = -g;
    for (Integer& z : out) z /= g;
  }
  return out;
}

UniPoly UniPoly::primitive() const {
  std::vector<Rational> v;
  for (Integer& z : integer_coeffs()) v.emplace_back(std::move(z));
  return UniPoly(std::move(v));
}

UniPoly UniPoly::reflect() const {
  UniPoly r = *this;
  for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

UniPoly UniPoly::shift(const Rational& a) const {
  std::vector<Rational> out(c_.size());
  std::vector<Rational> binom_row{Rational(1)};
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k > 0) {
      std::vector<Rational> next(k + 1);
      next[0] = binom_row[0] * a;
      for (std::size_t i = 1; i < k; ++i) next[i] = binom_row[i - 1] + binom_row[i] * a;
      next[k] = binom_row[k - 1];
      binom_row = std::move(next);
    }
    // binom_row = coefficients of (x + a)^k
    if (c_[k] == 0) continue;
    for (std::size_t i = 0; i <= k; ++i) out[i] += c_[k] * binom_row[i];
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::scale(const Rational& c) const {
  UniPoly r = *this;
  Rational f(1);
  for (Rational& v : r.c_) {
    v *= f;
    f *= c;
  }
  r.trim();
  return r;
}

UniPoly UniPoly::reverse() const {
  std::vector<Rational> v(c_.rbegin(), c_.rend());
  return UniPoly(std::move(v));
}

UniPoly UniPoly::pow(unsigned k) const {
  UniPoly result = constant(Rational(1));
  UniPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (Rational& v : c_) v *= s;
  return *this;
}

UniPoly operator-(const UniPoly& a) {
  UniPoly r = a;
  for (Rational& v : r.c_) v = -v;
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(r));
}

std::string UniPoly::str(const char* var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& v = c_[k];
    if (v == 0) continue;
    Rational mag = abs(v);
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (!unit || k == 0) os << to_string(mag);
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rational> r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> q(r.size() - db);
  const Rational inv = 1 / b.lc();
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    const Rational f = r[k] * inv;
    q[k - db] = f;
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] -= f * b.coeffs()[i];
  }
  r.resize(db);
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

namespace {

// Scale by a positive rational so the coefficients are coprime integers.
UniPoly positive_primitive(const UniPoly& p) {
  if (p.is_zero()) return p;
  UniPoly q = p.primitive();
  if (sign(q.lc()) != sign(p.lc())) q = -q;
  return q;
}

}  // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = positive_primitive(a);
  UniPoly y = positive_primitive(b);
  while (!y.is_zero()) {
    UniPoly r = positive_primitive(x % y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw InvalidInput("squarefree part of the zero polynomial");
  if (p.degree() == 0) return UniPoly::constant(Rational(1));
  return (p / gcd(p, p.derivative())).monic();
}

bool is_squarefree(const UniPoly& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() == 0;
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw InvalidInput("squarefree decomposition of the zero polynomial");
  std::vector<UniPoly> out;
  if (p.degree() == 0) return out;
  const UniPoly dp = p.derivative();
  UniPoly a = gcd(p, dp);
  UniPoly b = p / a;
  UniPoly c = dp / a;
  UniPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UniPoly g = gcd(b, d);
    out.push_back(g);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(positive_primitive(p));
  UniPoly d = positive_primitive(p.derivative());
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    UniPoly r = chain[chain.size() - 2] % chain.back();
    if (r.is_zero()) break;
    chain.push_back(positive_primitive(-r));
  }
  return chain;
}

namespace {

int sign_changes(const std::vector<UniPoly>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const UniPoly& q : chain) {
    const int s = sign(q.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int sturm_count(const std::vector<UniPoly>& chain, const Rational& a, const Rational& b) {
  if (!(a < b)) throw InvalidInput("sturm_count needs a < b");
  if (chain.empty()) throw InvalidInput("sturm_count of the zero polynomial");
  if (chain.front().eval(a) == 0 || chain.front().eval(b) == 0) {
    throw EndpointRoot("interval endpoint is a root");
  }
  return sign_changes(chain, a) - sign_changes(chain, b);
}

int sturm_count(const UniPoly& p, const Rational& a, const Rational& b) {
  if (!is_squarefree(p)) throw InvalidInput("sturm_count needs a squarefree polynomial");
  return sturm_count(sturm_sequence(p), a, b);
}

int real_root_count(const UniPoly& p) {
  const std::vector<UniPoly> chain = sturm_sequence(squarefree_part(p));
  // Signs at -inf and +inf come from leading coefficients and degree parity.
  int at_neg = 0;
  int at_pos = 0;
  int last_neg = 0;
  int last_pos = 0;
  for (const UniPoly& q : chain) {
    const int s = sign(q.lc());
    const int sn = (q.degree() % 2 == 0) ? s : -s;
    if (last_pos != 0 && s != last_pos) ++at_pos;
    if (last_neg != 0 && sn != last_neg) ++at_neg;
    last_pos = s;
    last_neg = sn;
  }
  return at_neg - at_pos;
}

Rational resultant(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) throw InvalidInput("resultant of a zero polynomial");
  UniPoly a = p;
  UniPoly b = q;
  Rational acc(1);
  while (true) {
    const int m = a.degree();
    const int n = b.degree();
    if (n == 0) return acc * upos::pow(b.lc(), static_cast<unsigned long>(m));
    if (m == 0) return acc * upos::pow(a.lc(), static_cast<unsigned long>(n));
    UniPoly r = a % b;
    if (r.is_zero()) return Rational(0);
    const int k = r.degree();
    if ((m % 2 == 1) && (n % 2 == 1)) acc = -acc;
    acc *= upos::pow(b.lc(), static_cast<unsigned long>(m - k));
    a = std::move(b);
    b = std::move(r);
  }
}

int BiPoly::degree_y() const {
  int d = static_cast<int>(terms.size()) - 1;
  while (d >= 0 && terms[static_cast<std::size_t>(d)].is_zero()) --d;
  return d;
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const UniPoly& t : terms) d = std::max(d, t.degree());
  return d;
}

UniPoly BiPoly::at_x(const Rational& x0) const {
  std::vector<Rational> v;
  v.reserve(terms.size());
  for (const UniPoly& t : terms) v.push_back(t.eval(x0));
  return UniPoly(std::move(v));
}

UniPoly resultant_bivariate(const BiPoly& p, const BiPoly& q) {
  const int dyp = p.degree_y();
  const int dyq = q.degree_y();
  if (dyp < 1 || dyq < 1) throw InvalidInput("resultant_bivariate needs positive y-degree");
  const int bound = dyp * std::max(q.degree_x(), 0) + dyq * std::max(p.degree_x(), 0);
  const UniPoly& lp = p.terms[static_cast<std::size_t>(dyp)];
  const UniPoly& lq = q.terms[static_cast<std::size_t>(dyq)];

  std::vector<Rational> xs;
  std::vector<Rational> ys;
  long next = 0;
  while (static_cast<int>(xs.size()) < bound + 1) {
    const Rational x0(next);
    next = next > 0 ? -next : -next + 1;
    if (lp.eval(x0) == 0 || lq.eval(x0) == 0) continue;
    xs.push_back(x0);
    ys.push_back(resultant(p.at_x(x0), q.at_x(x0)));
  }
  // Newton divided differences, then expand to the monomial basis.
  std::vector<Rational> dd = ys;
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  }
  UniPoly result = UniPoly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    result = result * UniPoly{-xs[i], Rational(1)} + UniPoly::constant(dd[i]);
  }
  return result;
}

unsigned long totient(unsigned long n) {
  unsigned long result = n;
  for (unsigned long f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    while (n % f == 0) n /= f;
    result -= result / f;
  }
  if (n > 1) result -= result / n;
  return result;
}

UniPoly cyclotomic(unsigned n) {
  if (n == 0) throw InvalidInput("cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<unsigned, UniPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  UniPoly p = UniPoly::monomial(Rational(1), n) - UniPoly::constant(Rational(1));
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = p / cyclotomic(d);
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, p);
  return p;
}

Rational mignotte_gap(const UniPoly& p) {
  if (p.degree() < 2) return Rational(1);
  const std::vector<Integer> z = p.integer_coeffs();
  const unsigned long d = static_cast<unsigned long>(p.degree());
  Integer height(0);
  Integer norm2(0);
  for (const Integer& c : z) {
    height = std::max(height, Integer(abs(c)));
    norm2 += c * c;
  }
  const mpfr_prec_t prec = 64;
  // sqrt(6) / (d^((d+1)/2) H^(d-1))
  const Interval dd(Rational(d), prec);
  Interval dpow(Rational(1), prec);
  for (unsigned long i = 0; i < d + 1; ++i) dpow = dpow * dd;
  const Interval hpow(Rational(upos::pow(Rational(height), d - 1)), prec);
  const Interval stated = sqrt(Interval(Rational(6), prec)) / (sqrt(dpow) * hpow);
  // sqrt(3) d^(-(d+2)/2) |p|_2^(1-d), Mignotte's bound with |disc| >= 1
  Interval dpow2 = dpow * dd;
  const Interval npow = sqrt(Interval(upos::pow(Rational(norm2), d - 1), prec));
  const Interval rigorous = sqrt(Interval(Rational(3), prec)) / (sqrt(dpow2) * npow);
  const Rational lower = std::min(stated.lower(), rigorous.lower());
  // Round down to a power of two so that dyadic boxes stay compact.
  const long e = ilog2(lower);
  Rational r(1);
  if (e >= 0) {
    r = Rational(Integer(1) << static_cast<unsigned long>(e));
  } else {
    r = Rational(Integer(1), Integer(1) << static_cast<unsigned long>(-e));
  }
  return r;
}

Rational root_bound(const UniPoly& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeffs()[static_cast<std::size_t>(i)] / p.lc())));
  return m + 1;
}

}  // namespace upos
