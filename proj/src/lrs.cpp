#include "upos/lrs.hpp"
#include <bit>

#include "upos/errors.hpp"

namespace upos {

void LRSRep::validate() const {
  if (coeffs.size() != initial.size()) {
    throw InvalidInput("recurrence has " + std::to_string(coeffs.size()) + " coefficients but " +
                       std::to_string(initial.size()) + " initial values");
  }
  if (!coeffs.empty() && coeffs.back() == 0) throw InvalidInput("last recurrence coefficient a_k is zero");
}

UniPoly char_poly(const LRSRep& u) {
  const std::size_t k = u.order();
  std::vector<Rational> c(k + 1);
  c[k] = 1;
  for (std::size_t i = 1; i <= k; ++i) c[k - i] = -u.coeffs[i - 1];
  return UniPoly(std::move(c));
}

std::vector<Rational> evaluate_terms(const LRSRep& u, std::size_t n_max) {
  u.validate();
  const std::size_t k = u.order();
  std::vector<Rational> out;
  out.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n < k) {
      out.push_back(u.initial[n]);
      continue;
    }
    Rational s = 0;
    for (std::size_t i = 1; i <= k; ++i) s += u.coeffs[i - 1] * out[n - i];
    out.push_back(s);
  }
  return out;
}

LRSRep lrs_from_terms(const std::vector<Rational>& s, std::size_t bound) {
  const std::size_t n_terms = std::min(s.size(), 2 * bound);
  // connection polynomial C with s_n + sum c_i s_{n-i} = 0
  std::vector<Rational> c{Rational(1)}, b{Rational(1)};
  std::size_t len = 0, shift = 1;
  Rational b_disc = 1;
  for (std::size_t n = 0; n < n_terms; ++n) {
    Rational d = s[n];
    for (std::size_t i = 1; i <= len && i < c.size(); ++i) d += c[i] * s[n - i];
    if (d == 0) {
      ++shift;
      continue;
    }
    const Rational f = d / b_disc;
    std::vector<Rational> next = c;
    if (next.size() < b.size() + shift) next.resize(b.size() + shift, Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) next[i + shift] -= f * b[i];
    if (2 * len <= n) {
      b = c;
      len = n + 1 - len;
      b_disc = d;
      shift = 1;
    } else {
      ++shift;
    }
    c = std::move(next);
  }
  c.resize(len + 1, Rational(0));
  LRSRep out;
  for (std::size_t i = 1; i <= len; ++i) out.coeffs.push_back(-c[i]);
  out.initial.assign(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(len));
  if (len > 0 && out.coeffs.back() == 0) throw Error("minimal recurrence with vanishing a_k");
  return out;
}

LRSRep minimize(const LRSRep& u) {
  u.validate();
  return lrs_from_terms(evaluate_terms(u, 2 * u.order()), u.order());
}

bool is_simple(const LRSRep& u) { return u.order() == 0 || is_squarefree(char_poly(u)); }

std::vector<AlgebraicNumber> char_roots(const LRSRep& u) {
  if (u.order() == 0) return {};
  return roots_of(char_poly(u));
}

ClosedForm closed_form(const LRSRep& u) {
  u.validate();
  ClosedForm cf;
  const std::size_t k = u.order();
  if (k == 0) return cf;
  const UniPoly f = char_poly(u);
  if (!is_squarefree(f)) throw NotSimple("characteristic polynomial " + f.str() + " has repeated roots");
  // G(x) = P(x)/Q(x); with y = 1/x this gives N(y)/f(y) = sum c_j/(y - lambda_j)
  std::vector<Rational> n_coeffs(k);
  for (std::size_t m = 0; m < k; ++m) {
    Rational p = u.initial[m];
    for (std::size_t t = 1; t <= m; ++t) p -= u.coeffs[t - 1] * u.initial[m - t];
    n_coeffs[k - 1 - m] = p;
  }
  const UniPoly numer(std::move(n_coeffs));
  const UniPoly fprime = f.derivative();
  for (const AlgebraicNumber& root : roots_of(f)) {
    AlgebraicNumber c = alg_eval(numer, fprime, root);
    if (alg_is_zero(c)) continue;
    cf.terms.push_back({root, c});
  }
  return cf;
}

LRSRep lrs_add(const LRSRep& u, const LRSRep& v) {
  const std::size_t bound = u.order() + v.order();
  if (bound == 0) return {};
  std::vector<Rational> a = evaluate_terms(u, 2 * bound), b = evaluate_terms(v, 2 * bound);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return lrs_from_terms(a, bound);
}

LRSRep lrs_mul(const LRSRep& u, const LRSRep& v) {
  const std::size_t bound = u.order() * v.order();
  if (bound == 0) return {};
  std::vector<Rational> a = evaluate_terms(u, 2 * bound), b = evaluate_terms(v, 2 * bound);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
  return lrs_from_terms(a, bound);
}

ComplexInterval evaluate_closed_form(const ClosedForm& cf, unsigned long n, long bits) {
  const long prec = bits + 64 + 2 * static_cast<long>(std::bit_width(n));
  ComplexInterval sum(Interval(Rational(0), prec), Interval(Rational(0), prec));
  for (const ClosedTerm& t : cf.terms) {
    ComplexInterval base = t.root.enclose(prec);
    ComplexInterval acc(Interval(Rational(1), prec), Interval(Rational(0), prec));
    for (unsigned long e = n; e > 0; e >>= 1) {
      if (e & 1) acc = acc * base;
      if (e > 1) base = base * base;
    }
    sum = sum + t.coeff.enclose(prec) * acc;
  }
  return sum;
}

}  // namespace upos
