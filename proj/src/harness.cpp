#include "upos/harness.hpp"

#include <map>

#include "upos/errors.hpp"

namespace upos {

std::vector<unsigned long> falsify(const LRSRep& u, unsigned long horizon) {
  u.validate();
  const std::size_t k = u.order();
  std::vector<unsigned long> out;
  if (k == 0) return out;
  // w_n = E D^n u_n is an integer sequence with the signs of u
  Integer d = 1, e = 1;
  for (const Rational& a : u.coeffs) d = lcm(d, Integer(a.get_den()));
  for (const Rational& x : u.initial) e = lcm(e, Integer(x.get_den()));
  std::vector<Integer> c(k);
  Integer dp = 1;
  for (std::size_t i = 0; i < k; ++i) {
    dp *= d;
    const Rational t = u.coeffs[i] * Rational(dp);
    c[i] = t.get_num();
  }
  std::vector<Integer> w(k);
  dp = 1;
  for (std::size_t i = 0; i < k; ++i) {
    const Rational t = u.initial[i] * Rational(e) * Rational(dp);
    w[i] = t.get_num();
    dp *= d;
  }
  // ring buffer: w[n % k] holds w_n
  Integer next;
  for (unsigned long n = 0; n <= horizon; ++n) {
    if (n >= k) {
      next = 0;
      for (std::size_t i = 1; i <= k; ++i) next += c[i - 1] * w[(n - i) % k];
      w[n % k] = next;
    }
    if (sgn(w[n % k]) < 0) out.push_back(n);
  }
  return out;
}

std::vector<GaussianPrimeUnit> gaussian_units(std::size_t s) {
  std::vector<GaussianPrimeUnit> out;
  for (unsigned long p = 5; out.size() < s; p += 4) {
    bool prime = true;
    for (unsigned long q = 2; q * q <= p; ++q) {
      if (p % q == 0) {
        prime = false;
        break;
      }
    }
    if (!prime) continue;
    for (unsigned long a = 1; 2 * a * a < p; ++a) {
      const unsigned long r = p - a * a;
      unsigned long b = 1;
      while (b * b < r) ++b;
      if (b * b != r) continue;
      const Rational re = ratio(Integer(a * a) - Integer(b * b), Integer(p));
      const Rational im = ratio(Integer(2 * a * b), Integer(p));
      out.push_back({p, a, b, AlgebraicNumber::gaussian(re, im)});
      break;
    }
  }
  return out;
}

unsigned PolyInstance::total_degree() const {
  unsigned deg = 0;
  for (const Monomial& m : terms) {
    unsigned d = 0;
    for (unsigned e : m.exponents) d += e;
    deg = std::max(deg, d);
  }
  return deg;
}

void PolyInstance::validate() const {
  for (const Monomial& m : terms) {
    if (m.exponents.size() != variables) throw InvalidInput("monomial arity does not match the variable count");
  }
  if (total_degree() > kMaxPolyDegree) {
    throw InvalidInput("total degree " + std::to_string(total_degree()) + " exceeds " + std::to_string(kMaxPolyDegree));
  }
}

LRSRep cosine_lrs(const AlgebraicNumber& lambda) {
  if (compare_modulus(lambda, AlgebraicNumber(1)) != 0) throw InvalidInput("cosine_lrs needs |lambda| = 1");
  const AlgebraicNumber re = alg_re(lambda);
  if (!re.is_rational()) throw InvalidInput("cosine_lrs needs a rational real part");
  const Rational c = re.rational();
  // roots lambda, conj(lambda): x^2 - 2 Re(lambda) x + 1
  return minimize(LRSRep{{Rational(2 * c), Rational(-1)}, {Rational(1), c}});
}

LRSRep reduce_pos_to_lrs(const PolyInstance& f) {
  f.validate();
  const std::vector<GaussianPrimeUnit> units = gaussian_units(f.variables);
  // powers[j][e] = (y_j^2)^e
  std::vector<std::vector<LRSRep>> powers(f.variables);
  for (std::size_t j = 0; j < f.variables; ++j) {
    const LRSRep y = cosine_lrs(units[j].lambda);
    powers[j].push_back(LRSRep{{Rational(1)}, {Rational(1)}});
    powers[j].push_back(lrs_mul(y, y));
  }
  auto power = [&](std::size_t j, unsigned e) -> const LRSRep& {
    while (powers[j].size() <= e) powers[j].push_back(lrs_mul(powers[j].back(), powers[j][1]));
    return powers[j][e];
  };
  // like monomials are merged first so cancellation does not inflate the order
  std::map<std::vector<unsigned>, Rational> merged;
  for (const Monomial& m : f.terms) merged[m.exponents] += m.coeff;
  LRSRep sum;
  for (const auto& [exps, coeff] : merged) {
    if (coeff == 0) continue;
    LRSRep term{{Rational(1)}, {coeff}};
    for (std::size_t j = 0; j < f.variables; ++j) {
      if (exps[j] > 0) term = lrs_mul(term, power(j, exps[j]));
    }
    sum = lrs_add(sum, term);
  }
  return sum;
}

}  // namespace upos
