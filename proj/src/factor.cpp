#include "upos/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "upos/errors.hpp"

namespace upos {

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;  // lowest first, trimmed

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 mulmod(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

ModPoly sub(ModPoly a, const ModPoly& b, u64 p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

// a = q b + r
void divmod(const ModPoly& a, const ModPoly& b, u64 p, ModPoly* q, ModPoly* r) {
  ModPoly rem = a;
  const int db = deg(b);
  ModPoly quo(std::max(0, deg(a) - db + 1), 0);
  const u64 inv = invmod(b.back(), p);
  for (int k = deg(rem); k >= db; --k) {
    const u64 c = rem[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const u64 f = mulmod(c, inv, p);
    quo[static_cast<std::size_t>(k - db)] = f;
    for (int i = 0; i <= db; ++i) {
      auto& slot = rem[static_cast<std::size_t>(k - db + i)];
      slot = (slot + p - mulmod(f, b[static_cast<std::size_t>(i)], p)) % p;
    }
  }
  trim(rem);
  trim(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

ModPoly mod(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r;
  divmod(a, b, p, nullptr, &r);
  return r;
}

ModPoly make_monic(ModPoly a, u64 p) {
  if (a.empty()) return a;
  const u64 inv = invmod(a.back(), p);
  for (u64& c : a) c = mulmod(c, inv, p);
  return a;
}

ModPoly gcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    ModPoly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

// Returns s, t with s a + t b = 1 for coprime monic a, b.
void ext_gcd(const ModPoly& a, const ModPoly& b, u64 p, ModPoly* s, ModPoly* t) {
  ModPoly r0 = a, r1 = b;
  ModPoly s0{1}, s1{};
  ModPoly t0{}, t1{1};
  while (!r1.empty()) {
    ModPoly q, r;
    divmod(r0, r1, p, &q, &r);
    ModPoly s2 = sub(s0, mul(q, s1, p), p);
    ModPoly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 is a nonzero constant
  const u64 inv = invmod(r0[0], p);
  for (u64& c : s0) c = mulmod(c, inv, p);
  for (u64& c : t0) c = mulmod(c, inv, p);
  *s = std::move(s0);
  *t = std::move(t0);
}

ModPoly powmod_poly(ModPoly base, const Integer& e, const ModPoly& m, u64 p) {
  ModPoly r{1};
  base = mod(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mod(mul(r, r, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, base, p), m, p);
  }
  return r;
}

ModPoly derivative(const ModPoly& a, u64 p) {
  ModPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(mulmod(a[i], i % p, p));
  trim(d);
  return d;
}

ModPoly reduce(const std::vector<Integer>& f, u64 p) {
  ModPoly r;
  for (const Integer& c : f) {
    Integer m = c % Integer(static_cast<unsigned long>(p));
    if (m < 0) m += static_cast<unsigned long>(p);
    r.push_back(m.get_ui());
  }
  trim(r);
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void equal_degree(const ModPoly& g, int d, u64 p, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer e = 1;
  for (int i = 0; i < d; ++i) e *= static_cast<unsigned long>(p);
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, p - 1);
  while (true) {
    ModPoly a(static_cast<std::size_t>(deg(g)), 0);
    for (u64& c : a) c = dist(rng);
    trim(a);
    if (deg(a) < 1) continue;
    ModPoly b = powmod_poly(a, e, g, p);
    b = sub(b, ModPoly{1}, p);
    ModPoly h = gcd(g, b, p);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      ModPoly q;
      divmod(g, h, p, &q, nullptr);
      equal_degree(h, d, p, rng, out);
      equal_degree(make_monic(q, p), d, p, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a squarefree monic polynomial mod p.
std::vector<ModPoly> factor_mod(const ModPoly& f, u64 p, std::mt19937_64& rng) {
  std::vector<ModPoly> out;
  ModPoly rest = f;
  ModPoly h{0, 1};
  const ModPoly x{0, 1};
  for (int d = 1; 2 * d <= deg(rest); ++d) {
    h = powmod_poly(h, Integer(static_cast<unsigned long>(p)), rest, p);
    ModPoly g = gcd(rest, sub(h, x, p), p);
    if (deg(g) > 0) {
      equal_degree(g, d, p, rng, out);
      ModPoly q;
      divmod(rest, g, p, &q, nullptr);
      rest = make_monic(q, p);
      h = mod(h, rest, p);
    }
  }
  if (deg(rest) > 0) out.push_back(rest);
  return out;
}

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

void zmod(ZPoly& a, const Integer& m) {
  for (Integer& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  ztrim(a);
}

ZPoly lift_int(const ModPoly& a) {
  ZPoly r;
  for (u64 c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

// Lift F = g h (mod p), g and h monic and coprime, to F = G H (mod p^a).
void hensel_pair(const ZPoly& F, const ModPoly& g, const ModPoly& h, u64 p, unsigned a, ZPoly* G, ZPoly* H) {
  ModPoly s, t;
  ext_gcd(g, h, p, &s, &t);
  ZPoly gz = lift_int(g);
  ZPoly hz = lift_int(h);
  Integer pk = static_cast<unsigned long>(p);
  for (unsigned k = 1; k < a; ++k) {
    const Integer pk1 = pk * static_cast<unsigned long>(p);
    ZPoly e = zmul(gz, hz);
    e.resize(std::max(e.size(), F.size()));
    for (std::size_t i = 0; i < F.size(); ++i) e[i] = F[i] - e[i];
    zmod(e, pk1);
    for (Integer& c : e) c /= pk;
    const ModPoly em = reduce(e, p);
    const ModPoly sigma = mod(mul(s, em, p), h, p);
    const ModPoly tau = mod(mul(t, em, p), g, p);
    for (std::size_t i = 0; i < tau.size(); ++i) gz[i] += pk * static_cast<unsigned long>(tau[i]);
    for (std::size_t i = 0; i < sigma.size(); ++i) hz[i] += pk * static_cast<unsigned long>(sigma[i]);
    pk = pk1;
  }
  *G = std::move(gz);
  *H = std::move(hz);
}

std::vector<ZPoly> hensel_lift(const ZPoly& F, const std::vector<ModPoly>& factors, u64 p, unsigned a) {
  std::vector<ZPoly> out;
  ZPoly target = F;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    ModPoly rest{1};
    for (std::size_t j = i + 1; j < factors.size(); ++j) rest = mul(rest, factors[j], p);
    ZPoly G, H;
    hensel_pair(target, factors[i], rest, p, a, &G, &H);
    out.push_back(std::move(G));
    target = std::move(H);
  }
  out.push_back(target);
  return out;
}

UniPoly to_unipoly(const ZPoly& a) {
  std::vector<Rational> v(a.begin(), a.end());
  return UniPoly(std::move(v));
}

ZPoly to_zpoly(const UniPoly& p) { return p.integer_coeffs(); }

// Exact quotient when b divides a over Z, else false.
bool divides(const UniPoly& b, const UniPoly& a, UniPoly* quotient) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return false;
  for (const Rational& c : q.coeffs()) {
    if (c.get_den() != 1) return false;
  }
  *quotient = std::move(q);
  return true;
}

// Advances idx to the next k-subset of {0..n-1} in lexicographic order.
bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void factor_primitive(const UniPoly& f, long budget, Factorization& result) {
  const int n = f.degree();
  if (n <= 1) {
    result.factors.push_back(f);
    return;
  }
  const ZPoly fz = to_zpoly(f);
  const Integer lc = fz.back();

  // Pick, among the first few admissible primes, the one giving the fewest factors.
  std::mt19937_64 rng(0x5eed5eedULL);
  u64 best_p = 0;
  std::vector<ModPoly> best;
  int tried = 0;
  for (u64 p = 3; tried < 5 && p < (1ULL << 31); p += 2) {
    if (!is_prime(p)) continue;
    if (Integer(lc % static_cast<unsigned long>(p)) == 0) continue;
    ModPoly fm = reduce(fz, p);
    if (deg(gcd(fm, derivative(fm, p), p)) > 0) continue;
    ++tried;
    std::vector<ModPoly> fac = factor_mod(make_monic(fm, p), p, rng);
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1) break;
  }
  if (best.size() == 1) {
    result.factors.push_back(f);
    return;
  }

  // Coefficient bound for lc times any factor: |lc| 2^n |f|_2.
  Integer norm2 = 0;
  for (const Integer& c : fz) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  const Integer bound = 2 * abs(lc) * (Integer(1) << static_cast<unsigned long>(n)) * (root + 1);
  unsigned a = 1;
  Integer modulus = static_cast<unsigned long>(best_p);
  while (modulus <= 2 * bound) {
    modulus *= static_cast<unsigned long>(best_p);
    ++a;
  }
  // Monic image of f modulo p^a.
  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
  ZPoly F = fz;
  for (Integer& c : F) c *= lc_inv;
  zmod(F, modulus);
  std::vector<ZPoly> lifted = hensel_lift(F, best, best_p, a);

  const Integer half = modulus / 2;
  auto symmetric = [&](ZPoly v) {
    zmod(v, modulus);
    for (Integer& c : v) {
      if (c > half) c -= modulus;
    }
    ztrim(v);
    return v;
  };

  UniPoly rest = f;
  std::vector<std::size_t> alive(lifted.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  long tested = 0;
  std::size_t s = 1;
  while (2 * s <= alive.size()) {
    bool found = false;
    const Integer rest_lc = rest.lc().get_num();
    const Integer rest_tc = rest.coeffs().front().get_num();
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      if (++tested > budget) {
        result.complete = false;
        result.factors.push_back(rest.primitive());
        return;
      }
      // Trailing coefficient test before building the candidate.
      Integer tc = rest_lc;
      for (std::size_t i : idx) tc = (tc * lifted[alive[i]].front()) % modulus;
      ZPoly tcv{tc};
      tcv = symmetric(tcv);
      const Integer tcs = tcv.empty() ? Integer(0) : tcv.front();
      if (tcs == 0 || (rest_lc * rest_tc) % tcs != 0) continue;
      ZPoly cand{rest_lc};
      for (std::size_t i : idx) {
        cand = zmul(cand, lifted[alive[i]]);
        zmod(cand, modulus);
      }
      const UniPoly g = to_unipoly(symmetric(cand)).primitive();
      UniPoly q;
      if (g.degree() < 1 || !divides(g, rest, &q)) continue;
      result.factors.push_back(g);
      rest = q.primitive();
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < alive.size(); ++i) {
        if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(alive[i]);
      }
      alive = std::move(keep);
      found = true;
      break;
    } while (next_subset(idx, alive.size()));
    if (!found) ++s;
  }
  if (rest.degree() > 0) result.factors.push_back(rest.primitive());
}

}  // namespace

Factorization factor_squarefree(const UniPoly& p, long subset_budget) {
  if (p.is_zero()) throw InvalidInput("factorization of the zero polynomial");
  Factorization result;
  UniPoly f = p.primitive();
  if (f.degree() < 1) return result;
  if (f.coeffs().front() == 0) {
    result.factors.push_back(UniPoly::x());
    f = (f / UniPoly::x()).primitive();
  }
  factor_primitive(f, subset_budget, result);
  std::sort(result.factors.begin(), result.factors.end(), [](const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.str() < b.str();
  });
  return result;
}

}  // namespace upos
