#include "upos/relations.hpp"

#include <algorithm>

#include "upos/errors.hpp"

namespace upos {

namespace {

bool contains_integer(const Interval& x) {
  BigFloat c(x.precision()), f(x.precision());
  mpfr_ceil(c.get(), x.lo().get());
  mpfr_floor(f.get(), x.hi().get());
  return !(f < c);
}

Interval dot(const IntVector& v, const std::vector<Interval>& theta, mpfr_prec_t prec) {
  Interval sum(Rational(0), prec);
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] != 0) sum = sum + Interval(Rational(v[j]), prec) * theta[j];
  }
  return sum;
}

ComplexInterval power(const ComplexInterval& z, unsigned long e, mpfr_prec_t prec) {
  ComplexInterval acc(Interval(Rational(1), prec), Interval(Rational(0), prec));
  ComplexInterval base = z;
  for (; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base;
    if (e > 1) base = base * base;
  }
  return acc;
}

// Adds v to the generator set if it is a new verified relation.
bool try_relation(const std::vector<AlgebraicNumber>& lambdas, const ArgVector& args, const IntVector& v,
                  IntMatrix& gens, IntMatrix& hermite) {
  if (!contains_integer(dot(v, args.theta, args.theta.front().precision()))) return false;
  if (in_lattice(hermite, v)) return false;
  if (!verify_relation(lambdas, v)) return false;
  gens.push_back(v);
  hermite = hermite_form(gens, v.size());
  return true;
}

RelationLattice exhaustive(const std::vector<AlgebraicNumber>& lambdas, long cap, long precision) {
  const std::size_t s = lambdas.size();
  const ArgVector args = arg_vector(lambdas, precision);
  std::vector<std::vector<long>> all;
  std::vector<long> cur(s, -cap);
  while (true) {
    all.push_back(cur);
    std::size_t i = 0;
    while (i < s && cur[i] == cap) cur[i++] = -cap;
    if (i == s) break;
    ++cur[i];
  }
  auto sup = [](const std::vector<long>& v) {
    long m = 0;
    for (long x : v) m = std::max(m, std::labs(x));
    return m;
  };
  std::stable_sort(all.begin(), all.end(), [&](const auto& a, const auto& b) { return sup(a) < sup(b); });
  IntMatrix gens, hermite;
  for (const auto& w : all) {
    // v and -v are the same relation: keep the one with positive leading entry
    auto lead = std::find_if(w.begin(), w.end(), [](long x) { return x != 0; });
    if (lead == w.end() || *lead < 0) continue;
    IntVector v(w.begin(), w.end());
    try_relation(lambdas, args, v, gens, hermite);
  }
  return {s, hermite, Completeness::Exhaustive, precision};
}

struct LllRound {
  IntMatrix hermite;
  bool unverified = false;
};

LllRound lll_round(const std::vector<AlgebraicNumber>& lambdas, long prec, IntMatrix gens) {
  const std::size_t s = lambdas.size();
  const ArgVector args = arg_vector(lambdas, prec);
  const Integer scale = Integer(1) << static_cast<unsigned long>(prec);
  IntMatrix rows(s + 1, IntVector(s + 2, Integer(0)));
  for (std::size_t j = 0; j <= s; ++j) {
    rows[j][j] = 1;
    if (j < s) {
      const Rational mid = (args.theta[j].lower() + args.theta[j].upper()) / 2;
      rows[j][s + 1] = floor_div(mid * Rational(scale) + Rational(1, 2));
    } else {
      rows[j][s + 1] = scale;
    }
  }
  LllRound out;
  out.hermite = hermite_form(gens, s);
  for (const IntVector& b : lll_reduce(rows)) {
    IntVector v(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(s));
    if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; })) continue;
    bool too_big = false;
    for (const Integer& x : v) too_big = too_big || abs(x) > kMaxRelationExponent;
    if (too_big) continue;
    const std::size_t before = gens.size();
    if (!contains_integer(dot(v, args.theta, args.theta.front().precision()))) continue;
    if (in_lattice(out.hermite, v)) continue;
    try {
      try_relation(lambdas, args, v, gens, out.hermite);
    } catch (const ResourceLimit&) {
    }
    if (gens.size() == before) out.unverified = true;
  }
  return out;
}

RelationLattice stabilized(const std::vector<AlgebraicNumber>& lambdas, long cap, long precision) {
  const std::size_t s = lambdas.size();
  IntMatrix gens;
  // cheap exhaustive pass over a small box seeds the lattice
  long small = 0;
  while (true) {
    unsigned long count = 1;
    for (std::size_t j = 0; j < s && count <= kExhaustiveLimit; ++j) count *= static_cast<unsigned long>(2 * (small + 1) + 1);
    if (count > kExhaustiveLimit || small + 1 > cap) break;
    ++small;
  }
  if (small > 0) gens = exhaustive(lambdas, small, precision).basis;
  std::vector<IntMatrix> history;
  long prec = std::max(precision, 64L);
  while (true) {
    LllRound round = lll_round(lambdas, prec, gens);
    gens = round.hermite;
    history.push_back(round.hermite);
    const std::size_t h = history.size();
    const bool stable = h >= 3 && history[h - 1] == history[h - 2] && history[h - 2] == history[h - 3];
    if ((stable && !round.unverified) || prec * 2 > kMaxRelationPrecision) {
      return {s, round.hermite, Completeness::Stabilized, prec};
    }
    prec *= 2;
  }
}

}  // namespace

std::string to_string(Completeness c) { return c == Completeness::Exhaustive ? "EXHAUSTIVE" : "STABILIZED"; }

ArgVector arg_vector(const std::vector<AlgebraicNumber>& lambdas, long bits) {
  ArgVector out;
  out.precision = bits;
  for (const AlgebraicNumber& l : lambdas) {
    Interval t = arg_turns(l, bits);
    const mpfr_prec_t p = t.precision();
    if (t.negative()) {
      t = t + Interval(Rational(1), p);
    } else if (t.lower() >= 1) {
      t = t - Interval(Rational(1), p);
    }
    out.theta.push_back(t);
  }
  return out;
}

bool verify_relation(const std::vector<AlgebraicNumber>& lambdas, const IntVector& v) {
  if (v.size() != lambdas.size()) throw InvalidInput("relation length does not match");
  for (const Integer& x : v) {
    if (abs(x) > kMaxRelationExponent) throw ResourceLimit("relation exponent " + to_string(x) + " too large");
  }
  // numeric rejection first
  const mpfr_prec_t prec = 128;
  ComplexInterval pos(Interval(Rational(1), prec), Interval(Rational(0), prec)), neg = pos;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    const ComplexInterval z = lambdas[j].enclose(96);
    if (v[j] > 0) {
      pos = pos * power(z, v[j].get_ui(), prec);
    } else {
      neg = neg * power(z, Integer(-v[j]).get_ui(), prec);
    }
  }
  if (!overlaps(pos.re, neg.re) || !overlaps(pos.im, neg.im)) return false;
  AlgebraicNumber p(1), n(1);
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] > 0) p = alg_mul(p, alg_pow(lambdas[j], v[j].get_si()));
    if (v[j] < 0) n = alg_mul(n, alg_pow(lambdas[j], Integer(-v[j]).get_si()));
  }
  return alg_equals(p, n);
}

RelationLattice find_relations(const std::vector<AlgebraicNumber>& lambdas, long masser_cap, long precision) {
  if (masser_cap < 0) throw InvalidInput("masser_cap must be nonnegative");
  if (precision < 16) throw InvalidInput("precision must be at least 16 bits");
  for (const AlgebraicNumber& l : lambdas) {
    if (compare_modulus(l, AlgebraicNumber(1)) != 0) throw InvalidInput("relation search needs |lambda| = 1, got " + l.str());
  }
  const std::size_t s = lambdas.size();
  if (s == 0) return {0, {}, Completeness::Exhaustive, precision};
  unsigned long count = 1;
  for (std::size_t j = 0; j < s && count <= kExhaustiveLimit; ++j) count *= static_cast<unsigned long>(2 * masser_cap + 1);
  if (count <= kExhaustiveLimit) return exhaustive(lambdas, masser_cap, precision);
  return stabilized(lambdas, masser_cap, precision);
}

RelationLattice scale_lattice(const RelationLattice& L, unsigned long M) {
  if (M == 0) throw InvalidInput("scale_lattice needs M >= 1");
  if (M == 1 || L.basis.empty()) return L;
  const std::size_t k = L.basis.size(), s = L.s;
  IntMatrix stacked = L.basis;
  for (std::size_t i = 0; i < s; ++i) {
    IntVector row(s, Integer(0));
    row[i] = -Integer(M);
    stacked.push_back(row);
  }
  // (a, c) with a B = M c; the c parts span (1/M)(L cap M Z^s)
  IntMatrix c_parts;
  for (const IntVector& x : left_kernel(stacked, s)) c_parts.emplace_back(x.begin() + static_cast<std::ptrdiff_t>(k), x.end());
  RelationLattice out = L;
  out.basis = hermite_form(c_parts, s);
  return out;
}

TorusDecomposition parametrize_torus(const RelationLattice& L) {
  const std::size_t s = L.s;
  TorusDecomposition out;
  out.s = s;
  const IntMatrix basis = hermite_form(L.basis, s);
  const std::size_t k = basis.size();
  out.r = s - k;
  out.relations = basis;
  SmithForm snf = k == 0 ? SmithForm{{}, identity_matrix(s), {}} : smith_form(basis, s);
  // free directions: columns k.. of V, LLL-reduced for small frequencies
  IntMatrix free_dirs;
  for (std::size_t m = k; m < s; ++m) {
    IntVector col(s);
    for (std::size_t j = 0; j < s; ++j) col[j] = snf.v[j][m];
    free_dirs.push_back(col);
  }
  free_dirs = lll_reduce(free_dirs);
  for (IntVector& col : free_dirs) {
    auto lead = std::find_if(col.begin(), col.end(), [](const Integer& x) { return x != 0; });
    if (lead != col.end() && *lead < 0) {
      for (Integer& x : col) x = -x;
    }
  }
  out.freq.assign(s, IntVector(out.r));
  for (std::size_t m = 0; m < out.r; ++m) {
    for (std::size_t j = 0; j < s; ++j) out.freq[j][m] = free_dirs[m][j];
  }
  // torsion: psi_i = t_i / d_i
  Integer total = 1;
  for (const Integer& d : snf.diagonal) total *= d;
  if (total > kMaxCosets) throw ResourceLimit("torus has " + to_string(total) + " torsion cosets");
  std::vector<unsigned long> t(k, 0);
  while (true) {
    std::vector<Rational> offset(s, Rational(0));
    for (std::size_t i = 0; i < k; ++i) {
      if (t[i] == 0) continue;
      const Rational psi = ratio(Integer(t[i]), snf.diagonal[i]);
      for (std::size_t j = 0; j < s; ++j) offset[j] += Rational(snf.v[j][i]) * psi;
    }
    for (Rational& o : offset) o -= Rational(floor_div(o));
    out.cosets.push_back(std::move(offset));
    std::size_t i = 0;
    while (i < k && t[i] + 1 == snf.diagonal[i]) t[i++] = 0;
    if (i == k) break;
    ++t[i];
  }
  return out;
}

}  // namespace upos
