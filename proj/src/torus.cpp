#include "upos/torus.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>

#include "upos/errors.hpp"

namespace upos {

namespace {

Rational frac(const Rational& q) { return q - Rational(floor_div(q)); }

// Interval enclosure of f; 2 Re(c z) = 2|c| cos(angle(z) + arg c).
class Evaluator {
 public:
  Evaluator(const TorusProblem& p, long bits) : prec_(bits), two_pi_(Interval(Rational(2), bits) * Interval::pi(bits)) {
    b_ = p.b.enclose_real(bits);
    for (const AlgebraicNumber& c : p.cs) {
      const ComplexInterval e = c.enclose(bits);
      mod2_.push_back(Interval(Rational(2), bits) * sqrt(e.abs2()));
      arg_.push_back(atan2(e.im, e.re));
    }
  }

  Interval at(const std::vector<Interval>& turns) const {
    Interval sum = b_;
    for (std::size_t j = 0; j < mod2_.size(); ++j) sum = sum + mod2_[j] * cos(two_pi_ * turns[j] + arg_[j]);
    return sum;
  }

  Interval at_point(const std::vector<Rational>& q) const {
    std::vector<Interval> t;
    for (const Rational& x : q) t.emplace_back(x, prec_);
    return at(t);
  }

  const Interval& b() const { return b_; }
  const std::vector<Interval>& mod2() const { return mod2_; }
  const std::vector<Interval>& arg() const { return arg_; }
  mpfr_prec_t precision() const { return prec_; }

 private:
  mpfr_prec_t prec_;
  Interval two_pi_;
  Interval b_;
  std::vector<Interval> mod2_;
  std::vector<Interval> arg_;
};

// Double-precision version for cheap prefiltering.
struct FastEval {
  double b = 0;
  std::vector<double> mod2, arg;

  explicit FastEval(const Evaluator& e) {
    b = e.b().mid_double();
    for (std::size_t j = 0; j < e.mod2().size(); ++j) {
      mod2.push_back(e.mod2()[j].mid_double());
      arg.push_back(e.arg()[j].mid_double());
    }
  }

  double at(const std::vector<double>& turns) const {
    double sum = b;
    for (std::size_t j = 0; j < mod2.size(); ++j) sum += mod2[j] * std::cos(2 * M_PI * turns[j] + arg[j]);
    return sum;
  }
};

std::vector<Rational> coset_point(const TorusDecomposition& t, std::size_t coset, const std::vector<Rational>& phi) {
  std::vector<Rational> q(t.s);
  for (std::size_t j = 0; j < t.s; ++j) {
    Rational a = t.cosets[coset][j];
    for (std::size_t m = 0; m < t.r; ++m) a += Rational(t.freq[j][m]) * phi[m];
    q[j] = frac(a);
  }
  return q;
}

std::vector<double> coset_point_double(const TorusDecomposition& t, std::size_t coset, const std::vector<double>& phi) {
  std::vector<double> q(t.s);
  for (std::size_t j = 0; j < t.s; ++j) {
    double a = t.cosets[coset][j].get_d();
    for (std::size_t m = 0; m < t.r; ++m) a += t.freq[j][m].get_d() * phi[m];
    q[j] = a - std::floor(a);
  }
  return q;
}

TorusVerdict neg(TorusStage stage, std::vector<Rational> witness, const Interval& value) {
  TorusVerdict v;
  v.outcome = TorusOutcome::NegWitness;
  v.stage = stage;
  v.witness = std::move(witness);
  v.witness_bound = value.upper();
  return v;
}

// Certified negative point near the double estimate phi of a one-parameter family.
std::optional<std::pair<std::vector<Rational>, Interval>> certify_near(const TorusDecomposition& t, std::size_t coset,
                                                                      const Evaluator& ev,
                                                                      const std::vector<double>& phi) {
  for (int k = 4; k <= 52; k += 2) {
    const Rational delta = ratio(1, Integer(1) << static_cast<unsigned>(k));
    std::vector<Rational> q(phi.size());
    for (std::size_t m = 0; m < phi.size(); ++m) {
      const Rational c(phi[m]);
      q[m] = simplest_between(c - delta, c + delta);
    }
    std::vector<Rational> point = coset_point(t, coset, q);
    Interval e = ev.at_point(point);
    if (e.negative()) return std::make_pair(point, e);
  }
  return std::nullopt;
}

// ---- stage (a) ----------------------------------------------------------------

TorusVerdict finite_stage(const TorusProblem& p, const Evaluator& ev) {
  std::optional<Rational> lower;
  for (const auto& point : p.torus.cosets) {
    const Interval e = ev.at_point(point);
    if (e.negative()) return neg(TorusStage::Finite, point, e);
    if (!e.positive()) {
      const AlgebraicNumber exact = eval_at_torsion(p, point);
      if (alg_sign_real(exact) < 0) return neg(TorusStage::Finite, point, e);
    }
    lower = lower ? std::min<Rational>(*lower, e.lower()) : e.lower();
  }
  TorusVerdict v;
  v.outcome = TorusOutcome::Nonneg;
  v.stage = TorusStage::Finite;
  v.lower_bound = lower;
  v.report = std::to_string(p.torus.cosets.size()) + " torsion cosets evaluated";
  return v;
}

// ---- stage (b) ----------------------------------------------------------------

TorusVerdict full_torus_stage(const TorusProblem& p, const Evaluator& ev) {
  TorusVerdict v;
  v.stage = TorusStage::FullTorus;
  Interval m = ev.b();
  for (const Interval& x : ev.mod2()) m = m - x;
  int sgn = m.positive() ? 1 : m.negative() ? -1 : 0;
  try {
    v.minimum = min_full_torus(p.b, p.cs);
    sgn = alg_sign_real(*v.minimum);
  } catch (const ResourceLimit&) {
    if (sgn == 0) throw;
    v.report = "exact minimum exceeds the degree cap; sign from enclosure";
  }
  if (sgn >= 0) {
    v.outcome = TorusOutcome::Nonneg;
    v.lower_bound = m.lower();
    return v;
  }
  // minimizer: every c_j z_j points along the negative real axis
  const mpfr_prec_t prec = ev.precision();
  const Interval two_pi = Interval(Rational(2), prec) * Interval::pi(prec);
  std::vector<Interval> psi;
  for (const Interval& a : ev.arg()) psi.push_back(Interval(ratio(1, 2), prec) - a / two_pi);
  for (long k = 4; k <= prec - 8; k += 2) {
    const Rational delta = ratio(1, Integer(1) << static_cast<unsigned long>(k));
    std::vector<Rational> q;
    for (const Interval& x : psi) q.push_back(frac(simplest_between(x.lower() - delta, x.upper() + delta)));
    const Interval e = ev.at_point(q);
    if (e.negative()) {
      TorusVerdict w = neg(TorusStage::FullTorus, q, e);
      w.minimum = v.minimum;
      return w;
    }
  }
  v.outcome = TorusOutcome::NegWitness;
  v.report = "negative minimum; no torsion witness certified at this precision";
  return v;
}

// ---- stage (c) ----------------------------------------------------------------

using APoly = std::vector<AlgebraicNumber>;

void trim(APoly& p) {
  while (!p.empty() && alg_is_zero(p.back())) p.pop_back();
}

APoly deriv(const APoly& p) {
  APoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(alg_mul(AlgebraicNumber(static_cast<long>(i)), p[i]));
  trim(d);
  return d;
}

std::pair<APoly, APoly> divmod(APoly a, const APoly& b) {
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  const AlgebraicNumber inv = alg_inv(b.back());
  APoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, AlgebraicNumber(0));
  trim(a);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const AlgebraicNumber f = alg_mul(a.back(), inv);
    q[shift] = f;
    for (std::size_t i = 0; i + 1 < b.size(); ++i) a[i + shift] = alg_add(a[i + shift], alg_neg(alg_mul(f, b[i])));
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

APoly monic(const APoly& p) {
  const AlgebraicNumber inv = alg_inv(p.back());
  APoly out;
  for (const auto& c : p) out.push_back(alg_mul(c, inv));
  out.back() = AlgebraicNumber(1);
  return out;
}

APoly gcd(APoly a, APoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    APoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : monic(a);
}

APoly sub(const APoly& a, const APoly& b) {
  APoly out(std::max(a.size(), b.size()), AlgebraicNumber(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = alg_add(out[i], alg_neg(b[i]));
  trim(out);
  return out;
}

APoly mul(const APoly& a, const APoly& b) {
  if (a.empty() || b.empty()) return {};
  APoly out(a.size() + b.size() - 1, AlgebraicNumber(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = alg_add(out[i + j], alg_mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

int real_roots_squarefree(const APoly& p) {
  std::vector<APoly> chain{p, deriv(p)};
  while (!chain.back().empty()) {
    APoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    // keep the sign, normalize the size
    const int s = alg_sign_real(r.back());
    APoly m = monic(r);
    if (s > 0) {
      for (auto& c : m) c = alg_neg(c);
    }
    chain.push_back(std::move(m));
  }
  if (chain.back().empty()) chain.pop_back();
  auto variations = [&](bool minus_inf) {
    int v = 0, prev = 0;
    for (const APoly& q : chain) {
      int s = alg_sign_real(q.back());
      if (minus_inf && (q.size() - 1) % 2 == 1) s = -s;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  };
  return variations(true) - variations(false);
}

// Whether G >= 0 on the real line.
bool nonneg_on_line(const APoly& g) {
  if (g.empty()) return true;
  // Yun over the coefficient field
  APoly odd{AlgebraicNumber(1)};
  APoly a = gcd(g, deriv(g));
  APoly b = divmod(g, a).first;
  APoly c = divmod(deriv(g), a).first;
  APoly d = sub(c, deriv(b));
  for (int mult = 1; b.size() > 1; ++mult) {
    APoly f = gcd(b, d);
    b = divmod(b, f).first;
    c = divmod(d, f).first;
    d = sub(c, deriv(b));
    if (mult % 2 == 1 && f.size() > 1) odd = mul(odd, f);
  }
  if (odd.size() > 1 && real_roots_squarefree(odd) > 0) return false;
  return alg_sign_real(g.back()) > 0;
}

bool nonneg_on_line(const UniPoly& g) {
  if (g.is_zero()) return true;
  UniPoly odd = UniPoly::constant(1);
  const auto parts = squarefree_decomposition(g);
  for (std::size_t i = 0; i < parts.size(); i += 2) odd = odd * parts[i];
  if (odd.degree() > 0 && real_root_count(odd) > 0) return false;
  return g.lc() > 0;
}

Integer binom(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Nonnegativity of f along one coset of a one-parameter torus.
std::optional<TorusVerdict> one_parameter_coset(const TorusProblem& p, const Evaluator& ev, std::size_t coset) {
  const TorusDecomposition& t = p.torus;
  const auto& off = t.cosets[coset];
  // g(phi) = B0 + sum_m 2 Re(C_m w^m), w = exp(2 pi i phi)
  AlgebraicNumber b0 = p.b;
  std::vector<std::optional<AlgebraicNumber>> cm;
  for (std::size_t j = 0; j < t.s; ++j) {
    AlgebraicNumber term = off[j] == 0 ? p.cs[j] : alg_mul(p.cs[j], AlgebraicNumber::unit_root(off[j]));
    const long f = t.freq[j][0].get_si();
    if (f == 0) {
      b0 = alg_add(b0, alg_mul(AlgebraicNumber(2), alg_re(term)));
      continue;
    }
    const std::size_t m = static_cast<std::size_t>(std::labs(f));
    if (f < 0) term = alg_conj(term);
    if (cm.size() <= m) cm.resize(m + 1);
    cm[m] = cm[m] ? alg_add(*cm[m], term) : term;
  }
  const unsigned K = static_cast<unsigned>(cm.empty() ? 0 : cm.size() - 1);
  std::vector<AlgebraicNumber> re(K + 1, AlgebraicNumber(0)), im(K + 1, AlgebraicNumber(0));
  for (unsigned m = 1; m <= K; ++m) {
    if (!cm[m]) continue;
    re[m] = alg_re(*cm[m]);
    im[m] = alg_im(*cm[m]);
  }
  // phi = 1/2, i.e. w = -1, is the point the half-angle substitution misses
  AlgebraicNumber at_half = b0;
  for (unsigned m = 1; m <= K; ++m) at_half = alg_add(at_half, alg_mul(AlgebraicNumber(m % 2 ? -2 : 2), re[m]));
  if (alg_sign_real(at_half) < 0) {
    std::vector<Rational> point = coset_point(t, coset, {ratio(1, 2)});
    return neg(TorusStage::OneParameter, point, ev.at_point(point));
  }
  // G(t) = (1+t^2)^K g, with w^m = (1+it)^{2m} / (1+t^2)^m
  // coefficient of t^k as rational combination of b0, re[m], im[m]
  std::vector<std::vector<Rational>> wb(2 * K + 1, std::vector<Rational>(1)), wr(2 * K + 1, std::vector<Rational>(K + 1)),
      wi = wr;
  const UniPoly one_t2{Rational(1), Rational(0), Rational(1)};
  const UniPoly base = one_t2.pow(K);
  for (int k = 0; k <= base.degree(); ++k) wb[k][0] = base[k];
  for (unsigned m = 1; m <= K; ++m) {
    std::vector<Rational> pr(2 * m + 1), pi(2 * m + 1);
    for (unsigned k = 0; k <= 2 * m; ++k) {
      const Rational bc(2 * binom(2 * m, k));
      // 2 Re(C i^k) = 2 (Re C, -Im C, -Re C, Im C)[k mod 4]
      switch (k % 4) {
        case 0: pr[k] = bc; break;
        case 1: pi[k] = -bc; break;
        case 2: pr[k] = -bc; break;
        default: pi[k] = bc; break;
      }
    }
    const UniPoly tail = one_t2.pow(K - m);
    const UniPoly gr = UniPoly(pr) * tail, gi = UniPoly(pi) * tail;
    for (int k = 0; k <= gr.degree(); ++k) wr[k][m] = gr[k];
    for (int k = 0; k <= gi.degree(); ++k) wi[k][m] = gi[k];
  }
  bool all_rational = b0.is_rational();
  for (unsigned m = 1; m <= K; ++m) all_rational = all_rational && re[m].is_rational() && im[m].is_rational();
  bool ok;
  if (all_rational) {
    std::vector<Rational> g(2 * K + 1);
    for (unsigned k = 0; k <= 2 * K; ++k) {
      g[k] = wb[k][0] * b0.rational();
      for (unsigned m = 1; m <= K; ++m) g[k] += wr[k][m] * re[m].rational() + wi[k][m] * im[m].rational();
    }
    ok = nonneg_on_line(UniPoly(std::move(g)));
  } else {
    APoly g(2 * K + 1, AlgebraicNumber(0));
    for (unsigned k = 0; k <= 2 * K; ++k) {
      AlgebraicNumber acc = alg_mul(AlgebraicNumber(wb[k][0]), b0);
      for (unsigned m = 1; m <= K; ++m) {
        if (wr[k][m] != 0) acc = alg_add(acc, alg_mul(AlgebraicNumber(wr[k][m]), re[m]));
        if (wi[k][m] != 0) acc = alg_add(acc, alg_mul(AlgebraicNumber(wi[k][m]), im[m]));
      }
      g[k] = acc;
    }
    trim(g);
    ok = nonneg_on_line(g);
  }
  if (ok) return std::nullopt;
  // negative somewhere: locate a certified torsion point numerically
  const FastEval fast(ev);
  const std::size_t grid = 4096;
  std::vector<std::pair<double, double>> cand;
  for (std::size_t i = 0; i < grid; ++i) {
    const double phi = static_cast<double>(i) / grid;
    cand.emplace_back(fast.at(coset_point_double(t, coset, {phi})), phi);
  }
  std::sort(cand.begin(), cand.end());
  for (std::size_t c = 0; c < std::min<std::size_t>(cand.size(), 16); ++c) {
    double lo = cand[c].second - 1.0 / grid, hi = cand[c].second + 1.0 / grid;
    auto val = [&](double x) { return fast.at(coset_point_double(t, coset, {x})); };
    for (int it = 0; it < 100; ++it) {
      const double m1 = lo + (hi - lo) * 0.382, m2 = lo + (hi - lo) * 0.618;
      if (val(m1) < val(m2)) {
        hi = m2;
      } else {
        lo = m1;
      }
    }
    if (auto hit = certify_near(t, coset, ev, {(lo + hi) / 2})) {
      return neg(TorusStage::OneParameter, hit->first, hit->second);
    }
  }
  TorusVerdict v;
  v.outcome = TorusOutcome::NegWitness;
  v.stage = TorusStage::OneParameter;
  v.report = "negative values proven exactly; no torsion witness certified";
  return v;
}

TorusVerdict one_parameter_stage(const TorusProblem& p, const Evaluator& ev) {
  for (std::size_t c = 0; c < p.torus.cosets.size(); ++c) {
    if (auto v = one_parameter_coset(p, ev, c)) return *v;
  }
  TorusVerdict v;
  v.outcome = TorusOutcome::Nonneg;
  v.stage = TorusStage::OneParameter;
  v.report = std::to_string(p.torus.cosets.size()) + " cosets decided by half-angle substitution";
  return v;
}

// ---- stage (d) ----------------------------------------------------------------

struct SearchBox {
  std::size_t coset;
  std::vector<Rational> lo, hi;
  int depth;
};

TorusVerdict search_stage(const TorusProblem& p, const Evaluator& ev, const Budgets& budgets) {
  const TorusDecomposition& t = p.torus;
  const FastEval fast(ev);
  const std::size_t r = t.r;
  std::optional<Rational> upper;
  std::size_t samples = 0;
  bool truncated = false;
  // torsion sampling, denominators in increasing order
  double best = INFINITY;
  for (long D = 1; D <= budgets.torsion_denominator_max && !truncated; ++D) {
    for (std::size_t c = 0; c < t.cosets.size() && !truncated; ++c) {
      std::vector<long> k(r, 0);
      while (true) {
        long g = D;
        for (long x : k) g = std::gcd(g, x);
        if (g == 1) {
          if (++samples > kMaxTorsionSamples) {
            truncated = true;
            break;
          }
          std::vector<double> phi(r);
          for (std::size_t m = 0; m < r; ++m) phi[m] = static_cast<double>(k[m]) / static_cast<double>(D);
          const double val = fast.at(coset_point_double(t, c, phi));
          if (val < best || val < 0) {
            std::vector<Rational> q(r);
            for (std::size_t m = 0; m < r; ++m) q[m] = ratio(k[m], D);
            std::vector<Rational> point = coset_point(t, c, q);
            const Interval e = ev.at_point(point);
            if (e.negative()) return neg(TorusStage::Search, point, e);
            if (val < best) {
              best = val;
              upper = upper ? std::min<Rational>(*upper, e.upper()) : e.upper();
            }
          }
        }
        std::size_t i = 0;
        while (i < r && k[i] == D - 1) k[i++] = 0;
        if (i == r) break;
        ++k[i];
      }
    }
  }
  // branch and bound over the parameter cube of every coset
  std::deque<SearchBox> queue;
  for (std::size_t c = 0; c < t.cosets.size(); ++c) {
    queue.push_back({c, std::vector<Rational>(r, Rational(0)), std::vector<Rational>(r, Rational(1)), 0});
  }
  const mpfr_prec_t prec = ev.precision();
  std::optional<Rational> lower;
  std::size_t boxes = 0, unresolved = 0;
  auto note_lower = [&](const Rational& x) { lower = lower ? std::min<Rational>(*lower, x) : x; };
  while (!queue.empty()) {
    SearchBox box = std::move(queue.front());
    queue.pop_front();
    if (++boxes > kMaxBoxes) {
      truncated = true;
      queue.push_back(std::move(box));
      break;
    }
    std::vector<Interval> turns;
    for (std::size_t j = 0; j < t.s; ++j) {
      Interval a(t.cosets[box.coset][j], prec);
      for (std::size_t m = 0; m < r; ++m) {
        if (t.freq[j][m] != 0) a = a + Interval(Rational(t.freq[j][m]), prec) * Interval(box.lo[m], box.hi[m], prec);
      }
      turns.push_back(a);
    }
    const Interval e = ev.at(turns);
    if (e.positive()) {
      note_lower(e.lower());
      continue;
    }
    std::vector<Rational> mid(r);
    for (std::size_t m = 0; m < r; ++m) mid[m] = (box.lo[m] + box.hi[m]) / 2;
    const std::vector<Rational> point = coset_point(t, box.coset, mid);
    const Interval me = ev.at_point(point);
    if (me.negative()) return neg(TorusStage::Search, point, me);
    upper = upper ? std::min<Rational>(*upper, me.upper()) : me.upper();
    if (box.depth >= budgets.bnb_depth) {
      note_lower(e.lower());
      ++unresolved;
      continue;
    }
    std::size_t widest = 0;
    for (std::size_t m = 1; m < r; ++m) {
      if (box.hi[m] - box.lo[m] > box.hi[widest] - box.lo[widest]) widest = m;
    }
    SearchBox left = box, right = box;
    left.hi[widest] = mid[widest];
    right.lo[widest] = mid[widest];
    left.depth = right.depth = box.depth + 1;
    queue.push_back(std::move(left));
    queue.push_back(std::move(right));
  }
  if (!queue.empty()) {
    // unexplored boxes: fall back to the bound over the whole torus
    Interval trivial = ev.b();
    for (const Interval& x : ev.mod2()) trivial = trivial - x;
    note_lower(trivial.lower());
    unresolved += queue.size();
  }
  TorusVerdict v;
  v.stage = TorusStage::Search;
  v.lower_bound = lower;
  v.upper_bound = upper;
  std::ostringstream rep;
  rep << samples << " torsion samples, " << std::min(boxes, kMaxBoxes) << " boxes, " << unresolved
      << " unresolved at depth " << budgets.bnb_depth;
  if (truncated) rep << " (budget exhausted)";
  v.report = rep.str();
  v.outcome = unresolved == 0 ? TorusOutcome::Nonneg : TorusOutcome::Inconclusive;
  return v;
}

}  // namespace

std::string to_string(TorusOutcome o) {
  switch (o) {
    case TorusOutcome::Nonneg: return "NONNEG";
    case TorusOutcome::NegWitness: return "NEG_WITNESS";
    default: return "INCONCLUSIVE";
  }
}

std::string to_string(TorusStage s) {
  switch (s) {
    case TorusStage::Finite: return "finite";
    case TorusStage::FullTorus: return "full_torus";
    case TorusStage::OneParameter: return "one_parameter";
    default: return "search";
  }
}

AlgebraicNumber min_full_torus(const AlgebraicNumber& b, const std::vector<AlgebraicNumber>& cs) {
  if (!b.is_real()) throw InvalidInput("constant term of f must be real");
  AlgebraicNumber m = b;
  for (const AlgebraicNumber& c : cs) m = alg_add(m, alg_mul(AlgebraicNumber(-2), alg_abs(c)));
  return m;
}

namespace {

void check_on_torus(const TorusProblem& problem, const std::vector<Rational>& point) {
  if (point.size() != problem.cs.size()) throw InvalidInput("torsion point has the wrong dimension");
  for (const IntVector& v : problem.torus.relations) {
    Rational acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc += Rational(v[j]) * point[j];
    if (acc.get_den() != 1) throw InvalidInput("point is not on the torus");
  }
}

}  // namespace

int sign_at_torsion(const TorusProblem& problem, const std::vector<Rational>& point) {
  check_on_torus(problem, point);
  for (long bits = 128; bits <= 1024; bits *= 2) {
    const Interval e = Evaluator(problem, bits).at_point(point);
    if (e.positive()) return 1;
    if (e.negative()) return -1;
  }
  return alg_sign_real(eval_at_torsion(problem, point));
}

AlgebraicNumber eval_at_torsion(const TorusProblem& problem, const std::vector<Rational>& point) {
  check_on_torus(problem, point);
  AlgebraicNumber sum = problem.b;
  for (std::size_t j = 0; j < point.size(); ++j) {
    const Rational q = frac(point[j]);
    AlgebraicNumber z = q == 0 ? problem.cs[j] : alg_mul(problem.cs[j], AlgebraicNumber::unit_root(q));
    sum = alg_add(sum, alg_mul(AlgebraicNumber(2), alg_re(z)));
  }
  return sum;
}

TorusVerdict decide_nonneg(const TorusProblem& p, const Budgets& budgets) {
  if (!p.b.is_real()) throw InvalidInput("constant term of f must be real");
  if (p.cs.size() != p.torus.s) throw InvalidInput("coefficient count does not match the torus dimension");
  const Evaluator ev(p, std::max(budgets.precision_bits, 64L));
  if (p.torus.relations.empty()) return full_torus_stage(p, ev);
  if (p.torus.r == 0) return finite_stage(p, ev);
  if (p.torus.r == 1) return one_parameter_stage(p, ev);
  return search_stage(p, ev, budgets);
}

}  // namespace upos
