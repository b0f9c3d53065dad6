#include "upos/roots.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <sstream>

#include "upos/errors.hpp"

namespace upos {

bool Box::contains(const Box& o) const {
  return re_lo <= o.re_lo && o.re_hi <= re_hi && im_lo <= o.im_lo && o.im_hi <= im_hi;
}

bool Box::overlaps(const Box& o) const {
  return re_lo <= o.re_hi && o.re_lo <= re_hi && im_lo <= o.im_hi && o.im_lo <= im_hi;
}

Box Box::hull(const Box& o) const {
  return {std::min(re_lo, o.re_lo), std::max(re_hi, o.re_hi), std::min(im_lo, o.im_lo),
          std::max(im_hi, o.im_hi)};
}

ComplexInterval Box::enclose(mpfr_prec_t prec) const {
  return ComplexInterval(Interval(re_lo, re_hi, prec), Interval(im_lo, im_hi, prec));
}

std::string Box::str() const {
  std::ostringstream os;
  os << "[" << re_lo.get_d() << ", " << re_hi.get_d() << "] x [" << im_lo.get_d() << ", " << im_hi.get_d()
     << "]";
  return os.str();
}

Rational dyadic_floor(const Rational& q) {
  const long e = ilog2(q);
  if (e >= 0) return Rational(Integer(1) << static_cast<unsigned long>(e));
  return Rational(Integer(1), Integer(1) << static_cast<unsigned long>(-e));
}

namespace {

Rational dyadic_ceil(const Rational& q) {
  Rational f = dyadic_floor(q);
  return f == q ? f : f * 2;
}

long bits_for(const Rational& target) { return std::max(0L, -ilog2(target)); }

// ---- multiprecision helpers ------------------------------------------------

struct MpC {
  BigFloat re, im;
  explicit MpC(mpfr_prec_t prec) : re(prec), im(prec) {}
};

void set(MpC& z, double re, double im) {
  mpfr_set_d(z.re.get(), re, MPFR_RNDN);
  mpfr_set_d(z.im.get(), im, MPFR_RNDN);
}

MpC add(const MpC& a, const MpC& b) {
  MpC r(a.re.precision());
  mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

MpC sub(const MpC& a, const MpC& b) {
  MpC r(a.re.precision());
  mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

MpC mul(const MpC& a, const MpC& b) {
  const mpfr_prec_t p = a.re.precision();
  MpC r(p);
  BigFloat t(p);
  mpfr_mul(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(r.re.get(), r.re.get(), t.get(), MPFR_RNDN);
  mpfr_mul(r.im.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), r.im.get(), t.get(), MPFR_RNDN);
  return r;
}

BigFloat norm2(const MpC& a) {
  BigFloat r(a.re.precision());
  BigFloat t(a.re.precision());
  mpfr_sqr(r.get(), a.re.get(), MPFR_RNDN);
  mpfr_sqr(t.get(), a.im.get(), MPFR_RNDN);
  mpfr_add(r.get(), r.get(), t.get(), MPFR_RNDN);
  return r;
}

MpC div(const MpC& a, const MpC& b) {
  const mpfr_prec_t p = a.re.precision();
  const BigFloat d = norm2(b);
  MpC conj_b(p);
  mpfr_set(conj_b.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_neg(conj_b.im.get(), b.im.get(), MPFR_RNDN);
  MpC r = mul(a, conj_b);
  mpfr_div(r.re.get(), r.re.get(), d.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), r.im.get(), d.get(), MPFR_RNDN);
  return r;
}

bool is_zero(const MpC& a) { return a.re.is_zero() && a.im.is_zero(); }

struct MpPoly {
  std::vector<BigFloat> c;
  MpPoly(const UniPoly& p, mpfr_prec_t prec) {
    for (const Rational& v : p.coeffs()) c.emplace_back(v, prec, MPFR_RNDN);
  }
  // value and derivative by Horner
  void eval(const MpC& z, MpC& v, MpC& d) const {
    const mpfr_prec_t prec = z.re.precision();
    v = MpC(prec);
    d = MpC(prec);
    for (std::size_t k = c.size(); k-- > 0;) {
      d = add(mul(d, z), v);
      v = mul(v, z);
      mpfr_add(v.re.get(), v.re.get(), c[k].get(), MPFR_RNDN);
    }
  }
};

// ---- real roots -------------------------------------------------------------

int sgn_at(const UniPoly& p, const Rational& x) { return sign(p.eval(x)); }

// Newton in MPFR from x0; returns false if it leaves [lo, hi].
bool newton_real(const UniPoly& p, const Rational& lo, const Rational& hi, const Rational& x0, mpfr_prec_t prec,
                 Rational* out) {
  const MpPoly mp(p, prec);
  MpC z(prec);
  mpfr_set_q(z.re.get(), x0.get_mpq_t(), MPFR_RNDN);
  MpC v(prec), d(prec);
  BigFloat step(prec);
  for (int it = 0; it < 200; ++it) {
    mp.eval(z, v, d);
    if (d.re.is_zero()) return false;
    mpfr_div(step.get(), v.re.get(), d.re.get(), MPFR_RNDN);
    mpfr_sub(z.re.get(), z.re.get(), step.get(), MPFR_RNDN);
    if (!mpfr_number_p(z.re.get())) return false;
    if (step.is_zero() || mpfr_get_exp(step.get()) < mpfr_get_exp(z.re.get()) - static_cast<long>(prec) + 4) break;
  }
  const Rational x = z.re.to_rational();
  if (x < lo || x > hi) return false;
  *out = x;
  return true;
}

// Shrinks (lo, hi), which holds exactly one root and a sign change, below target.
Box refine_real(const UniPoly& p, Rational lo, Rational hi, const Rational& target) {
  if (lo == hi) return Box::point(lo);
  int slo = sgn_at(p, lo);
  int shi = sgn_at(p, hi);
  if (slo == 0) return Box::point(lo);
  if (shi == 0) return Box::point(hi);
  int since_newton = 0;
  while (hi - lo > target) {
    if (since_newton >= 6) {
      since_newton = 0;
      const long bits = bits_for(target) + 64 + static_cast<long>(std::max(0L, ilog2(abs(hi) + 1)));
      Rational x;
      if (newton_real(p, lo, hi, (lo + hi) / 2, static_cast<mpfr_prec_t>(bits), &x)) {
        const Rational eps = dyadic_floor(target) / 4;
        const Rational a = x - eps;
        const Rational b = x + eps;
        if (lo <= a && b <= hi) {
          const int sa = sgn_at(p, a);
          const int sb = sgn_at(p, b);
          if (sa == 0) return Box::point(a);
          if (sb == 0) return Box::point(b);
          if (sa != sb) {
            lo = a;
            hi = b;
            continue;
          }
        }
      }
    }
    ++since_newton;
    const Rational m = (lo + hi) / 2;
    const int sm = sgn_at(p, m);
    if (sm == 0) return Box::point(m);
    if (sm == slo) {
      lo = m;
    } else {
      hi = m;
    }
  }
  return Box::real(lo, hi);
}

void require_squarefree(const UniPoly& p) {
  if (p.is_zero()) throw InvalidInput("root isolation of the zero polynomial");
  if (!is_squarefree(p)) throw InvalidInput("root isolation needs a squarefree polynomial");
}

std::vector<Box> real_isolating_intervals(const UniPoly& p) {
  std::vector<Box> out;
  if (p.degree() < 1) return out;
  const std::vector<UniPoly> chain = sturm_sequence(p);
  const Rational bound = dyadic_ceil(root_bound(p)) * 2;
  struct Job {
    Rational a, b;
    int count;
  };
  std::vector<Job> stack{{-bound, bound, sturm_count(chain, -bound, bound)}};
  while (!stack.empty()) {
    Job job = stack.back();
    stack.pop_back();
    if (job.count == 0) continue;
    if (job.count == 1) {
      out.push_back(Box::real(job.a, job.b));
      continue;
    }
    // any non-root point strictly inside works as a split point
    Rational m = (job.a + job.b) / 2;
    for (int k = 3; p.eval(m) == 0; ++k) m = job.a + (job.b - job.a) * ratio(k, 2 * k + 1);
    const int left = sturm_count(chain, job.a, m);
    stack.push_back({m, job.b, job.count - left});
    stack.push_back({job.a, m, left});
  }
  std::sort(out.begin(), out.end(), [](const Box& x, const Box& y) { return x.re_lo < y.re_lo; });
  return out;
}

// ---- complex roots ----------------------------------------------------------

// Aberth-Ehrlich iteration on all roots, in place.
void aberth(const MpPoly& mp, std::vector<MpC>& z, mpfr_prec_t prec, int max_iter) {
  const std::size_t n = z.size();
  std::vector<bool> done(n, false);
  MpC v(prec), d(prec);
  for (int it = 0; it < max_iter; ++it) {
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      mp.eval(z[i], v, d);
      if (is_zero(v)) {
        done[i] = true;
        continue;
      }
      if (is_zero(d)) {
        // nudge away from a critical point
        mpfr_nextabove(z[i].re.get());
        mpfr_nextabove(z[i].im.get());
        all = false;
        continue;
      }
      const MpC w = div(v, d);
      MpC s(prec);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        MpC diff = sub(z[i], z[j]);
        if (is_zero(diff)) continue;
        MpC one(prec);
        set(one, 1.0, 0.0);
        s = add(s, div(one, diff));
      }
      MpC one(prec);
      set(one, 1.0, 0.0);
      const MpC denom = sub(one, mul(w, s));
      const MpC corr = is_zero(denom) ? w : div(w, denom);
      z[i] = sub(z[i], corr);
      // converged once the correction is at the working precision
      const BigFloat c2 = norm2(corr);
      const BigFloat z2 = norm2(z[i]);
      const long ec = c2.is_zero() ? LONG_MIN / 2 : static_cast<long>(mpfr_get_exp(c2.get()));
      const long ez = z2.is_zero() ? 0 : static_cast<long>(mpfr_get_exp(z2.get()));
      if (ec < std::min(ez, 0L) - 2 * static_cast<long>(prec) + 16) {
        done[i] = true;
      } else {
        all = false;
      }
    }
    if (all) break;
  }
}

// Certified square around z holding a root: radius deg |p(z)| / |p'(z)|.
bool certify(const UniPoly& p, const UniPoly& dp, const Rational& zr, const Rational& zi, mpfr_prec_t prec,
             Box* out) {
  const ComplexInterval z(Interval(zr, prec), Interval(zi, prec));
  const ComplexInterval v = p.eval(z);
  const ComplexInterval d = dp.eval(z);
  const Interval dn = d.abs2();
  if (!dn.positive()) return false;
  const Interval r2 = v.abs2() / dn * Interval(Rational(p.degree() * p.degree()), prec);
  const Rational r2u = r2.upper();
  Rational r;
  if (r2u == 0) {
    *out = {zr, zr, zi, zi};
    return true;
  }
  r = dyadic_ceil(sqrt_ceil(r2u, static_cast<unsigned long>(std::max(8L, -ilog2(r2u) / 2 + 8))));
  *out = {zr - r, zr + r, zi - r, zi + r};
  return true;
}

std::vector<Box> upper_roots(const UniPoly& p, int needed, const Rational& target) {
  std::vector<Box> result;
  if (needed == 0) return result;
  const UniPoly dp = p.derivative();
  const int n = p.degree();
  const double a0 = std::abs(p.coeffs().front().get_d());
  const double an = std::abs(p.lc().get_d());
  double radius = (a0 > 0 && an > 0) ? std::pow(a0 / an, 1.0 / n) : 1.0;
  if (!std::isfinite(radius) || radius <= 0) radius = 1.0;

  long root_bits = std::max(0L, ilog2(root_bound(p)));
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::max(64L, bits_for(target) + 2 * root_bits + 40));
  std::vector<MpC> z;
  for (int k = 0; k < n; ++k) {
    MpC c(prec);
    const double ang = 2 * M_PI * k / n + 0.4;
    set(c, radius * std::cos(ang), radius * std::sin(ang));
    z.push_back(std::move(c));
  }
  for (int round = 0; round < 8; ++round) {
    const MpPoly mp(p, prec);
    aberth(mp, z, prec, 100 + 20 * n);
    std::vector<Box> boxes;
    bool ok = true;
    for (const MpC& zi : z) {
      if (mpfr_sgn(zi.im.get()) <= 0) continue;
      // round the center to keep the box corners compact
      Box b;
      if (!certify(p, dp, zi.re.to_rational(), zi.im.to_rational(), prec, &b)) continue;
      if (b.im_lo <= 0) continue;
      if (b.size() > target) {
        ok = false;
        continue;
      }
      boxes.push_back(b);
    }
    for (std::size_t i = 0; ok && i < boxes.size(); ++i) {
      for (std::size_t j = i + 1; j < boxes.size(); ++j) {
        if (boxes[i].overlaps(boxes[j])) ok = false;
      }
    }
    if (ok && static_cast<int>(boxes.size()) == needed) {
      std::sort(boxes.begin(), boxes.end(), [](const Box& x, const Box& y) {
        if (x.re_lo != y.re_lo) return x.re_lo < y.re_lo;
        return x.im_lo < y.im_lo;
      });
      return boxes;
    }
    // continue from the current approximations at doubled precision
    prec *= 2;
    for (MpC& zi : z) {
      mpfr_prec_round(zi.re.get(), prec, MPFR_RNDN);
      mpfr_prec_round(zi.im.get(), prec, MPFR_RNDN);
    }
  }
  throw ResourceLimit("complex root isolation did not converge");
}

// Certified Newton refinement of a single non-real root.
bool newton_complex(const UniPoly& p, const Box& box, const Rational& target, const Rational& gap, Box* out) {
  const UniPoly dp = p.derivative();
  const long root_bits = std::max(0L, ilog2(root_bound(p)));
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::max(64L, bits_for(target) + 2 * root_bits + 40));
  for (int round = 0; round < 5; ++round, prec *= 2) {
    const MpPoly mp(p, prec);
    MpC z(prec);
    const Rational cr = (box.re_lo + box.re_hi) / 2;
    const Rational ci = (box.im_lo + box.im_hi) / 2;
    mpfr_set_q(z.re.get(), cr.get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(z.im.get(), ci.get_mpq_t(), MPFR_RNDN);
    MpC v(prec), d(prec);
    for (int it = 0; it < 100; ++it) {
      mp.eval(z, v, d);
      if (is_zero(v) || is_zero(d)) break;
      const MpC step = div(v, d);
      z = sub(z, step);
      const BigFloat s2 = norm2(step);
      if (s2.is_zero() || mpfr_get_exp(s2.get()) < -2 * static_cast<long>(prec) + 2 * root_bits + 16) break;
    }
    if (!mpfr_number_p(z.re.get()) || !mpfr_number_p(z.im.get())) return false;
    Box b;
    if (!certify(p, dp, z.re.to_rational(), z.im.to_rational(), prec, &b)) continue;
    if (b.size() > target) continue;
    // Same root if the new box sits inside the isolating one, or if both boxes
    // hold a root and their hull is narrower than the separation bound.
    if (!box.contains(b) && (!b.overlaps(box) || b.hull(box).size() * 10 >= gap * 7)) return false;
    *out = b;
    return true;
  }
  return false;
}

}  // namespace

std::vector<Box> isolate_real_roots(const UniPoly& p) {
  require_squarefree(p);
  const Rational target = mignotte_gap(p) / 4;
  std::vector<Box> out;
  for (const Box& b : real_isolating_intervals(p)) out.push_back(refine_real(p, b.re_lo, b.re_hi, target));
  return out;
}

std::vector<Box> isolate_roots(const UniPoly& p) {
  std::vector<Box> out = isolate_real_roots(p);
  const int m = static_cast<int>(out.size());
  const int needed = (p.degree() - m) / 2;
  const Rational target = mignotte_gap(p) / 4;
  for (const Box& b : upper_roots(p, needed, target)) {
    out.push_back(b);
    out.push_back(b.conj());
  }
  return out;
}

Box refine_root(const UniPoly& p, const Box& box, const Rational& target) {
  if (box.size() <= target) return box;
  if (box.is_real()) return refine_real(p, box.re_lo, box.re_hi, target);
  const Rational gap = mignotte_gap(p);
  const Rational want = std::min<Rational>(target, gap / 4);
  Box b;
  if (newton_complex(p, box, want, gap, &b)) return b;
  // Fall back to a full isolation; keep shrinking until exactly the candidate
  // holding the isolated root lies inside the old box.
  const int m = static_cast<int>(real_isolating_intervals(p).size());
  const int needed = (p.degree() - m) / 2;
  Rational size = want;
  for (int round = 0; round < 4; ++round, size /= Rational(Integer(1) << 16)) {
    for (const Box& c : upper_roots(p, needed, size)) {
      const Box cand = box.im_lo > 0 ? c : c.conj();
      if (box.contains(cand) || (cand.overlaps(box) && cand.hull(box).size() * 10 < gap * 7)) return cand;
    }
  }
  throw Error("refine_root: box does not isolate a root");
}

}  // namespace upos
