#pragma once

#include <string>
#include <vector>

#include "upos/interval.hpp"
#include "upos/poly.hpp"

namespace upos {

/// Axis-parallel rectangle with rational corners. A real interval has im_lo = im_hi = 0.
struct Box {
  Rational re_lo, re_hi, im_lo, im_hi;

  static Box point(const Rational& x) { return {x, x, Rational(0), Rational(0)}; }
  static Box real(const Rational& lo, const Rational& hi) { return {lo, hi, Rational(0), Rational(0)}; }

  bool is_real() const { return im_lo == 0 && im_hi == 0; }
  Rational width() const { return re_hi - re_lo; }
  Rational height() const { return im_hi - im_lo; }
  Rational size() const { return std::max(width(), height()); }
  bool contains(const Box& o) const;
  bool overlaps(const Box& o) const;
  Box conj() const { return {re_lo, re_hi, -im_hi, -im_lo}; }
  Box hull(const Box& o) const;
  ComplexInterval enclose(mpfr_prec_t prec) const;
  std::string str() const;

  friend bool operator==(const Box&, const Box&) = default;
};

/// Isolating boxes for all complex roots of a squarefree polynomial: real roots
/// in ascending order, then each upper-half-plane root followed by its conjugate.
/// Every box is smaller than mignotte_gap(p) / 4 in both directions; real boxes
/// are either a single rational root or an interval with a sign change of p.
std::vector<Box> isolate_roots(const UniPoly& p);

/// Isolating intervals for the real roots only, same conventions.
std::vector<Box> isolate_real_roots(const UniPoly& p);

/// Shrinks an isolating box of a squarefree polynomial until width and height
/// are at most `target`. The result still isolates the same root.
Box refine_root(const UniPoly& p, const Box& box, const Rational& target);

/// Rational 2^e with 2^e <= q for q > 0.
Rational dyadic_floor(const Rational& q);

}  // namespace upos
