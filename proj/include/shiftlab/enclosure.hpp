#ifndef SHIFTLAB_ENCLOSURE_HPP
#define SHIFTLAB_ENCLOSURE_HPP

#include "shiftlab/rational.hpp"

#include <string>

namespace shiftlab {

/// Closed interval [lo, hi] with exact rational endpoints, guaranteed to
/// contain the real value it stands for. All arithmetic rounds outward at a
/// caller-supplied bit precision.
struct Enclosure {
  Rat lo, hi;

  Enclosure() : lo(0), hi(0) {}
  Enclosure(Rat point) : lo(point), hi(point) {}
  Enclosure(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw internal_invariant_violation("enclosure with lo > hi");
  }

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool contains(const Enclosure& e) const { return lo <= e.lo && e.hi <= hi; }
  bool strictly_positive() const { return lo > 0; }
};

Enclosure enc_add(const Enclosure& a, const Enclosure& b, int prec);
Enclosure enc_sub(const Enclosure& a, const Enclosure& b, int prec);
Enclosure enc_mul(const Enclosure& a, const Enclosure& b, int prec);
Enclosure enc_div(const Enclosure& a, const Enclosure& b, int prec);  // 0 not in b
Enclosure enc_neg(const Enclosure& a);
Enclosure enc_abs(const Enclosure& a);
Enclosure enc_scale(const Enclosure& a, const Rat& c, int prec);
Enclosure enc_pow(const Enclosure& a, long e, int prec);

// Enclosure of r^(1/k) for exact rational r >= 0, width <= 2^(1-prec) relative.
Enclosure enc_root_of_rat(const Rat& r, unsigned long k, int prec);
// Enclosure of a^(1/k) for an interval a with a.lo >= 0.
Enclosure enc_root(const Enclosure& a, unsigned long k, int prec);
Enclosure enc_sqrt(const Enclosure& a, int prec);
// Enclosure of b^(num/den) for rational b > 0, den >= 1.
Enclosure enc_rat_pow_q(const Rat& b, const Rat& exponent, int prec);

Enclosure enc_hull(const Enclosure& a, const Enclosure& b);
// Enclosure of max(a, b) as reals.
Enclosure enc_max(const Enclosure& a, const Enclosure& b);
bool enc_disjoint(const Enclosure& a, const Enclosure& b);
// Certified lower bound on |x - y| when disjoint, else 0.
Rat enc_gap(const Enclosure& a, const Enclosure& b);
bool enc_overlap(const Enclosure& a, const Enclosure& b);
Enclosure enc_intersect(const Enclosure& a, const Enclosure& b);  // must overlap

Enclosure enc_round(const Enclosure& a, int prec);

std::string enc_str(const Enclosure& a);

}  // namespace shiftlab

#endif
