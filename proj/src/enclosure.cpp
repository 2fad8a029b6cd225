#include "shiftlab/enclosure.hpp"

#include <algorithm>

namespace shiftlab {

Enclosure enc_round(const Enclosure& a, int prec) {
  return Enclosure(round_down(a.lo, prec), round_up(a.hi, prec));
}

Enclosure enc_add(const Enclosure& a, const Enclosure& b, int prec) {
  return Enclosure(round_down(a.lo + b.lo, prec), round_up(a.hi + b.hi, prec));
}

Enclosure enc_sub(const Enclosure& a, const Enclosure& b, int prec) {
  return Enclosure(round_down(a.lo - b.hi, prec), round_up(a.hi - b.lo, prec));
}

Enclosure enc_mul(const Enclosure& a, const Enclosure& b, int prec) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  Rat lo = rat_min(rat_min(p1, p2), rat_min(p3, p4));
  Rat hi = rat_max(rat_max(p1, p2), rat_max(p3, p4));
  return Enclosure(round_down(lo, prec), round_up(hi, prec));
}

Enclosure enc_div(const Enclosure& a, const Enclosure& b, int prec) {
  if (b.contains(Rat(0)))
    throw precision_exhausted("interval division by an interval containing zero");
  Enclosure inv(Rat(1) / b.hi, Rat(1) / b.lo);
  return enc_mul(a, inv, prec);
}

Enclosure enc_neg(const Enclosure& a) { return Enclosure(-a.hi, -a.lo); }

Enclosure enc_abs(const Enclosure& a) {
  if (a.lo >= 0) return a;
  if (a.hi <= 0) return enc_neg(a);
  return Enclosure(Rat(0), rat_max(-a.lo, a.hi));
}

Enclosure enc_scale(const Enclosure& a, const Rat& c, int prec) {
  if (c >= 0)
    return Enclosure(round_down(a.lo * c, prec), round_up(a.hi * c, prec));
  return Enclosure(round_down(a.hi * c, prec), round_up(a.lo * c, prec));
}

Enclosure enc_pow(const Enclosure& a, long e, int prec) {
  if (e == 0) return Enclosure(Rat(1));
  if (e < 0) return enc_div(Enclosure(Rat(1)), enc_pow(a, -e, prec), prec);
  if (a.lo >= 0) {
    return Enclosure(round_down(rat_pow(a.lo, e), prec),
                     round_up(rat_pow(a.hi, e), prec));
  }
  // Mixed/negative signs: even powers fold through |a|.
  if (e % 2 == 1) {
    return Enclosure(round_down(rat_pow(a.lo, e), prec),
                     round_up(rat_pow(a.hi, e), prec));
  }
  Enclosure m = enc_abs(a);
  return Enclosure(round_down(rat_pow(m.lo, e), prec),
                   round_up(rat_pow(m.hi, e), prec));
}

Enclosure enc_root_of_rat(const Rat& r, unsigned long k, int prec) {
  if (r < 0) throw invalid_parameter("root of negative rational");
  if (k == 0) throw invalid_parameter("zeroth root");
  if (r == 0) return Enclosure(Rat(0));
  if (k == 1) return Enclosure(r);
  if (auto exact = rational_kth_root_exact(r, k)) return Enclosure(*exact);
  // Scale so the integer k-th root carries ~prec significant bits.
  long bn = static_cast<long>(mpz_sizeinbase(r.get_num().get_mpz_t(), 2));
  long bd = static_cast<long>(mpz_sizeinbase(r.get_den().get_mpz_t(), 2));
  long e_over_k = (bn - bd) / static_cast<long>(k);
  long p = prec - e_over_k + 4;
  if (p < 4) p = 4;
  Int scaled;
  // floor(num * 2^(k*p) / den)
  Int shifted = r.get_num() << static_cast<unsigned long>(k * p);
  mpz_fdiv_q(scaled.get_mpz_t(), shifted.get_mpz_t(), r.get_den().get_mpz_t());
  Int root = iroot_floor(scaled, k).first;
  Rat denom = Rat(Int(1) << static_cast<unsigned long>(p));
  Rat lo = Rat(root) / denom;
  Rat hi = Rat(root + 2) / denom;
  return Enclosure(round_down(lo, prec), round_up(hi, prec));
}

Enclosure enc_root(const Enclosure& a, unsigned long k, int prec) {
  if (a.lo < 0) throw invalid_parameter("root of interval reaching below zero");
  Enclosure lo = enc_root_of_rat(a.lo, k, prec);
  Enclosure hi = enc_root_of_rat(a.hi, k, prec);
  return Enclosure(lo.lo, hi.hi);
}

Enclosure enc_sqrt(const Enclosure& a, int prec) { return enc_root(a, 2, prec); }

namespace {

// b^e for e in (0,1) with large numerator/denominator: squares-root binary
// expansion. After i root steps x = b^(1/2^i); multiplying in the set bits
// of the dyadic expansion of e gives b^(m/2^P); the remainder exponent in
// [0, 2^-P) keeps the true value inside hull(result, result * x).
Enclosure frac_pow_dyadic(const Rat& b, const Rat& e, int prec) {
  const int P = prec + 12;
  const int W = prec + 32;
  Enclosure x{b};
  Enclosure result{Rat(1)};
  Int s = e.get_num();
  const Int& t = e.get_den();
  for (int i = 0; i < P; ++i) {
    x = enc_sqrt(x, W);
    s <<= 1;
    if (s >= t) {
      result = enc_mul(result, x, W);
      s -= t;
    }
  }
  return enc_hull(result, enc_mul(result, x, W));
}

}  // namespace

Enclosure enc_rat_pow_q(const Rat& b, const Rat& exponent, int prec) {
  if (b <= 0) throw invalid_parameter("rational power of nonpositive base");
  if (b == 1 || exponent == 0) return Enclosure(Rat(1));
  // Split integer and fractional parts; the integer part is powered exactly.
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), exponent.get_num().get_mpz_t(),
             exponent.get_den().get_mpz_t());
  if (!fl.fits_slong_p() || fl > 1 << 20 || fl < -(1 << 20))
    throw invalid_parameter("exponent integer part out of range");
  Rat frac = exponent - Rat(fl);
  Enclosure acc{rat_pow(b, fl.get_si())};
  if (frac == 0) return enc_round(acc, prec);
  const Int& num = frac.get_num();
  const Int& den = frac.get_den();
  Enclosure fpart;
  if (num <= 4096 && den <= 4096) {
    fpart = enc_root_of_rat(rat_pow(b, num.get_si()), den.get_ui(), prec + 8);
  } else {
    fpart = frac_pow_dyadic(b, frac, prec);
  }
  return enc_round(enc_mul(acc, fpart, prec + 8), prec);
}

Enclosure enc_hull(const Enclosure& a, const Enclosure& b) {
  return Enclosure(rat_min(a.lo, b.lo), rat_max(a.hi, b.hi));
}

Enclosure enc_max(const Enclosure& a, const Enclosure& b) {
  return Enclosure(rat_max(a.lo, b.lo), rat_max(a.hi, b.hi));
}

bool enc_disjoint(const Enclosure& a, const Enclosure& b) {
  return a.hi < b.lo || b.hi < a.lo;
}

Rat enc_gap(const Enclosure& a, const Enclosure& b) {
  if (a.hi < b.lo) return b.lo - a.hi;
  if (b.hi < a.lo) return a.lo - b.hi;
  return Rat(0);
}

bool enc_overlap(const Enclosure& a, const Enclosure& b) {
  return !enc_disjoint(a, b);
}

Enclosure enc_intersect(const Enclosure& a, const Enclosure& b) {
  if (enc_disjoint(a, b))
    throw internal_invariant_violation("intersection of disjoint enclosures");
  return Enclosure(rat_max(a.lo, b.lo), rat_min(a.hi, b.hi));
}

std::string enc_str(const Enclosure& a) {
  if (a.is_point()) return rat_str(a.lo);
  return "[" + rat_str(a.lo) + ", " + rat_str(a.hi) + "]";
}

}  // namespace shiftlab
