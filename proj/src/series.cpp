#include "shiftlab/series.hpp"

namespace shiftlab {

namespace {

void require_unit_interval(const Rat& q) {
  if (!(q > 0 && q < 1)) throw invalid_parameter("argument must lie in (0,1)");
}

}  // namespace

PolyZ m_poly(unsigned long k) {
  PolyZ m = PolyZ::constant(Int(1));
  PolyZ one_minus_x(std::vector<Int>{Int(1), Int(-1)});
  PolyZ x = PolyZ::monomial(Int(1), 1);
  for (unsigned long i = 0; i < k; ++i) {
    // m_{i+1} = (x m' + m)(1 - x) + (i+1) x m
    PolyZ xdm = x * m.derivative();
    PolyZ t = (xdm + m) * one_minus_x + PolyZ::constant(Int(static_cast<long>(i) + 1)) * (x * m);
    m = std::move(t);
  }
  return m;
}

Rat s_nonneg(unsigned long k, const Rat& q) {
  require_unit_interval(q);
  Rat num = m_poly(k).eval(q);
  Rat den = rat_pow(1 - q, static_cast<long>(k) + 1);
  return num / den;
}

Rat s_partial(long k, const Rat& q, unsigned long terms) {
  require_unit_interval(q);
  Rat sum(0);
  Rat qpow(1);
  for (unsigned long j = 0; j < terms; ++j) {
    Rat base(static_cast<unsigned long>(j + 1));
    sum += rat_pow(base, k) * qpow;
    qpow *= q;
  }
  return sum;
}

Enclosure s_neg(unsigned long m, const Rat& q, unsigned long terms, int prec) {
  require_unit_interval(q);
  if (m == 0) throw invalid_parameter("s_neg expects a positive decay order");
  if (terms == 0) throw invalid_parameter("s_neg needs at least one term");
  Rat partial = s_partial(-static_cast<long>(m), q, terms);
  // (j+1)^-m <= 1, so the discarded tail lies in [0, q^terms/(1-q)].
  Rat tail = rat_pow(q, static_cast<long>(terms)) / (1 - q);
  return Enclosure(round_down(partial, prec), round_up(partial + tail, prec));
}

Enclosure s_minus1_closed(const Rat& q, int precision_bits) {
  require_unit_interval(q);
  if (precision_bits < min_precision) throw invalid_parameter("precision below minimum");
  const int work = precision_bits + 32;
  // ln(1-q) = 2 atanh(y) with y = -q/(2-q); |y| < 1 and the series
  // sum_j y^(2j+1)/(2j+1) has tail bounded by |y|^(2N+1)/((2N+1)(1-y^2)).
  const Rat y = -q / (2 - q);
  const Rat y2 = y * y;
  const Rat scale = 2 / q;
  const Rat target = Rat(1, Int(1) << static_cast<unsigned long>(precision_bits + 6));

  Enclosure sum{Rat(0)};
  Enclosure term{y};
  unsigned long j = 0;
  Rat tail_bound;
  while (true) {
    sum = enc_add(sum, enc_scale(term, Rat(1) / Rat(2 * j + 1), work), work);
    term = enc_scale(term, y2, work);
    ++j;
    // All terms are negative (y < 0); |term| <= |term.lo|.
    tail_bound = rat_abs(term.lo) / (Rat(2 * j + 1) * (1 - y2));
    if (tail_bound * scale < target) break;
    if (j > (1u << 22))
      throw precision_exhausted("atanh series failed to reach requested width");
  }
  // The remainder sum_{i>=j} y^(2i+1)/(2i+1) lies in [-tail_bound, 0].
  Enclosure atanh_enc(round_down(sum.lo - tail_bound, work), sum.hi);
  // -ln(1-q)/q = -(2/q) atanh(y)
  Enclosure out = enc_round(enc_scale(atanh_enc, -scale, work), precision_bits + 8);
  if (out.width() > Rat(1, Int(1) << static_cast<unsigned long>(precision_bits - 1)))
    throw precision_exhausted("log enclosure wider than requested");
  return out;
}

unsigned long s_neg_terms_for_tail(const Rat& q, int bits) {
  require_unit_interval(q);
  Rat target = Rat(1, Int(1) << static_cast<unsigned long>(bits));
  Rat tail = 1 / (1 - q);
  unsigned long n = 0;
  while (tail >= target) {
    tail *= q;
    ++n;
    if (n > 1u << 24) throw precision_exhausted("tail target unreachable");
  }
  return n;
}

}  // namespace shiftlab
