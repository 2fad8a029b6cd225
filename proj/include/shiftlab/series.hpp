#ifndef SHIFTLAB_SERIES_HPP
#define SHIFTLAB_SERIES_HPP

#include "shiftlab/enclosure.hpp"
#include "shiftlab/polyz.hpp"

namespace shiftlab {

// The power-sum series at argument q in (0,1):
//   series_value(k, q) = sum_{j>=0} (j+1)^k q^j.
// Nonnegative k has the exact rational closed form m_k(q)/(1-q)^(k+1);
// negative k is only reachable through validated partial-sum enclosures.

/// Numerator polynomial of the closed form; m_0 = m_1 = 1,
/// m_{k+1} = (x m_k' + m_k)(1-x) + (k+1) x m_k.
PolyZ m_poly(unsigned long k);

/// Exact value of the series for k >= 0, q in (0,1).
Rat s_nonneg(unsigned long k, const Rat& q);

/// Enclosure of the series at index -m (m >= 1) from N partial-sum terms:
/// [partial, partial + q^N/(1-q)], outward-rounded at prec bits.
Enclosure s_neg(unsigned long m, const Rat& q, unsigned long terms,
                int prec = default_precision);

/// Enclosure of -ln(1-q)/q (the index -1 closed form) of width
/// <= 2^(1-precision_bits), via the atanh series for ln with a geometric
/// tail bound and directed rounding.
Enclosure s_minus1_closed(const Rat& q, int precision_bits);

/// Exact partial sum sum_{j=0}^{N-1} (j+1)^k q^j for any integer k.
Rat s_partial(long k, const Rat& q, unsigned long terms);

/// Smallest N with q^N/(1-q) < 2^-bits.
unsigned long s_neg_terms_for_tail(const Rat& q, int bits);

}  // namespace shiftlab

#endif
