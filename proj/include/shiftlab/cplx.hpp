#ifndef SHIFTLAB_CPLX_HPP
#define SHIFTLAB_CPLX_HPP

#include "shiftlab/enclosure.hpp"

#include <string>
#include <vector>

namespace shiftlab {

/// Axis-aligned box enclosing a complex number.
struct CEnclosure {
  Enclosure re, im;

  CEnclosure() = default;
  CEnclosure(Enclosure r, Enclosure i) : re(std::move(r)), im(std::move(i)) {}
  explicit CEnclosure(Rat r) : re(Enclosure(std::move(r))), im(Enclosure(Rat(0))) {}
  CEnclosure(Rat r, Rat i) : re(Enclosure(std::move(r))), im(Enclosure(std::move(i))) {}

  bool is_point() const { return re.is_point() && im.is_point(); }
  Rat width() const { return rat_max(re.width(), im.width()); }
  bool contains_zero() const { return re.contains(Rat(0)) && im.contains(Rat(0)); }
};

CEnclosure cenc_add(const CEnclosure& a, const CEnclosure& b, int prec);
CEnclosure cenc_sub(const CEnclosure& a, const CEnclosure& b, int prec);
CEnclosure cenc_mul(const CEnclosure& a, const CEnclosure& b, int prec);
CEnclosure cenc_div(const CEnclosure& a, const CEnclosure& b, int prec);
CEnclosure cenc_neg(const CEnclosure& a);
CEnclosure cenc_conj(const CEnclosure& a);
CEnclosure cenc_pow(const CEnclosure& a, unsigned long e, int prec);

// Enclosure of |z|^2, always nonnegative.
Enclosure cenc_mod_sq(const CEnclosure& a, int prec);
// Enclosure of |z|.
Enclosure cenc_mod(const CEnclosure& a, int prec);

bool cenc_contains(const CEnclosure& box, const Rat& re, const Rat& im);

std::string cenc_str(const CEnclosure& a);

}  // namespace shiftlab

#endif
