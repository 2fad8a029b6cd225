#include "shiftlab/cplx.hpp"

namespace shiftlab {

CEnclosure cenc_add(const CEnclosure& a, const CEnclosure& b, int prec) {
  return {enc_add(a.re, b.re, prec), enc_add(a.im, b.im, prec)};
}

CEnclosure cenc_sub(const CEnclosure& a, const CEnclosure& b, int prec) {
  return {enc_sub(a.re, b.re, prec), enc_sub(a.im, b.im, prec)};
}

CEnclosure cenc_mul(const CEnclosure& a, const CEnclosure& b, int prec) {
  Enclosure re = enc_sub(enc_mul(a.re, b.re, prec), enc_mul(a.im, b.im, prec), prec);
  Enclosure im = enc_add(enc_mul(a.re, b.im, prec), enc_mul(a.im, b.re, prec), prec);
  return {re, im};
}

CEnclosure cenc_div(const CEnclosure& a, const CEnclosure& b, int prec) {
  Enclosure den = cenc_mod_sq(b, prec);
  if (den.contains(Rat(0)))
    throw precision_exhausted("complex interval division by a box containing zero");
  CEnclosure num = cenc_mul(a, cenc_conj(b), prec);
  return {enc_div(num.re, den, prec), enc_div(num.im, den, prec)};
}

CEnclosure cenc_neg(const CEnclosure& a) { return {enc_neg(a.re), enc_neg(a.im)}; }

CEnclosure cenc_conj(const CEnclosure& a) { return {a.re, enc_neg(a.im)}; }

CEnclosure cenc_pow(const CEnclosure& a, unsigned long e, int prec) {
  CEnclosure acc(Rat(1));
  CEnclosure base = a;
  while (e > 0) {
    if (e & 1ul) acc = cenc_mul(acc, base, prec);
    e >>= 1;
    if (e > 0) base = cenc_mul(base, base, prec);
  }
  return acc;
}

Enclosure cenc_mod_sq(const CEnclosure& a, int prec) {
  Enclosure r2 = enc_mul(enc_abs(a.re), enc_abs(a.re), prec);
  Enclosure i2 = enc_mul(enc_abs(a.im), enc_abs(a.im), prec);
  return enc_add(r2, i2, prec);
}

Enclosure cenc_mod(const CEnclosure& a, int prec) {
  return enc_sqrt(cenc_mod_sq(a, prec), prec);
}

bool cenc_contains(const CEnclosure& box, const Rat& re, const Rat& im) {
  return box.re.contains(re) && box.im.contains(im);
}

std::string cenc_str(const CEnclosure& a) {
  return enc_str(a.re) + " + " + enc_str(a.im) + "i";
}

}  // namespace shiftlab
