#ifndef SHIFTLAB_POLYZ_HPP
#define SHIFTLAB_POLYZ_HPP

#include "shiftlab/cplx.hpp"
#include "shiftlab/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace shiftlab {

/// Integer-coefficient polynomial, lowest degree first. The zero polynomial
/// has an empty coefficient vector; otherwise the leading coefficient is
/// nonzero.
class PolyZ {
 public:
  PolyZ() = default;
  explicit PolyZ(std::vector<Int> coeffs);
  static PolyZ constant(Int c);
  static PolyZ monomial(Int c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Int& leading() const;
  Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  PolyZ derivative() const;
  Rat eval(const Rat& x) const;
  Int eval_int(const Int& x) const;
  // Exact evaluation at a rational complex point; returns (re, im).
  std::pair<Rat, Rat> eval_complex(const Rat& re, const Rat& im) const;
  CEnclosure eval_box(const CEnclosure& z, int prec) const;

  bool operator==(const PolyZ& o) const { return coeffs_ == o.coeffs_; }
  std::string str() const;

  friend PolyZ operator+(const PolyZ& a, const PolyZ& b);
  friend PolyZ operator-(const PolyZ& a, const PolyZ& b);
  friend PolyZ operator*(const PolyZ& a, const PolyZ& b);

 private:
  std::vector<Int> coeffs_;
  void trim();
};

/// Rational-coefficient polynomial, just enough for exact gcd certificates.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rat> coeffs);
  explicit PolyQ(const PolyZ& p);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

  PolyQ monic() const;
  Rat eval(const Rat& x) const;
  // Remainder of this mod d (d nonzero).
  PolyQ rem(const PolyQ& d) const;
  // Exact quotient; throws if division is not exact.
  PolyQ div_exact(const PolyQ& d) const;

  bool operator==(const PolyQ& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<Rat> coeffs_;
  void trim();
};

// Monic gcd over Q.
PolyQ poly_gcd(PolyQ a, PolyQ b);

}  // namespace shiftlab

#endif
