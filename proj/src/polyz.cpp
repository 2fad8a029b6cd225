#include "shiftlab/polyz.hpp"

#include <sstream>

namespace shiftlab {

PolyZ::PolyZ(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyZ PolyZ::constant(Int c) {
  PolyZ p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

PolyZ PolyZ::monomial(Int c, std::size_t degree) {
  PolyZ p;
  if (c != 0) {
    p.coeffs_.assign(degree + 1, Int(0));
    p.coeffs_[degree] = std::move(c);
  }
  return p;
}

void PolyZ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& PolyZ::leading() const {
  if (is_zero()) throw internal_invariant_violation("leading() on zero polynomial");
  return coeffs_.back();
}

PolyZ PolyZ::derivative() const {
  if (coeffs_.size() <= 1) return PolyZ();
  std::vector<Int> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return PolyZ(std::move(d));
}

Rat PolyZ::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

Int PolyZ::eval_int(const Int& x) const {
  Int acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<Rat, Rat> PolyZ::eval_complex(const Rat& re, const Rat& im) const {
  Rat ar(0), ai(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    Rat nr = ar * re - ai * im + Rat(*it);
    Rat ni = ar * im + ai * re;
    ar = std::move(nr);
    ai = std::move(ni);
  }
  return {ar, ai};
}

CEnclosure PolyZ::eval_box(const CEnclosure& z, int prec) const {
  CEnclosure acc(Rat(0));
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = cenc_mul(acc, z, prec);
    acc = cenc_add(acc, CEnclosure(Rat(*it)), prec);
  }
  return acc;
}

PolyZ operator+(const PolyZ& a, const PolyZ& b) {
  std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return PolyZ(std::move(c));
}

PolyZ operator-(const PolyZ& a, const PolyZ& b) {
  std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return PolyZ(std::move(c));
}

PolyZ operator*(const PolyZ& a, const PolyZ& b) {
  if (a.is_zero() || b.is_zero()) return PolyZ();
  std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return PolyZ(std::move(c));
}

std::string PolyZ::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << (coeffs_[i] > 0 ? " + " : " - ");
    else if (coeffs_[i] < 0) os << "-";
    Int a = abs(coeffs_[i]);
    if (i == 0 || a != 1) os << a.get_str();
    if (i >= 1) os << "z";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

PolyQ::PolyQ(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyQ::PolyQ(const PolyZ& p) {
  coeffs_.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
  trim();
}

void PolyQ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return *this;
  std::vector<Rat> c = coeffs_;
  Rat lead = c.back();
  for (auto& x : c) x /= lead;
  return PolyQ(std::move(c));
}

Rat PolyQ::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyQ PolyQ::rem(const PolyQ& d) const {
  if (d.is_zero()) throw invalid_parameter("polynomial remainder by zero");
  std::vector<Rat> r = coeffs_;
  long dd = d.degree();
  while (static_cast<long>(r.size()) - 1 >= dd) {
    Rat factor = r.back() / d.coeffs_.back();
    std::size_t offset = r.size() - 1 - static_cast<std::size_t>(dd);
    for (std::size_t i = 0; i < d.coeffs_.size(); ++i) r[offset + i] -= factor * d.coeffs_[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.empty()) break;
  }
  return PolyQ(std::move(r));
}

PolyQ PolyQ::div_exact(const PolyQ& d) const {
  if (d.is_zero()) throw invalid_parameter("polynomial division by zero");
  if (is_zero()) return PolyQ();
  long qd = degree() - d.degree();
  if (qd < 0) throw invalid_parameter("inexact polynomial division");
  std::vector<Rat> r = coeffs_;
  std::vector<Rat> q(static_cast<std::size_t>(qd) + 1, Rat(0));
  while (!r.empty() && static_cast<long>(r.size()) - 1 >= d.degree()) {
    Rat factor = r.back() / d.coeffs_.back();
    std::size_t offset = r.size() - 1 - static_cast<std::size_t>(d.degree());
    q[offset] = factor;
    for (std::size_t i = 0; i < d.coeffs_.size(); ++i) r[offset + i] -= factor * d.coeffs_[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  if (!r.empty()) throw invalid_parameter("inexact polynomial division");
  return PolyQ(std::move(q));
}

PolyQ poly_gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    PolyQ r = a.rem(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace shiftlab
