#include "shiftlab/scalar.hpp"

#include <sstream>

namespace shiftlab {

MonomialScalar::MonomialScalar(Rat c, BasisPtr b, std::vector<Rat> e)
    : coeff(std::move(c)), basis(std::move(b)), exps(std::move(e)) {
  if (!basis) throw invalid_parameter("monomial without basis");
  if (coeff <= 0) throw invalid_parameter("monomial coefficient must be positive");
  if (exps.size() != basis->size())
    throw invalid_parameter("monomial exponent count does not match basis");
}

MonomialScalar MonomialScalar::one(BasisPtr b) {
  std::vector<Rat> e(b->size(), Rat(0));
  return MonomialScalar(Rat(1), std::move(b), std::move(e));
}

bool MonomialScalar::same_basis(const MonomialScalar& o) const {
  return basis == o.basis || *basis == *o.basis;
}

std::optional<Rat> MonomialScalar::exact_rat() const {
  Rat v = coeff;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (exps[i].get_den() != 1) return std::nullopt;
    const Int& num = exps[i].get_num();
    if (!num.fits_slong_p()) return std::nullopt;
    v *= rat_pow((*basis)[i], num.get_si());
  }
  return v;
}

std::string MonomialScalar::str() const {
  std::ostringstream os;
  os << rat_str(coeff);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    os << " * (" << rat_str((*basis)[i]) << ")^(" << rat_str(exps[i]) << ")";
  }
  return os.str();
}

void check_basis_plausible(const Basis& b) {
  for (const auto& x : b)
    if (x <= 0 || x == 1) throw invalid_parameter("basis entries must be positive and != 1");
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (i == j) continue;
      if (b[i] == b[j]) throw invalid_parameter("duplicate basis entries");
      for (unsigned long k = 2; k <= 64; ++k)
        if (rat_pow(b[i], static_cast<long>(k)) == b[j])
          throw invalid_parameter("basis entry is a perfect power of another");
    }
}

namespace {

void require_same_basis(const MonomialScalar& a, const MonomialScalar& b) {
  if (!a.same_basis(b))
    throw invalid_parameter("monomial operation across different bases");
}

}  // namespace

MonomialScalar mono_mul(const MonomialScalar& a, const MonomialScalar& b) {
  require_same_basis(a, b);
  std::vector<Rat> e(a.exps.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps[i] + b.exps[i];
  return MonomialScalar(a.coeff * b.coeff, a.basis, std::move(e));
}

MonomialScalar mono_div(const MonomialScalar& a, const MonomialScalar& b) {
  require_same_basis(a, b);
  std::vector<Rat> e(a.exps.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps[i] - b.exps[i];
  return MonomialScalar(a.coeff / b.coeff, a.basis, std::move(e));
}

MonomialScalar mono_scale(const MonomialScalar& a, const Rat& r) {
  if (r <= 0) throw invalid_parameter("monomial scale must be positive");
  return MonomialScalar(a.coeff * r, a.basis, a.exps);
}

MonomialScalar mono_pow_int(const MonomialScalar& a, long e) {
  std::vector<Rat> ex(a.exps.size());
  for (std::size_t i = 0; i < ex.size(); ++i) ex[i] = a.exps[i] * e;
  return MonomialScalar(rat_pow(a.coeff, e), a.basis, std::move(ex));
}

MonomialScalar mono_pow_rat(const MonomialScalar& a, const Rat& e) {
  if (e.get_den() == 1 && e.get_num().fits_slong_p())
    return mono_pow_int(a, e.get_num().get_si());
  if (!e.get_den().fits_ulong_p() || !e.get_num().fits_slong_p())
    throw invalid_parameter("monomial exponent out of range");
  unsigned long den = e.get_den().get_ui();
  long num = e.get_num().get_si();
  Rat powered = rat_pow(a.coeff, num);
  auto root = rational_kth_root_exact(powered, den);
  if (!root)
    throw invalid_parameter("monomial coefficient lacks an exact root for this power");
  std::vector<Rat> ex(a.exps.size());
  for (std::size_t i = 0; i < ex.size(); ++i) ex[i] = a.exps[i] * e;
  return MonomialScalar(*root, a.basis, std::move(ex));
}

Enclosure mono_enclose(const MonomialScalar& a, int prec) {
  Enclosure acc{a.coeff};
  for (std::size_t i = 0; i < a.exps.size(); ++i) {
    if (a.exps[i] == 0) continue;
    acc = enc_mul(acc, enc_rat_pow_q((*a.basis)[i], a.exps[i], prec), prec);
  }
  return acc;
}

bool scalar_is_exact(const Scalar& s) {
  return !std::holds_alternative<Enclosure>(s);
}

namespace {

// Canonical form: every exponent in [0,1), integer parts folded into the
// coefficient. Makes syntactic equality catch any two same-basis products
// of the same real value (up to true multiplicative relations in the basis).
MonomialScalar mono_fold(const MonomialScalar& m) {
  Rat coeff = m.coeff;
  std::vector<Rat> exps = m.exps;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] >= 0 && exps[i] < 1) continue;
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), exps[i].get_num().get_mpz_t(),
               exps[i].get_den().get_mpz_t());
    if (!fl.fits_slong_p()) throw invalid_parameter("monomial exponent out of range");
    coeff *= rat_pow((*m.basis)[i], fl.get_si());
    exps[i] -= Rat(fl);
  }
  return MonomialScalar(std::move(coeff), m.basis, std::move(exps));
}

}  // namespace

Scalar scalar_normalize(const Scalar& s) {
  if (const auto* m = std::get_if<MonomialScalar>(&s)) {
    MonomialScalar folded = mono_fold(*m);
    bool trivial = true;
    for (const auto& e : folded.exps)
      if (e != 0) trivial = false;
    if (trivial) return folded.coeff;
    return folded;
  }
  return s;
}

std::optional<Rat> scalar_exact_rat(const Scalar& s) {
  if (const auto* r = std::get_if<Rat>(&s)) return *r;
  if (const auto* m = std::get_if<MonomialScalar>(&s)) return m->exact_rat();
  return std::nullopt;
}

Enclosure scalar_enclose(const Scalar& s, int prec) {
  if (const auto* r = std::get_if<Rat>(&s)) return Enclosure(*r);
  if (const auto* m = std::get_if<MonomialScalar>(&s)) return mono_enclose(*m, prec);
  return std::get<Enclosure>(s);
}

Scalar scalar_mul(const Scalar& a, const Scalar& b, int prec) {
  if (const auto* ra = std::get_if<Rat>(&a)) {
    if (const auto* rb = std::get_if<Rat>(&b)) return Rat(*ra * *rb);
    if (const auto* mb = std::get_if<MonomialScalar>(&b)) return mono_scale(*mb, *ra);
  } else if (const auto* ma = std::get_if<MonomialScalar>(&a)) {
    if (const auto* rb = std::get_if<Rat>(&b)) return mono_scale(*ma, *rb);
    if (const auto* mb = std::get_if<MonomialScalar>(&b)) {
      if (ma->same_basis(*mb)) return scalar_normalize(mono_mul(*ma, *mb));
    }
  }
  return enc_mul(scalar_enclose(a, prec), scalar_enclose(b, prec), prec);
}

Scalar scalar_div(const Scalar& a, const Scalar& b, int prec) {
  if (const auto* ra = std::get_if<Rat>(&a)) {
    if (const auto* rb = std::get_if<Rat>(&b)) {
      if (*rb == 0) throw invalid_parameter("scalar division by zero");
      return Rat(*ra / *rb);
    }
    if (const auto* mb = std::get_if<MonomialScalar>(&b))
      return scalar_normalize(mono_div(mono_scale(MonomialScalar::one(mb->basis), *ra), *mb));
  } else if (const auto* ma = std::get_if<MonomialScalar>(&a)) {
    if (const auto* rb = std::get_if<Rat>(&b)) return mono_scale(*ma, 1 / *rb);
    if (const auto* mb = std::get_if<MonomialScalar>(&b)) {
      if (ma->same_basis(*mb)) return scalar_normalize(mono_div(*ma, *mb));
    }
  }
  return enc_div(scalar_enclose(a, prec), scalar_enclose(b, prec), prec);
}

Scalar scalar_add(const Scalar& a, const Scalar& b, int prec) {
  auto ra = scalar_exact_rat(a), rb = scalar_exact_rat(b);
  if (ra && rb) return Rat(*ra + *rb);
  if (ra && *ra == 0) return b;
  if (rb && *rb == 0) return a;
  const auto* ma = std::get_if<MonomialScalar>(&a);
  const auto* mb = std::get_if<MonomialScalar>(&b);
  if (ma && mb && ma->same_basis(*mb)) {
    MonomialScalar fa = mono_fold(*ma), fb = mono_fold(*mb);
    if (fa.exps == fb.exps)
      return MonomialScalar(fa.coeff + fb.coeff, fa.basis, fa.exps);
  }
  return enc_add(scalar_enclose(a, prec), scalar_enclose(b, prec), prec);
}

Scalar scalar_pow_int(const Scalar& a, long e, int prec) {
  if (const auto* r = std::get_if<Rat>(&a)) return rat_pow(*r, e);
  if (const auto* m = std::get_if<MonomialScalar>(&a))
    return scalar_normalize(mono_pow_int(*m, e));
  return enc_pow(std::get<Enclosure>(a), e, prec);
}

std::optional<bool> scalar_eq_exact(const Scalar& a, const Scalar& b) {
  Scalar na = scalar_normalize(a), nb = scalar_normalize(b);
  auto ra = scalar_exact_rat(na), rb = scalar_exact_rat(nb);
  if (ra && rb) return *ra == *rb;
  const auto* ma = std::get_if<MonomialScalar>(&na);
  const auto* mb = std::get_if<MonomialScalar>(&nb);
  if (ma && mb && ma->same_basis(*mb)) {
    if (ma->exps == mb->exps) return ma->coeff == mb->coeff;
    return std::nullopt;  // distinct monomials: needs independence, fall back
  }
  return std::nullopt;
}

std::string scalar_str(const Scalar& s) {
  if (const auto* r = std::get_if<Rat>(&s)) return rat_str(*r);
  if (const auto* m = std::get_if<MonomialScalar>(&s)) return m->str();
  return enc_str(std::get<Enclosure>(s));
}

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::equal_exact: return "equal-exact";
    case Verdict::equal_within: return "equal-within";
    case Verdict::separated_exact: return "separated-exact";
    case Verdict::separated_by: return "separated";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

bool verdict_is_separated(Verdict v) {
  return v == Verdict::separated_exact || v == Verdict::separated_by;
}

bool verdict_is_equal(Verdict v) {
  return v == Verdict::equal_exact || v == Verdict::equal_within;
}

ComparisonReport scalar_compare(const Scalar& a, const Scalar& b, int prec,
                                const Rat& eq_tolerance) {
  ComparisonReport rep;
  rep.lhs = scalar_enclose(a, prec);
  rep.rhs = scalar_enclose(b, prec);
  if (auto eq = scalar_eq_exact(a, b)) {
    if (*eq) {
      rep.verdict = Verdict::equal_exact;
      return rep;
    }
    // Exactly comparable and different.
    auto ra = scalar_exact_rat(scalar_normalize(a));
    auto rb = scalar_exact_rat(scalar_normalize(b));
    if (ra && rb) {
      rep.verdict = Verdict::separated_by;
      rep.gap = rat_abs(*ra - *rb);
      return rep;
    }
    // Same monomial part, different coefficients: separation scales with
    // the (positive) monomial value; certify through the enclosures below.
  }
  if (enc_disjoint(rep.lhs, rep.rhs)) {
    rep.verdict = Verdict::separated_by;
    rep.gap = enc_gap(rep.lhs, rep.rhs);
    return rep;
  }
  Rat hull_width = enc_hull(rep.lhs, rep.rhs).width();
  rep.width = hull_width;
  rep.verdict = (hull_width <= eq_tolerance) ? Verdict::equal_within : Verdict::inconclusive;
  return rep;
}

Scalar scalar_sup(const std::vector<Scalar>& xs, int prec) {
  if (xs.empty()) throw invalid_parameter("sup of empty scalar list");
  std::vector<Enclosure> encs;
  encs.reserve(xs.size());
  for (const auto& x : xs) encs.push_back(scalar_enclose(x, prec));
  std::size_t best = 0;
  for (std::size_t i = 1; i < encs.size(); ++i)
    if (encs[i].hi > encs[best].hi) best = i;
  // The winner is the true sup if its lower end dominates every other hi.
  bool dominates = true;
  for (std::size_t i = 0; i < encs.size(); ++i) {
    if (i == best) continue;
    if (!(encs[i].hi <= encs[best].lo)) dominates = false;
  }
  if (dominates && scalar_is_exact(xs[best])) return xs[best];
  Enclosure m = encs[0];
  for (std::size_t i = 1; i < encs.size(); ++i) m = enc_max(m, encs[i]);
  return m;
}

}  // namespace shiftlab
