#ifndef SHIFTLAB_SCALAR_HPP
#define SHIFTLAB_SCALAR_HPP

#include "shiftlab/enclosure.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace shiftlab {

using Basis = std::vector<Rat>;
using BasisPtr = std::shared_ptr<const Basis>;

/// Exact positive real of the form coeff * prod_i basis[i]^exps[i], with a
/// positive rational coefficient and rational exponents. Syntactic equality
/// of coefficient and exponent vectors implies equality of values; the
/// converse is only as good as the multiplicative independence of the basis,
/// so disequality always falls back to enclosure comparison.
struct MonomialScalar {
  Rat coeff;
  BasisPtr basis;
  std::vector<Rat> exps;

  MonomialScalar(Rat c, BasisPtr b, std::vector<Rat> e);
  static MonomialScalar one(BasisPtr b);

  bool same_basis(const MonomialScalar& o) const;
  /// Exact rational value when every exponent is an integer.
  std::optional<Rat> exact_rat() const;
  std::string str() const;
};

// Best-effort sanity screen on a monomial basis: entries positive, not 1,
// pairwise distinct, and no entry a small perfect power of another. Throws
// on violation. Passing this is not a proof of multiplicative independence.
void check_basis_plausible(const Basis& b);

MonomialScalar mono_mul(const MonomialScalar& a, const MonomialScalar& b);
MonomialScalar mono_div(const MonomialScalar& a, const MonomialScalar& b);
MonomialScalar mono_scale(const MonomialScalar& a, const Rat& r);  // r > 0
MonomialScalar mono_pow_int(const MonomialScalar& a, long e);
// a^(num/den); requires the coefficient to admit an exact den-th root.
MonomialScalar mono_pow_rat(const MonomialScalar& a, const Rat& e);
Enclosure mono_enclose(const MonomialScalar& a, int prec);

/// A positive quantity carried exactly when possible: exact rational, exact
/// monomial, or a validated enclosure.
using Scalar = std::variant<Rat, MonomialScalar, Enclosure>;

bool scalar_is_exact(const Scalar& s);
/// Collapses integer-exponent monomials to rationals; otherwise identity.
Scalar scalar_normalize(const Scalar& s);
/// Exact rational value if one is syntactically available.
std::optional<Rat> scalar_exact_rat(const Scalar& s);
Enclosure scalar_enclose(const Scalar& s, int prec);

Scalar scalar_mul(const Scalar& a, const Scalar& b, int prec);
Scalar scalar_div(const Scalar& a, const Scalar& b, int prec);
Scalar scalar_add(const Scalar& a, const Scalar& b, int prec);
Scalar scalar_pow_int(const Scalar& a, long e, int prec);

/// true / false when exact syntactic comparison decides; nullopt otherwise.
std::optional<bool> scalar_eq_exact(const Scalar& a, const Scalar& b);

std::string scalar_str(const Scalar& s);

enum class Verdict {
  equal_exact,
  equal_within,
  separated_exact,
  separated_by,
  inconclusive,
};

std::string verdict_str(Verdict v);
bool verdict_is_separated(Verdict v);
bool verdict_is_equal(Verdict v);

/// Three-valued comparison outcome. `gap` is a certified lower bound on the
/// absolute difference when separated; `width` the combined uncertainty when
/// not. Enclosures of both sides ride along for reporting.
struct ComparisonReport {
  Verdict verdict = Verdict::inconclusive;
  Rat gap = Rat(0);
  Rat width = Rat(0);
  Enclosure lhs, rhs;
};

/// Compares two scalars. Exactly equal inputs give equal_exact. Disjoint
/// enclosures give separated_by. Overlapping enclosures give equal_within
/// when the hull width is at most eq_tolerance, else inconclusive.
ComparisonReport scalar_compare(const Scalar& a, const Scalar& b, int prec,
                                const Rat& eq_tolerance = Rat(0));

/// Max of a nonempty list; exact when one exact candidate certifiably
/// dominates, otherwise the enclosure max.
Scalar scalar_sup(const std::vector<Scalar>& xs, int prec);

}  // namespace shiftlab

#endif
