#ifndef SHIFTLAB_COUNTEREXAMPLE_HPP
#define SHIFTLAB_COUNTEREXAMPLE_HPP

#include "shiftlab/series.hpp"
#include "shiftlab/shift_op.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace shiftlab {

struct non_prime_error : std::runtime_error {
  explicit non_prime_error(const Int& p)
      : std::runtime_error("p = " + p.get_str() + " is not prime") {}
};

struct power_certificate_error : std::runtime_error {
  power_certificate_error(const Int& p, long k)
      : std::runtime_error("c^" + std::to_string(k) +
                           " is a perfect power for p = " + p.get_str() +
                           "; try another prime") {}
};

/// Parameters of the one-branching-vertex shift family at exponent n:
/// q = 1/p, c0 = m_{n-1}(q)/(1-q)^(n-1), c = c0 * S(q)^(n-1) with
/// S(q) = series_value(n-1, q), satisfying S(q)^n = c * S_0(q) exactly, and
/// c^(k/(n-1)) irrational for k = 1..n-2 (exact root-extraction certificate).
struct CounterexampleParams {
  long n = 0;
  Int p;
  Rat q, c0, c;
  BasisPtr basis;              // [c, S_1(q), ..., S_{n-1}(q)]
  std::vector<Rat> s_at_q;     // exact S_0(q) .. S_{n-1}(q)
  std::vector<long> power_certified;  // k with c^k certified not an (n-1)th power

  const Rat& s(long index) const;  // 0 <= index <= n-1
};

CounterexampleParams choose_parameters(long n, const Int& p);

/// alpha_k^2 = k^(n-1) q^(k-1) (exact rational), beta_k^2 = c^(1/(n-1))/k
/// (exact monomial), gamma from gamma_solve; includes certified sup
/// candidates for the operator norm.
WeightAssignment counterexample_weights(const CounterexampleParams& params,
                                        long gamma_count = 64,
                                        int prec = default_precision);

/// Exact tail certificates at the branching vertex, from the closed forms:
/// sum_{k>I} alpha_k^2 (beta_k^2)^j = c^(j/(n-1)) * series_value(n-1-j, q)
/// minus the computed partial sum (an enclosure once the series index goes
/// negative).
std::unique_ptr<TailProvider> exact_fan_tail(const CounterexampleParams& params);

/// The spine weight sequence solved in exponent-vector form over the params
/// basis; gamma(j) has coefficient 1.
struct GammaSequence {
  BasisPtr basis;
  std::vector<std::vector<Rat>> exponents;
  Enclosure window_min, window_max;  // hull of the first n-1 values

  long count() const { return static_cast<long>(exponents.size()); }
  MonomialScalar gamma(long j) const;
  Scalar gamma_sq(long j) const;
};

GammaSequence gamma_solve(const CounterexampleParams& params, long count,
                          int prec = default_precision);

/// Exact certificate that the moment identity holds at exponent n:
/// (i) the geometric-mean recurrence on gamma, (ii) the solved boundary
/// system, (iii) the rational identity S(q)^n = c*S_0(q).
struct EqualityCertificate {
  long n;
  Int p;
  long gamma_checked;
  bool recurrence_exact = false;   // js-style condition on every spine window
  bool boundary_exact = false;     // the n-1 solved equations
  bool series_identity_exact = false;
  std::string identity;            // the rational identity, printed
};

EqualityCertificate verify_equality_at_n(const CounterexampleParams& params,
                                         const GammaSequence& gamma);

/// Refutation of the identity at exponent k != n. For 2 <= k < n the
/// rationality argument applies exactly; for k > n two sides are compared
/// as validated enclosures.
struct Separation {
  long k = 0;
  Verdict verdict = Verdict::inconclusive;
  Rat gap;         // certified lower bound on the two-sided difference
  Rat width;       // combined enclosure width when inconclusive
  Enclosure lhs, rhs;
  std::string method;
  unsigned long series_terms = 0;
  int precision = 0;
  std::optional<Verdict> crosscheck;  // spine-threaded route, k >= n+2
};

Separation refute_equality_at_k(const CounterexampleParams& params,
                                const GammaSequence& gamma, long k,
                                int prec = default_precision);

struct SweepRow {
  long k;
  Verdict verdict;
  Rat gap, width;
  std::string method;
  unsigned long series_terms = 0;
};

struct SweepReport {
  long n;
  Int p;
  long kmax;
  int precision;
  EqualityCertificate equality;
  std::vector<SweepRow> rows;
  bool all_conclusive = true;
  bool equality_only_at_n = true;
};

/// Table over k = 2..kmax: equal-exact exactly at k = n, separated elsewhere.
SweepReport sweep(const CounterexampleParams& params, long kmax = 0,
                  int prec = default_precision);

/// Terms for the negative-index series so its tail is below 2^-96 (the
/// default refutation budget).
unsigned long default_series_terms(const Rat& q);

/// Precision-scaled term budget: tail below 2^-min(96, max(1, prec-15)), so
/// the default 128-bit precision gets the 2^-96 tail and coarse precisions
/// get commensurately wide (possibly inconclusive) enclosures.
unsigned long series_terms_for_precision(const Rat& q, int prec);

}  // namespace shiftlab

#endif
