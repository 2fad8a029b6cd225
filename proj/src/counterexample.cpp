#include "shiftlab/counterexample.hpp"

#include <sstream>

namespace shiftlab {

const Rat& CounterexampleParams::s(long index) const {
  if (index < 0 || index >= static_cast<long>(s_at_q.size()))
    throw invalid_parameter("series value index out of range");
  return s_at_q[static_cast<std::size_t>(index)];
}

CounterexampleParams choose_parameters(long n, const Int& p) {
  if (n < 2) throw invalid_parameter("n must be at least 2");
  if (!is_prime(p)) throw non_prime_error(p);

  CounterexampleParams out;
  out.n = n;
  out.p = p;
  out.q = Rat(1, p);

  out.s_at_q.reserve(static_cast<std::size_t>(n));
  for (long k = 0; k <= n - 1; ++k)
    out.s_at_q.push_back(s_nonneg(static_cast<unsigned long>(k), out.q));

  out.c0 = m_poly(static_cast<unsigned long>(n - 1)).eval(out.q) / rat_pow(1 - out.q, n - 1);
  out.c = out.c0 * rat_pow(out.s(n - 1), n - 1);

  // The defining identity, checked exactly rather than trusted.
  if (rat_pow(out.s(n - 1), n) != out.c * out.s(0))
    throw internal_invariant_violation("parameter identity S^n = c*S_0 failed");
  if (out.c0 != out.s(n - 1) / out.s(0))
    throw internal_invariant_violation("c0 mismatch against series quotient");

  // Irrationality certificates: c^k must not be an (n-1)-th rational power
  // for k = 1..n-2 (and equivalently for c0; both are tested).
  for (long k = 1; k <= n - 2; ++k) {
    Rat ck = rat_pow(out.c, k);
    Rat c0k = rat_pow(out.c0, k);
    if (rational_kth_root_exact(ck, static_cast<unsigned long>(n - 1)) ||
        rational_kth_root_exact(c0k, static_cast<unsigned long>(n - 1)))
      throw power_certificate_error(p, k);
    out.power_certified.push_back(k);
  }

  Basis b;
  b.push_back(out.c);
  for (long k = 1; k <= n - 1; ++k) b.push_back(out.s(k));
  check_basis_plausible(b);
  out.basis = std::make_shared<const Basis>(std::move(b));
  return out;
}

namespace {

// Exponent vector of sqrt(c^((i-1)/(n-1)) * S_{n-i}(q)) over the basis
// [c, S_1, ..., S_{n-1}]; valid for 1 <= i <= n-1.
std::vector<Rat> boundary_half_vector(long n, long i) {
  std::vector<Rat> v(static_cast<std::size_t>(n), Rat(0));
  v[0] = make_rat(i - 1, 2 * (n - 1));
  v[static_cast<std::size_t>(n - i)] = Rat(1, 2);
  return v;
}

std::vector<Rat> vec_add(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> c(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) c[t] = a[t] + b[t];
  return c;
}

std::vector<Rat> vec_scale(const std::vector<Rat>& a, const Rat& s) {
  std::vector<Rat> c(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) c[t] = a[t] * s;
  return c;
}

}  // namespace

GammaSequence gamma_solve(const CounterexampleParams& params, long count, int prec) {
  const long n = params.n;
  if (count < n - 1) throw invalid_parameter("gamma count must be at least n-1");
  GammaSequence g;
  g.basis = params.basis;
  g.exponents.resize(static_cast<std::size_t>(count));

  // Boundary system, solved from gamma_0 upward: for i = n-1 down to 1 the
  // equation gamma_{n-i-1}^n = gamma_{n-i-1}...gamma_0 *
  // sqrt(c^((i-1)/(n-1)) S_{n-i}(q)) determines gamma_{n-i-1} once
  // gamma_0..gamma_{n-i-2} are known.
  for (long i = n - 1; i >= 1; --i) {
    long idx = n - i - 1;
    std::vector<Rat> rhs(static_cast<std::size_t>(n), Rat(0));
    for (long j = 0; j < idx; ++j)
      rhs = vec_add(rhs, g.exponents[static_cast<std::size_t>(j)]);
    rhs = vec_add(rhs, boundary_half_vector(n, i));
    g.exponents[static_cast<std::size_t>(idx)] = vec_scale(rhs, Rat(1, n - 1));
  }
  // Geometric-mean extension: each next exponent vector is the average of
  // the previous n-1.
  for (long j = n - 1; j < count; ++j) {
    std::vector<Rat> acc(static_cast<std::size_t>(n), Rat(0));
    for (long t = j - (n - 1); t < j; ++t)
      acc = vec_add(acc, g.exponents[static_cast<std::size_t>(t)]);
    g.exponents[static_cast<std::size_t>(j)] = vec_scale(acc, Rat(1, n - 1));
  }

  // Window hull of the first n-1 values. For n = 2 the window is the single
  // value gamma_0.
  Enclosure mn = mono_enclose(g.gamma(0), prec);
  Enclosure mx = mn;
  for (long j = 1; j <= n - 2; ++j) {
    Enclosure e = mono_enclose(g.gamma(j), prec);
    mn = Enclosure(rat_min(mn.lo, e.lo), rat_min(mn.hi, e.hi));
    mx = enc_max(mx, e);
  }
  g.window_min = mn;
  g.window_max = mx;
  return g;
}

MonomialScalar GammaSequence::gamma(long j) const {
  if (j < 0 || j >= count()) throw invalid_parameter("gamma index out of range");
  return MonomialScalar(Rat(1), basis, exponents[static_cast<std::size_t>(j)]);
}

Scalar GammaSequence::gamma_sq(long j) const {
  return scalar_normalize(mono_pow_int(gamma(j), 2));
}

WeightAssignment counterexample_weights(const CounterexampleParams& params,
                                        long gamma_count, int prec) {
  const long n = params.n;
  const Rat q = params.q;
  const Rat c = params.c;
  BasisPtr basis = params.basis;
  auto gamma = std::make_shared<GammaSequence>(gamma_solve(params, gamma_count, prec));

  WeightAssignment w;
  w.alpha_sq = [n, q](long k) -> Scalar {
    if (k < 1) throw invalid_parameter("alpha index must be >= 1");
    return Rat(rat_pow(Rat(k), n - 1) * rat_pow(q, k - 1));
  };
  w.beta_sq = [n, basis](long k) -> Scalar {
    if (k < 1) throw invalid_parameter("beta index must be >= 1");
    std::vector<Rat> e(basis->size(), Rat(0));
    e[0] = Rat(1, n - 1);  // c^(1/(n-1))
    return scalar_normalize(MonomialScalar(Rat(1, k), basis, std::move(e)));
  };
  w.gamma_sq = [gamma, params, prec](long i) -> Scalar {
    if (i < 0) throw invalid_parameter("gamma index must be >= 0");
    if (i < gamma->count()) return gamma->gamma_sq(i);
    // Past the solved prefix, recompute on demand by extending the mean
    // recurrence; cheap, but normally the prefix is long enough.
    GammaSequence ext = gamma_solve(params, i + 1, prec);
    return ext.gamma_sq(i);
  };
  // 1/k is maximal at k = 1, so beta_1^2 = c^(1/(n-1)) is the sup.
  w.beta_sq_sup_candidates = {w.beta_sq(1)};
  // Every gamma_j lies in the hull of the first n-1, so the sup of the
  // squares is attained among them.
  for (long j = 0; j <= n - 2; ++j)
    w.gamma_sq_sup_candidates.push_back(gamma->gamma_sq(j));
  return w;
}

namespace {

class ExactSeriesFanTail final : public TailProvider {
 public:
  explicit ExactSeriesFanTail(CounterexampleParams params) : params_(std::move(params)) {}

  Scalar fan_tail(long beta_depth, long branch_count, int prec) const override {
    const long n = params_.n;
    const long j = beta_depth;
    if (j < 0) throw invalid_parameter("negative beta depth");
    // Full sum: c^(j/(n-1)) * series_value(n-1-j, q); partial sum over
    // k <= branch_count of k^(n-1-j) q^(k-1) carries the same c factor.
    long s_index = n - 1 - j;
    Rat partial = s_partial(s_index, params_.q, static_cast<unsigned long>(branch_count));
    Rat c_exp_num = make_rat(j, n - 1);
    if (s_index >= 0) {
      Rat full = s_nonneg(static_cast<unsigned long>(s_index), params_.q);
      Rat tail_series = full - partial;  // exact rational
      if (tail_series < 0)
        throw internal_invariant_violation("negative series tail");
      if (c_exp_num.get_den() == 1)
        return Rat(tail_series * rat_pow(params_.c, c_exp_num.get_num().get_si()));
      std::vector<Rat> e(params_.basis->size(), Rat(0));
      e[0] = c_exp_num;
      if (tail_series == 0) return Rat(0);
      return scalar_normalize(MonomialScalar(tail_series, params_.basis, std::move(e)));
    }
    // Negative series index: enclose the full value, subtract the partial,
    // and clamp at zero (the tail is a sum of positive terms).
    unsigned long terms = series_terms_for_precision(params_.q, prec);
    if (terms < static_cast<unsigned long>(branch_count) + 8)
      terms = static_cast<unsigned long>(branch_count) + 8;
    Enclosure full = s_neg(static_cast<unsigned long>(-s_index), params_.q, terms, prec);
    Enclosure cpow = enc_rat_pow_q(params_.c, c_exp_num, prec);
    Enclosure diff = enc_sub(full, Enclosure(partial), prec);
    if (diff.lo < 0) diff = Enclosure(Rat(0), rat_max(diff.hi, Rat(0)));
    return enc_mul(cpow, diff, prec);
  }

  std::string describe() const override {
    return "closed-form fan tail: c^(j/(n-1)) * series_value(n-1-j, q) minus partial sum";
  }

 private:
  CounterexampleParams params_;
};

}  // namespace

std::unique_ptr<TailProvider> exact_fan_tail(const CounterexampleParams& params) {
  return std::make_unique<ExactSeriesFanTail>(params);
}

EqualityCertificate verify_equality_at_n(const CounterexampleParams& params,
                                         const GammaSequence& gamma) {
  const long n = params.n;
  EqualityCertificate cert;
  cert.n = n;
  cert.p = params.p;
  cert.gamma_checked = gamma.count();

  // (i) gamma_{k+n-1}^(n-1) = gamma_{k+n-2} ... gamma_k, as exact exponent
  // vectors, for every window the sequence covers.
  for (long k = 0; k + n - 1 < gamma.count(); ++k) {
    std::vector<Rat> lhs =
        vec_scale(gamma.exponents[static_cast<std::size_t>(k + n - 1)], Rat(n - 1));
    std::vector<Rat> rhs(static_cast<std::size_t>(n), Rat(0));
    for (long t = k; t <= k + n - 2; ++t)
      rhs = vec_add(rhs, gamma.exponents[static_cast<std::size_t>(t)]);
    if (lhs != rhs)
      throw internal_invariant_violation(
          "gamma recurrence failed at window index " + std::to_string(k));
  }
  cert.recurrence_exact = true;

  // (ii) the boundary system: gamma_{n-i-1}^n = gamma_{n-i-1}...gamma_0 *
  // sqrt(c^((i-1)/(n-1)) S_{n-i}(q)) for i = 1..n-1, exact in exponents.
  for (long i = 1; i <= n - 1; ++i) {
    long idx = n - i - 1;
    std::vector<Rat> lhs =
        vec_scale(gamma.exponents[static_cast<std::size_t>(idx)], Rat(n));
    std::vector<Rat> rhs = boundary_half_vector(n, i);
    for (long j = 0; j <= idx; ++j)
      rhs = vec_add(rhs, gamma.exponents[static_cast<std::size_t>(j)]);
    if (lhs != rhs)
      throw internal_invariant_violation("boundary equation failed at i = " +
                                         std::to_string(i));
  }
  cert.boundary_exact = true;

  // (iii) the exact rational identity S(q)^n = c * S_0(q).
  Rat lhs = rat_pow(params.s(n - 1), n);
  Rat rhs = params.c * params.s(0);
  if (lhs != rhs)
    throw internal_invariant_violation("series identity failed");
  cert.series_identity_exact = true;
  std::ostringstream id;
  id << rat_str(params.s(n - 1)) << "^" << n << " = " << rat_str(params.c) << " * "
     << rat_str(params.s(0));
  cert.identity = id.str();
  return cert;
}

unsigned long default_series_terms(const Rat& q) { return s_neg_terms_for_tail(q, 96); }

unsigned long series_terms_for_precision(const Rat& q, int prec) {
  int bits = prec - 15;
  if (bits < 1) bits = 1;
  if (bits > 96) bits = 96;
  return s_neg_terms_for_tail(q, bits);
}

namespace {

// Enclosure of c^e * S_index(q) where index may be negative.
Enclosure rhs_enclosure(const CounterexampleParams& params, const Rat& c_exponent,
                        long s_index, unsigned long terms, int prec) {
  Enclosure cpow = enc_rat_pow_q(params.c, c_exponent, prec);
  Enclosure s = s_index >= 0
                    ? Enclosure(s_nonneg(static_cast<unsigned long>(s_index), params.q))
                    : s_neg(static_cast<unsigned long>(-s_index), params.q, terms, prec);
  return enc_mul(cpow, s, prec);
}

}  // namespace

Separation refute_equality_at_k(const CounterexampleParams& params,
                                const GammaSequence& gamma, long k, int prec) {
  const long n = params.n;
  if (k == n) throw invalid_parameter("k = n is the equality exponent");
  if (k < 2) throw invalid_parameter("k must be at least 2");

  Separation sep;
  sep.k = k;
  sep.precision = prec;

  Rat lhs_exact = rat_pow(params.s(n - 1), k);
  Rat c_exponent = make_rat(k - 1, n - 1);
  long s_index = n - k;

  unsigned long terms = s_index < 0 ? series_terms_for_precision(params.q, prec) : 0;
  sep.series_terms = terms;
  sep.lhs = Enclosure(lhs_exact);
  sep.rhs = rhs_enclosure(params, c_exponent, s_index, terms == 0 ? 1 : terms, prec);

  if (k < n) {
    // Rationality route: lhs and S_{n-k}(q) are exact rationals while
    // c^((k-1)/(n-1)) is certified irrational, so the sides cannot be equal.
    bool certified = false;
    for (long kk : params.power_certified) certified |= (kk == k - 1);
    if (!certified)
      throw internal_invariant_violation("missing power certificate for k-1");
    sep.verdict = Verdict::separated_exact;
    sep.method = "rationality: lhs rational, rhs = irrational * nonzero rational";
    sep.gap = enc_gap(sep.lhs, sep.rhs);  // numeric gap rides along when visible
    return sep;
  }

  // k > n: validated interval separation.
  if (enc_disjoint(sep.lhs, sep.rhs)) {
    sep.verdict = Verdict::separated_by;
    sep.gap = enc_gap(sep.lhs, sep.rhs);
    sep.method = "interval separation of the two closed forms";
  } else {
    sep.verdict = Verdict::inconclusive;
    sep.width = enc_hull(sep.lhs, sep.rhs).width();
    sep.method = "enclosures overlap; retry with higher precision or more terms";
  }

  // Spine-threaded crosscheck for k >= n+2: the identity at exponent k would
  // force gamma_{k-n-2}^(2k) = gamma_{k-n-2}^2...gamma_0^2 * c^(n/(n-1)) *
  // S_{-1}(q). Both routes must agree on separation.
  if (k >= n + 2) {
    long top = k - n - 2;
    if (top + 1 > gamma.count())
      throw invalid_parameter("gamma sequence too short for the crosscheck");
    MonomialScalar lhs_m = mono_pow_int(gamma.gamma(top), 2 * k);
    MonomialScalar prod = MonomialScalar::one(gamma.basis);
    for (long j = 0; j <= top; ++j) prod = mono_mul(prod, mono_pow_int(gamma.gamma(j), 2));
    std::vector<Rat> ce(params.basis->size(), Rat(0));
    ce[0] = Rat(n, n - 1);
    prod = mono_mul(prod, MonomialScalar(Rat(1), params.basis, std::move(ce)));
    // Compare lhs_m / prod against S_{-1}(q).
    Enclosure lhs2 = mono_enclose(mono_div(lhs_m, prod), prec);
    Enclosure rhs2 = s_neg(1, params.q, terms == 0 ? series_terms_for_precision(params.q, prec) : terms, prec);
    Verdict cv = enc_disjoint(lhs2, rhs2) ? Verdict::separated_by : Verdict::inconclusive;
    sep.crosscheck = cv;
    if (verdict_is_separated(sep.verdict) != verdict_is_separated(cv) &&
        cv != Verdict::inconclusive)
      throw internal_invariant_violation("refutation routes disagree at k = " +
                                         std::to_string(k));
  }
  return sep;
}

SweepReport sweep(const CounterexampleParams& params, long kmax, int prec) {
  const long n = params.n;
  if (kmax == 0) kmax = n + 6;
  if (kmax < n + 1) throw invalid_parameter("kmax must be at least n+1");

  SweepReport rep;
  rep.n = n;
  rep.p = params.p;
  rep.kmax = kmax;
  rep.precision = prec;

  long gamma_count = std::max<long>(kmax + 2, n + 2);
  GammaSequence gamma = gamma_solve(params, gamma_count, prec);
  rep.equality = verify_equality_at_n(params, gamma);

  for (long k = 2; k <= kmax; ++k) {
    SweepRow row;
    row.k = k;
    if (k == n) {
      row.verdict = Verdict::equal_exact;
      row.gap = Rat(0);
      row.width = Rat(0);
      row.method = "exact certificate (recurrence, boundary system, series identity)";
    } else {
      Separation sep = refute_equality_at_k(params, gamma, k, prec);
      row.verdict = sep.verdict;
      row.gap = sep.gap;
      row.width = sep.width;
      row.method = sep.method;
      row.series_terms = sep.series_terms;
      if (!verdict_is_separated(sep.verdict)) rep.all_conclusive = false;
      if (verdict_is_equal(sep.verdict)) rep.equality_only_at_n = false;
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace shiftlab
