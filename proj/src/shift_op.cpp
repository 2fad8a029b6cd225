#include "shiftlab/shift_op.hpp"

namespace shiftlab {

Scalar local_square_sum(const FiniteTree& t, const WeightAssignment& w,
                        const Vertex& u, const TailProvider* tail, int prec) {
  if (!t.contains(u)) throw invalid_parameter("vertex outside truncation: " + u.name());
  if (u.is_branching_vertex()) {
    if (!tail)
      throw missing_tail_error("branching-vertex sum needs a fan tail certificate");
    Scalar sum = Rat(0);
    for (long k = 1; k <= t.branch_count(); ++k)
      sum = scalar_add(sum, w.alpha_sq(k), prec);
    return scalar_add(sum, tail->fan_tail(0, t.branch_count(), prec), prec);
  }
  Scalar sum = Rat(0);
  for (const auto& v : t.children(u)) sum = scalar_add(sum, w.weight_sq(v), prec);
  return sum;
}

namespace {

// Descends r generations from u, multiplying squared weights along every
// path. Missing vertices raise truncation_insufficient_error unless they sit
// past the branching fan and a tail certificate covers them.
Scalar descend(const FiniteTree& t, const WeightAssignment& w, const Vertex& u,
               long r, const TailProvider* tail, int prec) {
  if (r == 0) return Rat(1);
  if (u.is_branching_vertex()) {
    if (!tail)
      throw missing_tail_error("descending through the branching vertex needs a fan tail");
    Scalar sum = Rat(0);
    for (long k = 1; k <= t.branch_count(); ++k) {
      Vertex child = Vertex::branch(k, 1);
      if (!t.contains(child)) throw truncation_insufficient_error(child);
      Scalar below = descend(t, w, child, r - 1, tail, prec);
      sum = scalar_add(sum, scalar_mul(w.alpha_sq(k), below, prec), prec);
    }
    // Branches k > branch_count are single chains weighted beta_k from depth
    // 2 on, so their contribution is exactly the depth-(r-1) fan tail.
    return scalar_add(sum, tail->fan_tail(r - 1, t.branch_count(), prec), prec);
  }
  Vertex child = u.is_spine() ? Vertex::spine(u.i - 1) : Vertex::branch(u.i, u.j + 1);
  if (!t.contains(child)) throw truncation_insufficient_error(child);
  return scalar_mul(w.weight_sq(child), descend(t, w, child, r - 1, tail, prec), prec);
}

}  // namespace

Scalar iterated_norm_sq(const FiniteTree& t, const WeightAssignment& w,
                        const Vertex& u, long m, const TailProvider* tail, int prec) {
  if (m < 1) throw invalid_parameter("iterated norm needs a positive exponent");
  if (!t.contains(u)) throw invalid_parameter("vertex outside truncation: " + u.name());
  return descend(t, w, u, m, tail, prec);
}

ComparisonReport js_condition(const FiniteTree& t, const WeightAssignment& w,
                              const Vertex& u, long m, const TailProvider* tail,
                              int prec) {
  Scalar lhs = scalar_pow_int(local_square_sum(t, w, u, tail, prec), m, prec);
  Scalar rhs = iterated_norm_sq(t, w, u, m, tail, prec);
  return scalar_compare(lhs, rhs, prec);
}

Scalar operator_norm_sq_sup(const FiniteTree& t, const WeightAssignment& w,
                            const TailProvider* tail, int prec) {
  if (w.beta_sq_sup_candidates.empty() || w.gamma_sq_sup_candidates.empty())
    throw missing_tail_error(
        "operator norm over the infinite tree needs certified sup candidates "
        "for the beta and gamma families");
  std::vector<Scalar> cands;
  cands.push_back(local_square_sum(t, w, Vertex::spine(0), tail, prec));
  for (const auto& s : w.beta_sq_sup_candidates) cands.push_back(s);
  for (const auto& s : w.gamma_sq_sup_candidates) cands.push_back(s);
  return scalar_sup(cands, prec);
}

Enclosure operator_norm_bound(const FiniteTree& t, const WeightAssignment& w,
                              const TailProvider* tail, int prec) {
  Scalar sup = operator_norm_sq_sup(t, w, tail, prec);
  return enc_sqrt(scalar_enclose(sup, prec), prec);
}

}  // namespace shiftlab
