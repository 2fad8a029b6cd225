#include "shiftlab/weights.hpp"

namespace shiftlab {

Scalar WeightAssignment::weight_sq(const Vertex& v) const {
  if (v.is_branch()) return v.j == 1 ? alpha_sq(v.i) : beta_sq(v.i);
  return gamma_sq(v.i);
}

WeightAssignment WeightAssignment::constant(const Rat& w) {
  if (w <= 0) throw invalid_parameter("weights must be strictly positive");
  WeightAssignment out;
  out.alpha_sq = [w](long) { return Scalar(w); };
  out.beta_sq = [w](long) { return Scalar(w); };
  out.gamma_sq = [w](long) { return Scalar(w); };
  out.beta_sq_sup_candidates = {Scalar(w)};
  out.gamma_sq_sup_candidates = {Scalar(w)};
  return out;
}

}  // namespace shiftlab
