#ifndef SHIFTLAB_WEIGHTS_HPP
#define SHIFTLAB_WEIGHTS_HPP

#include "shiftlab/scalar.hpp"
#include "shiftlab/tree.hpp"

#include <functional>
#include <string>
#include <vector>

namespace shiftlab {

struct missing_tail_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct truncation_insufficient_error : std::runtime_error {
  explicit truncation_insufficient_error(const Vertex& first_missing)
      : std::runtime_error("truncation too small: first missing vertex " +
                           first_missing.name()),
        missing(first_missing) {}
  Vertex missing;
};

/// Certified scalar covering sum_{k > branch_count} alpha_k^2 * (beta_k^2)^j,
/// the part of a branching-vertex sum the truncation drops at beta-depth j.
class TailProvider {
 public:
  virtual ~TailProvider() = default;
  virtual Scalar fan_tail(long beta_depth, long branch_count, int prec) const = 0;
  virtual std::string describe() const = 0;
};

/// Declares the branch fan complete: nothing beyond branch_count.
class ZeroFanTail final : public TailProvider {
 public:
  Scalar fan_tail(long, long, int) const override { return Rat(0); }
  std::string describe() const override { return "fan declared complete (zero tail)"; }
};

/// Weight system on the one-branching-vertex tree family, stored squared:
/// weight_sq(Branch(k,1)) = alpha_sq(k), weight_sq(Branch(k,j>=2)) = beta_sq(k),
/// weight_sq(Spine(i)) = gamma_sq(i). All weights strictly positive.
struct WeightAssignment {
  std::function<Scalar(long)> alpha_sq;
  std::function<Scalar(long)> beta_sq;
  std::function<Scalar(long)> gamma_sq;

  // Certified finite candidate sets whose maxima equal sup_k beta_sq(k) and
  // sup_i gamma_sq(i) over the whole infinite family; empty when unknown.
  std::vector<Scalar> beta_sq_sup_candidates;
  std::vector<Scalar> gamma_sq_sup_candidates;

  Scalar weight_sq(const Vertex& v) const;

  static WeightAssignment constant(const Rat& weight_sq_value);
};

}  // namespace shiftlab

#endif
