#ifndef SHIFTLAB_BILATERAL_HPP
#define SHIFTLAB_BILATERAL_HPP

#include "shiftlab/polyz.hpp"
#include "shiftlab/scalar.hpp"

#include <string>
#include <vector>

namespace shiftlab {

/// Finite window of a two-sided weight sequence, indexed offset..offset+len-1.
/// Weights are either exact rationals, or exact rationals a_n standing for
/// exp(a_n) (so products and powers become exact affine arithmetic on the
/// exponents).
struct BilateralWindow {
  enum class Kind { values, log_values };
  Kind kind = Kind::values;
  long offset = 0;
  std::vector<Rat> data;

  long size() const { return static_cast<long>(data.size()); }
  long lo() const { return offset; }
  long hi() const { return offset + size() - 1; }
  const Rat& at(long n) const;

  static BilateralWindow constant(const Rat& weight, long lo, long hi);
  /// exp((-2)^n) over [lo, hi], carried as exact exponents.
  static BilateralWindow exp_doubling(long lo, long hi);
  /// ratio^n over [lo, hi] as exact rational values (ratio > 0).
  static BilateralWindow geometric(const Rat& ratio, long lo, long hi);
};

struct W11Row {
  long n;
  Verdict verdict;
  Rat gap;  // |lhs - rhs| in value or exponent scale
};

/// Per-start verdicts for lambda_n^k = lambda_n ... lambda_{n+k-1} over the
/// window; exact in both weight representations.
struct W11Report {
  long k = 0;
  std::vector<W11Row> rows;
  bool all_equal = true;
  bool log_scale = false;
};

W11Report w11_check(const BilateralWindow& win, long k);

/// p(z) = k z^k - (z^{k-1} + ... + 1) and q(z) = (z-1) p(z), with certified
/// root boxes: roots[0] is the exact root 1, every other root has a disjoint
/// disk certified strictly inside the unit disk, and gcd(q, q') proves all
/// roots simple.
struct CharSystem {
  long k = 0;
  PolyZ p_poly, q_poly;
  std::vector<CEnclosure> roots;
  std::vector<Enclosure> root_moduli;  // parallel to roots
  Enclosure max_non1_modulus;          // [0,0] for k == 1
  bool identity_factored = false;      // q == (z-1) p exactly
  bool unit_disk_certified = false;
  bool simplicity_certified = false;
  long shared_root_power = 0;          // multiplicity of (z-1) in gcd(q, q')
};

CharSystem char_system(long k, int prec = default_precision);

struct VandermondeSolution {
  std::vector<CEnclosure> coefficients;
  CEnclosure det;
};

/// Solves sum_j w_j z_j^r = b_r (r = 0..k-1) by interval Gaussian
/// elimination; throws precision_exhausted when a pivot box reaches zero.
VandermondeSolution vandermonde_solve(const std::vector<CEnclosure>& nodes,
                                      const std::vector<Rat>& initial,
                                      int prec = default_precision);

/// sum_j A_j z_j^n.
CEnclosure vandermonde_reconstruct(const VandermondeSolution& sol,
                                   const std::vector<CEnclosure>& nodes,
                                   unsigned long n, int prec = default_precision);

/// Exact orbit of k b_{n+k} = b_n + ... + b_{n+k-1}.
std::vector<Rat> recurrence_orbit(long k, const std::vector<Rat>& initial,
                                  unsigned long length);

/// Runs the contracting mean iteration b_t = (b_{t-1} + ... + b_{t-kappa})/kappa
/// in exact rationals and compares the observed decay of successive
/// differences with the certified spectral bound from char_system(kappa).
struct ContractionReport {
  long mean_order = 0;
  unsigned long steps = 0;
  bool constant_seed = false;
  std::vector<Rat> diffs;      // |b_{t+1} - b_t|, exact
  double observed_ratio = 0;   // least-squares decay estimate
  Enclosure certified_rho;     // max non-1 root modulus of char_system(kappa)
  double forward_growth_factor = 0;  // growth of the expanding direction
};

ContractionReport backward_contraction_experiment(long mean_order,
                                                  const std::vector<Rat>& seed,
                                                  unsigned long steps,
                                                  int prec = default_precision);

enum class GrowthFlag { none_observed, geometric, superexponential, identity_driven };

std::string growth_flag_str(GrowthFlag g);

struct Classification {
  long k_max = 0;
  std::vector<W11Report> per_k;  // k' = 2..k_max
  bool identity_holds_some_k = false;
  long identity_k = 0;  // smallest k' with all rows equal, 0 if none
  bool constant_weights = false;
  Rat sup_value;     // sup of weights (values kind) or of exponents (log kind)
  bool sup_is_log = false;
  GrowthFlag growth = GrowthFlag::none_observed;
  std::string verdict;
};

/// Window-evidence classification in the spirit of the bounded-shift
/// rigidity theorem. When the identity holds exactly on a non-constant
/// window, divergence of the induced weight recurrence is certified by exact
/// forward extension; (identity && no growth && non-constant) is therefore
/// impossible and raises internal_invariant_violation if ever observed.
Classification classify_shift(const BilateralWindow& win, long k);

}  // namespace shiftlab

#endif
