#ifndef SHIFTLAB_ORACLE_HPP
#define SHIFTLAB_ORACLE_HPP

#include "shiftlab/weights.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace shiftlab {

/// Exact sum of coeff * sqrt(radicand) terms over positive rationals.
/// Closed under multiplication; addition merges equal radicands and folds
/// perfect-square radicands into the coefficient. Mixed additions that a
/// tree matrix never produces simply keep separate terms.
struct SqrtSum {
  struct Term {
    Rat coeff;     // nonzero
    Rat radicand;  // positive; 1 for rational terms; never a perfect square
                   // other than 1
  };
  std::vector<Term> terms;  // sorted by radicand, merged

  static SqrtSum zero() { return {}; }
  static SqrtSum of_rat(const Rat& r);
  static SqrtSum sqrt_of(const Rat& radicand);  // sqrt(radicand), radicand >= 0

  bool is_zero() const { return terms.empty(); }
  bool is_rational() const;
  Rat as_rat() const;  // requires is_rational()
  Enclosure enclose(int prec) const;
  std::string str() const;
};

SqrtSum sqrt_add(const SqrtSum& a, const SqrtSum& b);
SqrtSum sqrt_mul(const SqrtSum& a, const SqrtSum& b);

/// Matrix entry for the oracle: exact where the squared weights are
/// rational, enclosure otherwise. Arithmetic promotes to enclosures the
/// moment an enclosure is involved.
using OracleScalar = std::variant<SqrtSum, Enclosure>;

OracleScalar oracle_add(const OracleScalar& a, const OracleScalar& b, int prec);
OracleScalar oracle_mul(const OracleScalar& a, const OracleScalar& b, int prec);
bool oracle_is_zero(const OracleScalar& a);
Enclosure oracle_enclose(const OracleScalar& a, int prec);

/// Column-major sparse matrix over vertex indices of a truncation.
struct SparseMatrix {
  long dim = 0;
  std::vector<std::map<long, OracleScalar>> cols;

  explicit SparseMatrix(long d = 0) : dim(d), cols(static_cast<std::size_t>(d)) {}
  void set(long row, long col, OracleScalar v);
  long nonzeros() const;
};

SparseMatrix sp_transpose(const SparseMatrix& a);
SparseMatrix sp_mul(const SparseMatrix& a, const SparseMatrix& b, int prec);

/// Matrix of the shift: entry (v, u) = weight(v) for v a child of u.
/// Entries are sqrt terms of the exact squared weights when those are
/// rational, enclosures otherwise.
SparseMatrix shift_matrix(const FiniteTree& t, const WeightAssignment& w,
                          int prec = default_precision);

struct OracleVertexRow {
  Vertex u;
  Enclosure lhs;         // (M^T M)^m diagonal, fan-tail corrected
  Enclosure rhs;         // (M^T)^m M^m diagonal, fan-tail corrected
  Verdict verdict;       // equal_within (overlap) or separated_by
  Rat gap;               // certified lower bound when separated
  Rat width;             // hull width when overlapping
  Enclosure closed_lhs;  // independent closed-path route, for concordance
  Enclosure closed_rhs;
  bool concordant = false;  // oracle and closed-path enclosures overlap
};

struct OracleReport {
  long m = 0;
  long spine_depth = 0, branch_count = 0, branch_length = 0;
  bool exact_entries = false;
  bool products_diagonal = false;
  std::vector<OracleVertexRow> rows;
  std::string tail_description;
  int precision = 0;
};

/// Independent verification route: builds the shift matrix on the
/// truncation, forms (M^T M)^m and (M^T)^m M^m by explicit sparse products,
/// asserts diagonality on the tail-extended interior set, corrects the
/// diagonals with the certified fan tails, and cross-checks each corrected
/// value against the closed-path computations.
OracleReport product_compare(const FiniteTree& t, const WeightAssignment& w, long m,
                             const TailProvider& oracle_tails,
                             const TailProvider& closed_form_tails,
                             int prec = default_precision);

/// Geometric-majorant fan tail for weight families with
/// alpha_k^2 = k^(n-1) q^(k-1) and beta_k^2 = c^(1/(n-1))/k: bounds
/// sum_{k>I} k^(n-1-j) q^(k-1) by its first term times an explicit geometric
/// series, independent of the closed-form series layer.
class MajorantFanTail final : public TailProvider {
 public:
  MajorantFanTail(long n, Rat q, Rat c);
  Scalar fan_tail(long beta_depth, long branch_count, int prec) const override;
  std::string describe() const override;

 private:
  long n_;
  Rat q_, c_;
};

}  // namespace shiftlab

#endif
