#ifndef SHIFTLAB_SHIFT_OP_HPP
#define SHIFTLAB_SHIFT_OP_HPP

#include "shiftlab/weights.hpp"

namespace shiftlab {

// Squared-norm convention throughout: every quantity here is a squared
// norm or a squared weight, so exact carriers never need square roots.

/// sum_{v in children(u)} weight(v)^2, over the infinite tree. At the
/// branching vertex this needs a tail certificate for the dropped part of
/// the fan; elsewhere the truncated child set is already complete.
Scalar local_square_sum(const FiniteTree& t, const WeightAssignment& w,
                        const Vertex& u, const TailProvider* tail,
                        int prec = default_precision);

/// ||S^m e_u||^2: the sum over descending paths of length m from u of the
/// product of squared edge weights.
Scalar iterated_norm_sq(const FiniteTree& t, const WeightAssignment& w,
                        const Vertex& u, long m, const TailProvider* tail,
                        int prec = default_precision);

/// Compares ||S e_u||^(2m) against ||S^m e_u||^2.
ComparisonReport js_condition(const FiniteTree& t, const WeightAssignment& w,
                              const Vertex& u, long m, const TailProvider* tail,
                              int prec = default_precision);

/// Enclosure of the operator norm sqrt(sup_u ||S e_u||^2) over the infinite
/// tree; needs the weight family's certified sup candidates and a fan tail.
Enclosure operator_norm_bound(const FiniteTree& t, const WeightAssignment& w,
                              const TailProvider* tail,
                              int prec = default_precision);

/// The squared sup itself, exact when a certifiably dominant exact candidate
/// exists (this is what reports print).
Scalar operator_norm_sq_sup(const FiniteTree& t, const WeightAssignment& w,
                            const TailProvider* tail,
                            int prec = default_precision);

}  // namespace shiftlab

#endif
