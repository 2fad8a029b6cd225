#ifndef SHIFTLAB_COMPOSITION_HPP
#define SHIFTLAB_COMPOSITION_HPP

#include "shiftlab/weights.hpp"

#include <map>
#include <optional>
#include <vector>

namespace shiftlab {

/// Atomic measure on the truncation vertices realizing the shift as a
/// composition operator with the parent map: mass(v) = weight(v)^2 *
/// mass(parent(v)), anchored at mass(anchor) = 1. Masses are exact scalars.
struct MeasureSpace {
  Vertex anchor;
  std::map<Vertex, Scalar> mass;

  const Scalar& at(const Vertex& v) const;
};

MeasureSpace build_measure(const FiniteTree& t, const WeightAssignment& w,
                           const Vertex& anchor, int prec = default_precision);

/// Sparse matrix of the composition operator in the normalized point-mass
/// basis, stored squared: the entry at (child v, parent u) is
/// mass(v)/mass(u), which equals weight(v)^2 by construction.
struct CompositionMatrix {
  std::vector<std::tuple<Vertex, Vertex, Scalar>> entries_sq;  // (row, col, value)
};

CompositionMatrix composition_matrix(const MeasureSpace& ms, const FiniteTree& t,
                                     int prec = default_precision);

struct EquivalenceReport {
  bool equal = false;
  long entries_checked = 0;
  std::optional<std::pair<Vertex, Vertex>> first_mismatch;
};

/// Entrywise exact comparison of the composition matrix (squared entries)
/// against the shift's squared weights on the same truncation.
EquivalenceReport equivalence_check(const FiniteTree& t, const WeightAssignment& w,
                                    const MeasureSpace& ms,
                                    int prec = default_precision);

}  // namespace shiftlab

#endif
