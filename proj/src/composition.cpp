#include "shiftlab/composition.hpp"

#include <deque>

namespace shiftlab {

const Scalar& MeasureSpace::at(const Vertex& v) const {
  auto it = mass.find(v);
  if (it == mass.end()) throw invalid_parameter("no mass for vertex " + v.name());
  return it->second;
}

MeasureSpace build_measure(const FiniteTree& t, const WeightAssignment& w,
                           const Vertex& anchor, int prec) {
  if (!t.contains(anchor)) throw invalid_parameter("anchor outside truncation");
  MeasureSpace ms;
  ms.anchor = anchor;
  ms.mass[anchor] = Rat(1);
  // Undirected BFS from the anchor; going down multiplies by the child's
  // squared weight, going up divides by the current vertex's squared weight.
  std::deque<Vertex> queue{anchor};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    const Scalar mu = ms.at(u);
    for (const auto& v : t.children(u)) {
      if (ms.mass.count(v)) continue;
      ms.mass[v] = scalar_mul(mu, w.weight_sq(v), prec);
      queue.push_back(v);
    }
    if (auto p = t.parent(u); p && !ms.mass.count(*p)) {
      ms.mass[*p] = scalar_div(mu, w.weight_sq(u), prec);
      queue.push_back(*p);
    }
  }
  return ms;
}

CompositionMatrix composition_matrix(const MeasureSpace& ms, const FiniteTree& t,
                                     int prec) {
  CompositionMatrix out;
  for (const auto& u : t.vertices()) {
    for (const auto& v : t.children(u)) {
      Scalar ratio = scalar_div(ms.at(v), ms.at(u), prec);
      out.entries_sq.emplace_back(v, u, std::move(ratio));
    }
  }
  return out;
}

EquivalenceReport equivalence_check(const FiniteTree& t, const WeightAssignment& w,
                                    const MeasureSpace& ms, int prec) {
  EquivalenceReport rep;
  CompositionMatrix cm = composition_matrix(ms, t, prec);
  rep.equal = true;
  for (const auto& [row, col, value] : cm.entries_sq) {
    ++rep.entries_checked;
    auto eq = scalar_eq_exact(value, w.weight_sq(row));
    if (!eq || !*eq) {
      rep.equal = false;
      if (!rep.first_mismatch) rep.first_mismatch = std::make_pair(row, col);
    }
  }
  return rep;
}

}  // namespace shiftlab
