#ifndef SHIFTLAB_TREE_HPP
#define SHIFTLAB_TREE_HPP

#include "shiftlab/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace shiftlab {

/// Vertex of the rootless one-branching-vertex tree: Spine(i) is the vertex
/// -i on the trunk (Spine(0) is the branching vertex), Branch(i, j) is depth
/// j on branch i. Both branch coordinates start at 1.
struct Vertex {
  enum class Kind : std::uint8_t { spine, branch };
  Kind kind = Kind::spine;
  long i = 0;
  long j = 0;  // unused for spine vertices

  static Vertex spine(long i) { return Vertex{Kind::spine, i, 0}; }
  static Vertex branch(long i, long j) { return Vertex{Kind::branch, i, j}; }

  bool is_spine() const { return kind == Kind::spine; }
  bool is_branch() const { return kind == Kind::branch; }
  bool is_branching_vertex() const { return is_spine() && i == 0; }

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;

  /// "s0", "s-3", "b2.5" — the naming used in dumps.
  std::string name() const;
  static std::optional<Vertex> parse(const std::string& name);
};

/// Parent within the infinite tree (always defined).
Vertex parent_infinite(const Vertex& v);

/// Finite truncation: spine vertices 0..-M, branches 1..I of length J.
class FiniteTree {
 public:
  FiniteTree(long spine_depth, long branch_count, long branch_length);

  long spine_depth() const { return m_; }
  long branch_count() const { return i_; }
  long branch_length() const { return j_; }
  long vertex_count() const { return (m_ + 1) + i_ * j_; }

  bool contains(const Vertex& v) const;
  /// Deterministic order: spine by decreasing label (0, -1, ..., -M), then
  /// branches lexicographic by (i, j).
  long index_of(const Vertex& v) const;
  Vertex vertex_at(long index) const;
  const std::vector<Vertex>& vertices() const { return order_; }

  /// Parent inside the truncation; nullopt exactly for Spine(M).
  std::optional<Vertex> parent(const Vertex& v) const;
  std::vector<Vertex> children(const Vertex& v) const;

 private:
  long m_, i_, j_;
  std::vector<Vertex> order_;
};

FiniteTree make_truncation(long spine_depth, long branch_count, long branch_length);

/// Vertices whose full radius-ball in the infinite tree lies inside t. The
/// branching vertex's infinite fan never fits, so any vertex within
/// radius-1 of Spine(0) is excluded here; see interior_vertices_with_fan_tail.
std::vector<Vertex> interior_vertices(const FiniteTree& t, long radius);

/// Same, but vertices are admitted when the only missing ball members are
/// fan branches with index > branch_count (the part a branching-vertex tail
/// certificate covers).
std::vector<Vertex> interior_vertices_with_fan_tail(const FiniteTree& t, long radius);

}  // namespace shiftlab

#endif
