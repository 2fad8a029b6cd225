#include "shiftlab/tree.hpp"

#include <deque>
#include <set>

namespace shiftlab {

std::string Vertex::name() const {
  if (is_spine()) return "s" + std::to_string(-i);
  return "b" + std::to_string(i) + "." + std::to_string(j);
}

std::optional<Vertex> Vertex::parse(const std::string& name) {
  try {
    if (name.size() >= 2 && name[0] == 's') {
      long label = std::stol(name.substr(1));
      if (label > 0) return std::nullopt;
      return spine(-label);
    }
    if (name.size() >= 4 && name[0] == 'b') {
      auto dot = name.find('.');
      if (dot == std::string::npos) return std::nullopt;
      long bi = std::stol(name.substr(1, dot - 1));
      long bj = std::stol(name.substr(dot + 1));
      if (bi < 1 || bj < 1) return std::nullopt;
      return branch(bi, bj);
    }
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

Vertex parent_infinite(const Vertex& v) {
  if (v.is_spine()) return Vertex::spine(v.i + 1);
  if (v.j == 1) return Vertex::spine(0);
  return Vertex::branch(v.i, v.j - 1);
}

FiniteTree::FiniteTree(long spine_depth, long branch_count, long branch_length)
    : m_(spine_depth), i_(branch_count), j_(branch_length) {
  if (m_ < 1 || i_ < 1 || j_ < 1)
    throw invalid_parameter("truncation dimensions must be positive");
  order_.reserve(static_cast<std::size_t>(vertex_count()));
  for (long s = 0; s <= m_; ++s) order_.push_back(Vertex::spine(s));
  for (long b = 1; b <= i_; ++b)
    for (long d = 1; d <= j_; ++d) order_.push_back(Vertex::branch(b, d));
}

bool FiniteTree::contains(const Vertex& v) const {
  if (v.is_spine()) return v.i >= 0 && v.i <= m_;
  return v.i >= 1 && v.i <= i_ && v.j >= 1 && v.j <= j_;
}

long FiniteTree::index_of(const Vertex& v) const {
  if (!contains(v)) throw invalid_parameter("vertex outside truncation: " + v.name());
  if (v.is_spine()) return v.i;
  return (m_ + 1) + (v.i - 1) * j_ + (v.j - 1);
}

Vertex FiniteTree::vertex_at(long index) const {
  if (index < 0 || index >= vertex_count())
    throw invalid_parameter("vertex index out of range");
  return order_[static_cast<std::size_t>(index)];
}

std::optional<Vertex> FiniteTree::parent(const Vertex& v) const {
  if (!contains(v)) throw invalid_parameter("vertex outside truncation: " + v.name());
  if (v.is_spine() && v.i == m_) return std::nullopt;
  return parent_infinite(v);
}

std::vector<Vertex> FiniteTree::children(const Vertex& v) const {
  if (!contains(v)) throw invalid_parameter("vertex outside truncation: " + v.name());
  std::vector<Vertex> out;
  if (v.is_spine()) {
    if (v.i > 0) {
      out.push_back(Vertex::spine(v.i - 1));
    } else {
      out.reserve(static_cast<std::size_t>(i_));
      for (long b = 1; b <= i_; ++b) out.push_back(Vertex::branch(b, 1));
    }
  } else if (v.j < j_) {
    out.push_back(Vertex::branch(v.i, v.j + 1));
  }
  return out;
}

FiniteTree make_truncation(long spine_depth, long branch_count, long branch_length) {
  return FiniteTree(spine_depth, branch_count, branch_length);
}

namespace {

struct BallStatus {
  bool all_inside;    // every enumerated ball member lies in t
  bool fan_overflow;  // the ball reaches past the branching vertex, so it
                      // contains fan branches with index > branch_count
};

// BFS over the radius-ball of u in the infinite tree, checking membership
// in t. Fan children with index <= branch_count are enumerated and checked
// like any other vertex; the rest of the infinite fan is reported via
// fan_overflow. Stops at the first missing vertex.
BallStatus ball_status(const FiniteTree& t, const Vertex& u, long radius) {
  BallStatus st{t.contains(u), false};
  if (!st.all_inside) return st;
  std::set<Vertex> seen{u};
  std::deque<std::pair<Vertex, long>> queue{{u, 0}};
  while (!queue.empty() && st.all_inside) {
    auto [v, d] = queue.front();
    queue.pop_front();
    if (d == radius) continue;
    std::vector<Vertex> nbrs;
    nbrs.push_back(parent_infinite(v));
    if (v.is_spine()) {
      if (v.i > 0) {
        nbrs.push_back(Vertex::spine(v.i - 1));
      } else {
        st.fan_overflow = true;
        for (long b = 1; b <= t.branch_count(); ++b) nbrs.push_back(Vertex::branch(b, 1));
      }
    } else {
      nbrs.push_back(Vertex::branch(v.i, v.j + 1));
    }
    for (const auto& w : nbrs) {
      if (!seen.insert(w).second) continue;
      if (!t.contains(w)) {
        st.all_inside = false;
        break;
      }
      queue.emplace_back(w, d + 1);
    }
  }
  return st;
}

}  // namespace

std::vector<Vertex> interior_vertices(const FiniteTree& t, long radius) {
  if (radius < 1) throw invalid_parameter("radius must be >= 1");
  std::vector<Vertex> out;
  for (const auto& u : t.vertices()) {
    BallStatus st = ball_status(t, u, radius);
    if (st.all_inside && !st.fan_overflow) out.push_back(u);
  }
  return out;
}

std::vector<Vertex> interior_vertices_with_fan_tail(const FiniteTree& t, long radius) {
  if (radius < 1) throw invalid_parameter("radius must be >= 1");
  std::vector<Vertex> out;
  for (const auto& u : t.vertices()) {
    if (ball_status(t, u, radius).all_inside) out.push_back(u);
  }
  return out;
}

}  // namespace shiftlab
