#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag {

/// The radius-R ball around the identity in the 1-skeleton of the universal
/// cover of the Salvetti complex, with its squares and the hyperplane classes
/// generated by square-opposite edges inside the ball.
class CubeBall {
 public:
  struct Edge {
    std::size_t from;
    std::size_t to;  // from * label
    VertexId label;
  };
  struct Square {
    std::size_t corner;
    VertexId first;
    VertexId second;
    std::size_t edges[4];  // (g,gv), (g,gw), (gv,gvw), (gw,gwv)
  };

  const DefiningGraph& graph() const { return graph_; }
  std::size_t radius() const { return radius_; }

  /// Reduced normal forms, in breadth-first order (identity first).
  const std::vector<Word>& vertices() const { return vertices_; }
  const Word& vertex(std::size_t i) const { return vertices_[i]; }
  std::optional<std::size_t> find(const Word& reduced) const;
  /// Index of the vertex representing w (reduced first); nullopt when outside.
  std::optional<std::size_t> locate(const Word& w) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Square>& squares() const { return squares_; }
  const std::vector<std::vector<std::size_t>>& adjacency() const { return adjacency_; }
  /// Hyperplane class of each edge, numbered in order of first edge.
  const std::vector<std::size_t>& hyperplane_of_edge() const { return hyperplane_of_edge_; }
  std::size_t hyperplane_count() const { return hyperplane_count_; }

  /// Exact combinatorial distance: the length of the reduced form of x^{-1} y.
  std::size_t distance(std::size_t i, std::size_t j) const;
  std::size_t norm(std::size_t i) const { return vertices_[i].size(); }

  /// Vertices on some geodesic from i to j. `clipped` is set when part of the
  /// interval could lie outside the ball.
  std::vector<std::size_t> interval(std::size_t i, std::size_t j, bool* clipped = nullptr) const;

 private:
  friend CubeBall build_ball(const DefiningGraph& g, std::size_t radius, std::size_t cap);

  DefiningGraph graph_;
  std::size_t radius_ = 0;
  std::vector<Word> vertices_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
  std::vector<Edge> edges_;
  std::vector<Square> squares_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::size_t> hyperplane_of_edge_;
  std::size_t hyperplane_count_ = 0;
};

/// Throws CapExceeded when the ball would exceed `cap` vertices.
CubeBall build_ball(const DefiningGraph& g, std::size_t radius, std::size_t cap = 2000000);

/// Throws CapExceeded when an interval between the arguments may leave the
/// ball, and InvalidArgument when an argument is outside it.
Word median(const CubeBall& ball, const Word& x, const Word& y, const Word& z);

/// Ball vertices x with d(x, g x) equal to the translation length of g.
std::vector<std::size_t> minset(const CubeBall& ball, const Word& g);

struct ConvexityReport {
  bool convex = true;
  bool boundary_clipped = false;
  /// A pair whose interval leaves the set, when not convex.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Interval closure test over all pairs of `set`.
ConvexityReport is_convex(const CubeBall& ball, const std::vector<std::size_t>& set);

struct MinsetDistance {
  std::size_t distance = 0;
  /// Translation length of g h; the bound is half of it.
  std::size_t twice_bound = 0;
  bool ok = false;
  bool empty_minset = false;
};

MinsetDistance minset_distance_check(const CubeBall& ball, const Word& g, const Word& h);

struct DisplacementWitness {
  std::optional<std::size_t> vertex;
  /// 2M = 2 max l(a_i) + n max_{i<j} l(a_i a_j) + 3n, with n the dimension.
  std::size_t twice_bound = 0;
  std::vector<std::size_t> displacements;
};

/// Scans the ball in breadth-first order for x with d(x, a_i x) <= M for all i.
DisplacementWitness bounded_displacement_witness(const CubeBall& ball, const std::vector<Word>& elements);

struct HullReport {
  bool ok = true;
  bool boundary_clipped = false;
  std::size_t hull_size = 0;
  /// Largest distance from the hull to C, against the bound n * r.
  std::size_t max_distance = 0;
  std::size_t bound = 0;
};

/// Checks that the interval-closure hull of the r-neighborhood of C lies within
/// distance n r of C, n being the dimension of the graph.
HullReport hull_neighborhood_check(const CubeBall& ball, const std::vector<std::size_t>& convex_set,
                                   std::size_t r);

struct ProjectionReport {
  bool ok = false;
  bool boundary_clipped = false;
  bool empty_minset = false;
  std::size_t projection = 0;
  std::size_t to_minset = 0;      // d(x, p)
  std::size_t translation = 0;    // d(p, g p)
  std::size_t displacement = 0;   // d(x, g x)
};

/// With p the nearest point of Min(g) to x, checks d(x,p) + d(p,gp) + d(gp,gx) = d(x,gx).
ProjectionReport geodesic_through_projection_check(const CubeBall& ball, const Word& g, const Word& x);

}  // namespace raag
