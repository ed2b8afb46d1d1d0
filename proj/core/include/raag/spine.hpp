#pragma once

#include <cstddef>
#include <vector>

#include "raag/mccool.hpp"
#include "raag/partition.hpp"

namespace raag {

/// A set of pairwise compatible partitions, as indices into `partitions`.
struct SimplexList {
  std::vector<WhiteheadPartition> partitions;
  std::vector<std::vector<std::size_t>> simplices;
};

/// All cliques of size 1..max_size in the compatibility graph, ordered by size
/// then lexicographically by index.
SimplexList enumerate_simplices(const DefiningGraph& g, std::size_t max_size);

struct MoveGraphNode {
  SalvettiState state;
  NormView norm;
  bool in_bound = true;
  /// The marking passed the stabilized-subgroup test (or it was inconclusive).
  bool in_sg = true;
};

struct MoveGraphEdge {
  std::size_t from;
  std::size_t to;
  BasedPartition partition;
};

struct MoveGraph {
  std::vector<MoveGraphNode> nodes;
  std::vector<MoveGraphEdge> edges;
  std::size_t out_of_bound_moves = 0;
  /// Connected components of the subgraph induced on in-bound nodes.
  std::size_t components = 0;
  bool capped = false;
};

/// Breadth-first search from the identity marking over the engine's allowed
/// Whitehead moves. Nodes whose head exceeds `bound + slack` componentwise are
/// not expanded; `in_bound` marks heads within `bound`. Markings are merged
/// when they define the same marked Salvetti.
MoveGraph move_graph(const McCoolEngine& engine, const std::vector<CyclicClass>& targets,
                     const std::vector<std::size_t>& bound, std::size_t slack = 0,
                     std::size_t node_cap = 5000);

struct ChangenormEntry {
  std::size_t before = 0;
  std::size_t after = 0;
  std::size_t crossings = 0;
  std::size_t base_letters = 0;
  bool ok = false;
};

/// For each pulled class w: l(W(w)) = l(w) + crossing_count(P, w) - (letters of
/// w over the basepoint generator).
std::vector<ChangenormEntry> verify_changenorm(const DefiningGraph& g, const std::vector<CyclicClass>& pulled,
                                               const BasedPartition& bp);

}  // namespace raag
