#include "raag/spine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "raag/error.hpp"

namespace raag {

SimplexList enumerate_simplices(const DefiningGraph& g, std::size_t max_size) {
  SimplexList out;
  for (auto& e : enumerate_partitions(g)) out.partitions.push_back(e.partition);
  const std::size_t n = out.partitions.size();
  std::vector<std::vector<bool>> compat(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      compat[i][j] = compat[j][i] = compatible(g, out.partitions[i], out.partitions[j]);
    }
  }
  std::vector<std::vector<std::vector<std::size_t>>> by_size(max_size + 1);
  std::vector<std::size_t> clique;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (!clique.empty()) by_size[clique.size()].push_back(clique);
    if (clique.size() == max_size) return;
    for (std::size_t k = from; k < n; ++k) {
      if (!std::all_of(clique.begin(), clique.end(), [&](std::size_t c) { return compat[c][k]; })) continue;
      clique.push_back(k);
      self(self, k + 1);
      clique.pop_back();
    }
  };
  extend(extend, 0);
  for (auto& level : by_size) {
    for (auto& s : level) out.simplices.push_back(std::move(s));
  }
  return out;
}

namespace {

bool within(const std::vector<std::size_t>& head, std::size_t offset,
            const std::vector<std::size_t>& bound, std::size_t slack) {
  for (std::size_t k = 0; k < bound.size(); ++k) {
    if (head[offset + k] > bound[k] + slack) return false;
  }
  return true;
}

}  // namespace

MoveGraph move_graph(const McCoolEngine& engine, const std::vector<CyclicClass>& targets,
                     const std::vector<std::size_t>& bound, std::size_t slack, std::size_t node_cap) {
  if (bound.size() != targets.size()) throw InvalidArgument("norm bound needs one entry per target");
  const DefiningGraph& g = engine.graph();
  const std::size_t offset = engine.family().fixed_classes.size();
  MoveGraph out;
  std::map<NormView, std::vector<std::size_t>> buckets;
  std::set<std::pair<std::size_t, std::size_t>> linked;

  auto add_node = [&](SalvettiState s, NormView n) {
    const bool in_bound = within(n.head, offset, bound, 0);
    const bool in_sg = preserves_standard_family(g, s.marking, engine.family().stabilized) != Tristate::no;
    buckets[n].push_back(out.nodes.size());
    out.nodes.push_back({std::move(s), std::move(n), in_bound, in_sg});
    return out.nodes.size() - 1;
  };

  SalvettiState start = engine.initial_state(targets);
  NormView start_norm = engine.norm(start);
  add_node(std::move(start), std::move(start_norm));
  for (std::size_t at = 0; at < out.nodes.size() && !out.capped; ++at) {
    if (!within(out.nodes[at].norm.head, offset, bound, slack)) continue;
    for (auto& move : engine.neighbor_moves(out.nodes[at].state)) {
      NormView n = engine.norm(move.successor);
      if (!within(n.head, offset, bound, slack)) {
        ++out.out_of_bound_moves;
        continue;
      }
      std::optional<std::size_t> same;
      for (std::size_t k : buckets[n]) {
        if (is_graph_perm_equivalent(g, out.nodes[k].state.marking, move.successor.marking)) {
          same = k;
          break;
        }
      }
      if (!same) {
        if (out.nodes.size() >= node_cap) {
          out.capped = true;
          break;
        }
        same = add_node(std::move(move.successor), std::move(n));
      }
      if (*same == at) continue;
      const auto key = std::minmax(at, *same);
      if (linked.insert(key).second) out.edges.push_back({at, *same, move.partition});
    }
  }

  std::vector<std::size_t> parent(out.nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : out.edges) {
    if (out.nodes[e.from].in_bound && out.nodes[e.to].in_bound) parent[find(e.from)] = find(e.to);
  }
  for (std::size_t i = 0; i < out.nodes.size(); ++i) {
    if (out.nodes[i].in_bound && find(i) == i) ++out.components;
  }
  return out;
}

std::vector<ChangenormEntry> verify_changenorm(const DefiningGraph& g, const std::vector<CyclicClass>& pulled,
                                               const BasedPartition& bp) {
  const Automorphism w = whitehead_automorphism(g, bp);
  std::vector<ChangenormEntry> out;
  for (const auto& c : pulled) {
    ChangenormEntry e;
    const Word core = cyclic_reduce(g, c.word());
    e.before = core.size();
    e.after = translation_length(g, apply(g, w, c.word()));
    e.crossings = crossing_count(g, bp.partition, core);
    e.base_letters = count_vertex(core, bp.base.vertex());
    e.ok = e.after + e.base_letters == e.before + e.crossings;
    out.push_back(e);
  }
  return out;
}

}  // namespace raag
