#include "raag/graph.hpp"

#include <algorithm>

#include "raag/error.hpp"

namespace raag {

LetterSet inverted(LetterSet s) {
  constexpr std::uint64_t kEven = 0x5555555555555555ULL;
  const std::uint64_t b = s.bits();
  return LetterSet(((b & kEven) << 1U) | ((b >> 1U) & kEven));
}

LetterSet letters_over(VertexSet vs) {
  std::uint64_t bits = 0;
  vs.for_each([&](VertexId v) { bits |= std::uint64_t{3} << (2 * v); });
  return LetterSet(bits);
}

VertexSet vertices_of(LetterSet s) {
  VertexSet out;
  s.for_each([&](Letter x) { out.insert(x.vertex()); });
  return out;
}

DefiningGraph::DefiningGraph(std::vector<std::string> names,
                             const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(names)) {
  if (names_.size() > kMaxVertices) {
    throw InvalidArgument("graph has " + std::to_string(names_.size()) +
                          " vertices; at most " + std::to_string(kMaxVertices) + " are supported");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InvalidArgument("empty vertex name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw InvalidArgument("duplicate vertex name '" + names_[i] + "'");
    }
  }
  neighbors_.assign(names_.size(), VertexSet{});
  for (const auto& [a, b] : edges) {
    const VertexId u = index_of(a);
    const VertexId v = index_of(b);
    if (u == v) throw InvalidArgument("self-edge at vertex '" + a + "'");
    neighbors_[u].insert(v);
    neighbors_[v].insert(u);
  }
}

std::optional<VertexId> DefiningGraph::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<VertexId>(i);
  }
  return std::nullopt;
}

VertexId DefiningGraph::index_of(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw InvalidArgument("unknown vertex '" + std::string(name) + "'");
}

VertexSet DefiningGraph::all_vertices() const {
  if (names_.size() == 32) return VertexSet(~std::uint32_t{0});
  return VertexSet((std::uint32_t{1} << names_.size()) - 1U);
}

LetterSet DefiningGraph::link(Letter x) const {
  return letters_over(neighbors_.at(x.vertex()));
}

bool DefiningGraph::is_nontrivial_join(VertexSet support) const {
  if (support.size() < 2) return false;
  // Flood fill in the complement graph restricted to the support.
  VertexSet seen;
  seen.insert(support.front());
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](VertexId v) {
      next |= (support - neighbors_[v]) - seen;
    });
    seen |= next;
    frontier = next;
  }
  return seen != support;
}

VertexSet DefiningGraph::center_vertices() const {
  VertexSet out;
  const VertexSet all = all_vertices();
  for (VertexId v = 0; v < names_.size(); ++v) {
    if (star(v) == all) out.insert(v);
  }
  return out;
}

namespace {

std::size_t max_clique(const std::vector<VertexSet>& nbr, VertexSet candidates, std::size_t size) {
  if (candidates.empty()) return size;
  std::size_t best = size;
  while (!candidates.empty()) {
    if (size + candidates.size() <= best) break;
    const VertexId v = candidates.front();
    candidates.erase(v);
    best = std::max(best, max_clique(nbr, candidates & nbr[v], size + 1));
  }
  return best;
}

}  // namespace

std::size_t DefiningGraph::dimension() const {
  return max_clique(neighbors_, all_vertices(), 0);
}

std::vector<std::pair<VertexId, VertexId>> DefiningGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < names_.size(); ++u) {
    neighbors_[u].for_each([&](VertexId v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

std::string DefiningGraph::letter_name(Letter x) const {
  std::string out = names_.at(x.vertex());
  if (x.is_inverse()) out += "^-1";
  return out;
}

std::size_t DefiningGraph::fingerprint() const {
  std::size_t h = 1469598103934665603ULL;
  auto mix = [&h](std::size_t x) {
    h ^= x;
    h *= 1099511628211ULL;
  };
  for (const auto& name : names_) {
    for (char c : name) mix(static_cast<unsigned char>(c));
    mix(0x100);
  }
  for (VertexSet nbr : neighbors_) mix(nbr.bits());
  return h;
}

}  // namespace raag
