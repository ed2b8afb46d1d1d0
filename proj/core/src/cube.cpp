#include "raag/cube.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_set>

#include "raag/error.hpp"

namespace raag {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::optional<std::size_t> CubeBall::find(const Word& reduced) const {
  auto it = index_.find(reduced);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> CubeBall::locate(const Word& w) const { return find(reduce(graph_, w)); }

std::size_t CubeBall::distance(std::size_t i, std::size_t j) const {
  return reduce(graph_, vertices_[i].inverse() * vertices_[j]).size();
}

std::vector<std::size_t> CubeBall::interval(std::size_t i, std::size_t j, bool* clipped) const {
  const std::size_t d = distance(i, j);
  if (clipped != nullptr && norm(i) + norm(j) + d > 2 * radius_) *clipped = true;
  // Walk from i towards j through neighbors that get one step closer to j.
  std::vector<std::size_t> out{i};
  std::vector<std::size_t> dist_to_j{d};
  std::unordered_set<std::size_t> seen{i};
  for (std::size_t at = 0; at < out.size(); ++at) {
    if (dist_to_j[at] == 0) continue;
    for (std::size_t q : adjacency_[out[at]]) {
      if (seen.count(q) != 0) continue;
      const std::size_t dq = distance(q, j);
      if (dq + 1 != dist_to_j[at]) continue;
      seen.insert(q);
      out.push_back(q);
      dist_to_j.push_back(dq);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CubeBall build_ball(const DefiningGraph& g, std::size_t radius, std::size_t cap) {
  CubeBall ball;
  ball.graph_ = g;
  ball.radius_ = radius;
  ball.vertices_.push_back(Word{});
  ball.index_.emplace(Word{}, 0);
  const auto alphabet = g.alphabet().to_vector();
  for (std::size_t at = 0; at < ball.vertices_.size(); ++at) {
    const Word cur = ball.vertices_[at];
    if (cur.size() == radius) continue;
    for (Letter x : alphabet) {
      Word next = reduce(g, cur * Word::of(x));
      if (next.size() != cur.size() + 1 || ball.index_.count(next) != 0) continue;
      if (ball.vertices_.size() >= cap) {
        throw CapExceeded("ball of radius " + std::to_string(radius) + " exceeds " +
                          std::to_string(cap) + " vertices");
      }
      ball.index_.emplace(next, ball.vertices_.size());
      ball.vertices_.push_back(std::move(next));
    }
  }

  const std::size_t n = g.vertex_count();
  std::map<std::pair<std::size_t, VertexId>, std::size_t> edge_at;
  ball.adjacency_.assign(ball.vertices_.size(), {});
  for (std::size_t i = 0; i < ball.vertices_.size(); ++i) {
    for (VertexId v = 0; v < n; ++v) {
      auto j = ball.locate(ball.vertices_[i] * Word::of(Letter::positive(v)));
      if (!j) continue;
      edge_at.emplace(std::make_pair(i, v), ball.edges_.size());
      ball.edges_.push_back({i, *j, v});
      ball.adjacency_[i].push_back(*j);
      ball.adjacency_[*j].push_back(i);
    }
  }
  for (auto& adj : ball.adjacency_) std::sort(adj.begin(), adj.end());

  UnionFind uf(ball.edges_.size());
  for (std::size_t i = 0; i < ball.vertices_.size(); ++i) {
    for (VertexId v = 0; v < n; ++v) {
      auto e1 = edge_at.find({i, v});
      if (e1 == edge_at.end()) continue;
      const std::size_t gv = ball.edges_[e1->second].to;
      for (VertexId w = v + 1; w < n; ++w) {
        if (!g.adjacent(v, w)) continue;
        auto e2 = edge_at.find({i, w});
        if (e2 == edge_at.end()) continue;
        const std::size_t gw = ball.edges_[e2->second].to;
        auto e3 = edge_at.find({gv, w});
        auto e4 = edge_at.find({gw, v});
        if (e3 == edge_at.end() || e4 == edge_at.end()) continue;
        ball.squares_.push_back({i, v, w, {e1->second, e2->second, e3->second, e4->second}});
        uf.unite(e1->second, e4->second);
        uf.unite(e2->second, e3->second);
      }
    }
  }
  std::map<std::size_t, std::size_t> numbering;
  ball.hyperplane_of_edge_.resize(ball.edges_.size());
  for (std::size_t e = 0; e < ball.edges_.size(); ++e) {
    const std::size_t root = uf.find(e);
    auto [it, inserted] = numbering.emplace(root, numbering.size());
    ball.hyperplane_of_edge_[e] = it->second;
  }
  ball.hyperplane_count_ = numbering.size();
  return ball;
}

namespace {

std::size_t require_vertex(const CubeBall& ball, const Word& w) {
  auto i = ball.locate(w);
  if (!i) throw InvalidArgument("vertex lies outside the ball");
  return *i;
}

}  // namespace

Word median(const CubeBall& ball, const Word& x, const Word& y, const Word& z) {
  const std::size_t a = require_vertex(ball, x);
  const std::size_t b = require_vertex(ball, y);
  const std::size_t c = require_vertex(ball, z);
  bool clipped = false;
  const auto ab = ball.interval(a, b, &clipped);
  ball.interval(b, c, &clipped);
  ball.interval(a, c, &clipped);
  if (clipped) throw CapExceeded("intervals between the arguments may leave the ball; raise the radius");
  const std::size_t dbc = ball.distance(b, c);
  const std::size_t dac = ball.distance(a, c);
  for (std::size_t p : ab) {
    if (ball.distance(b, p) + ball.distance(p, c) == dbc &&
        ball.distance(a, p) + ball.distance(p, c) == dac) {
      return ball.vertex(p);
    }
  }
  throw InvariantError("no median found inside the ball");
}

std::vector<std::size_t> minset(const CubeBall& ball, const Word& g) {
  const DefiningGraph& gr = ball.graph();
  const std::size_t len = translation_length(gr, g);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ball.vertices().size(); ++i) {
    const Word& x = ball.vertex(i);
    if (reduce(gr, x.inverse() * g * x).size() == len) out.push_back(i);
  }
  return out;
}

ConvexityReport is_convex(const CubeBall& ball, const std::vector<std::size_t>& set) {
  ConvexityReport report;
  std::vector<bool> member(ball.vertices().size(), false);
  for (std::size_t i : set) member[i] = true;
  for (std::size_t s = 0; s < set.size(); ++s) {
    for (std::size_t t = s + 1; t < set.size(); ++t) {
      for (std::size_t p : ball.interval(set[s], set[t], &report.boundary_clipped)) {
        if (!member[p]) {
          report.convex = false;
          report.witness = std::make_pair(set[s], set[t]);
          return report;
        }
      }
    }
  }
  return report;
}

MinsetDistance minset_distance_check(const CubeBall& ball, const Word& g, const Word& h) {
  MinsetDistance out;
  out.twice_bound = translation_length(ball.graph(), g * h);
  const auto mg = minset(ball, g);
  const auto mh = minset(ball, h);
  if (mg.empty() || mh.empty()) {
    out.empty_minset = true;
    return out;
  }
  std::size_t best = static_cast<std::size_t>(-1);
  std::vector<bool> in_h(ball.vertices().size(), false);
  for (std::size_t j : mh) in_h[j] = true;
  for (std::size_t i : mg) {
    if (in_h[i]) {
      best = 0;
      break;
    }
  }
  for (std::size_t i = 0; i < mg.size() && best > 0; ++i) {
    for (std::size_t j : mh) {
      const std::size_t lower = ball.norm(mg[i]) > ball.norm(j) ? ball.norm(mg[i]) - ball.norm(j)
                                                                 : ball.norm(j) - ball.norm(mg[i]);
      if (lower >= best) continue;
      best = std::min(best, ball.distance(mg[i], j));
    }
  }
  out.distance = best;
  out.ok = 2 * best <= out.twice_bound;
  return out;
}

DisplacementWitness bounded_displacement_witness(const CubeBall& ball, const std::vector<Word>& elements) {
  const DefiningGraph& g = ball.graph();
  DisplacementWitness out;
  std::size_t max_single = 0;
  std::size_t max_pair = 0;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    max_single = std::max(max_single, translation_length(g, elements[i]));
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      max_pair = std::max(max_pair, translation_length(g, elements[i] * elements[j]));
    }
  }
  const std::size_t n = g.dimension();
  out.twice_bound = 2 * max_single + n * max_pair + 3 * n;
  for (std::size_t v = 0; v < ball.vertices().size(); ++v) {
    const Word& x = ball.vertex(v);
    std::vector<std::size_t> disp;
    bool ok = true;
    for (const Word& a : elements) {
      disp.push_back(reduce(g, x.inverse() * a * x).size());
      if (2 * disp.back() > out.twice_bound) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.vertex = v;
      out.displacements = std::move(disp);
      return out;
    }
  }
  return out;
}

HullReport hull_neighborhood_check(const CubeBall& ball, const std::vector<std::size_t>& convex_set,
                                   std::size_t r) {
  HullReport out;
  const std::size_t total = ball.vertices().size();
  out.bound = ball.graph().dimension() * r;
  auto dist_to_c = [&](std::size_t p) {
    std::size_t best = static_cast<std::size_t>(-1);
    for (std::size_t c : convex_set) best = std::min(best, ball.distance(p, c));
    return best;
  };
  std::vector<bool> member(total, false);
  std::vector<std::size_t> hull;
  for (std::size_t p = 0; p < total; ++p) {
    if (dist_to_c(p) <= r) {
      member[p] = true;
      hull.push_back(p);
    }
  }
  for (std::size_t c : convex_set) {
    if (ball.norm(c) + r > ball.radius()) out.boundary_clipped = true;
  }
  std::size_t checked = 0;
  while (checked < hull.size()) {
    const std::size_t upto = hull.size();
    for (std::size_t s = checked; s < upto; ++s) {
      for (std::size_t t = 0; t < upto; ++t) {
        if (t == s) continue;
        for (std::size_t p : ball.interval(hull[s], hull[t], &out.boundary_clipped)) {
          if (!member[p]) {
            member[p] = true;
            hull.push_back(p);
          }
        }
      }
    }
    checked = upto;
  }
  out.hull_size = hull.size();
  for (std::size_t p : hull) out.max_distance = std::max(out.max_distance, dist_to_c(p));
  out.ok = out.max_distance <= out.bound;
  return out;
}

ProjectionReport geodesic_through_projection_check(const CubeBall& ball, const Word& g, const Word& x) {
  const DefiningGraph& gr = ball.graph();
  ProjectionReport out;
  const std::size_t xi = require_vertex(ball, x);
  const auto mg = minset(ball, g);
  if (mg.empty()) {
    out.empty_minset = true;
    return out;
  }
  std::size_t best = static_cast<std::size_t>(-1);
  for (std::size_t p : mg) {
    const std::size_t d = ball.distance(xi, p);
    if (d < best) {
      best = d;
      out.projection = p;
    }
  }
  out.to_minset = best;
  if (ball.norm(xi) + best > ball.radius()) out.boundary_clipped = true;
  const Word& p = ball.vertex(out.projection);
  const Word& xw = ball.vertex(xi);
  out.translation = reduce(gr, p.inverse() * g * p).size();
  out.displacement = reduce(gr, xw.inverse() * g * xw).size();
  out.ok = 2 * out.to_minset + out.translation == out.displacement;
  return out;
}

}  // namespace raag
