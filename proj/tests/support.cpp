#include "support.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <sstream>

namespace raag::testing {

DefiningGraph graph(const std::string& names, const std::string& edges) {
  std::vector<std::string> vs;
  std::istringstream in(names);
  for (std::string s; in >> s;) vs.push_back(s);
  std::vector<std::pair<std::string, std::string>> es;
  std::istringstream ein(edges);
  for (std::string s; ein >> s;) {
    const auto dash = s.find('-');
    es.emplace_back(s.substr(0, dash), s.substr(dash + 1));
  }
  return DefiningGraph(vs, es);
}

Word w(const DefiningGraph& g, const std::string& text) {
  Word out;
  std::istringstream in(text);
  for (std::string s; in >> s;) {
    const bool inv = s.size() > 3 && s.substr(s.size() - 3) == "^-1";
    if (inv) s.resize(s.size() - 3);
    out.push_back(Letter::make(g.index_of(s), inv));
  }
  return out;
}

namespace {
std::string vertex_names(std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ' ';
    out += static_cast<char>('a' + i);
  }
  return out;
}
std::string edge(std::size_t i, std::size_t j) {
  return std::string(1, static_cast<char>('a' + i)) + "-" + static_cast<char>('a' + j) + " ";
}
}  // namespace

DefiningGraph edgeless(std::size_t n) { return graph(vertex_names(n)); }

DefiningGraph path(std::size_t n) {
  std::string es;
  for (std::size_t i = 0; i + 1 < n; ++i) es += edge(i, i + 1);
  return graph(vertex_names(n), es);
}

DefiningGraph cycle(std::size_t n) {
  std::string es;
  for (std::size_t i = 0; i < n; ++i) es += edge(i, (i + 1) % n);
  return graph(vertex_names(n), es);
}

std::size_t uniform(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

Letter random_letter(const DefiningGraph& g, Rng& rng) {
  return Letter::from_code(static_cast<std::uint32_t>(uniform(rng, 2 * g.vertex_count())));
}

Word random_word(const DefiningGraph& g, Rng& rng, std::size_t max_length) {
  const std::size_t len = uniform(rng, max_length + 1);
  Word out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(random_letter(g, rng));
  return out;
}

Word random_freely_reduced(const DefiningGraph& g, Rng& rng, std::size_t length) {
  Word out;
  while (out.size() < length) {
    const Letter x = random_letter(g, rng);
    if (!out.empty() && out[out.size() - 1] == x.inverse()) continue;
    out.push_back(x);
  }
  return out;
}

Piling::Piling(const DefiningGraph& g) : g_(&g), piles_(g.vertex_count()) {}

void Piling::push(Letter x) {
  const VertexId v = x.vertex();
  auto& own = piles_[v];
  const bool cancel = !own.empty() && own.back() == static_cast<std::int16_t>(x.inverse().code());
  for (VertexId u = 0; u < piles_.size(); ++u) {
    if (u == v || g_->adjacent(u, v)) continue;
    if (cancel) {
      piles_[u].pop_back();
    } else {
      piles_[u].push_back(-1);
    }
  }
  if (cancel) {
    own.pop_back();
    --length_;
  } else {
    own.push_back(static_cast<std::int16_t>(x.code()));
    ++length_;
  }
}

VertexSet Piling::support() const {
  VertexSet out;
  for (const auto& p : piles_) {
    for (auto c : p) {
      if (c >= 0) out.insert(Letter::from_code(static_cast<std::uint32_t>(c)).vertex());
    }
  }
  return out;
}

std::string Piling::key() const {
  std::string out;
  for (const auto& p : piles_) {
    for (auto c : p) out.push_back(static_cast<char>(c + 2));
    out.push_back('\0');
  }
  return out;
}

std::string element_key(const DefiningGraph& g, const Word& w) {
  Piling p(g);
  p.push(w);
  return p.key();
}

std::size_t element_length(const DefiningGraph& g, const Word& w) {
  Piling p(g);
  p.push(w);
  return p.length();
}

bool same_element(const DefiningGraph& g, const Word& a, const Word& b) {
  return element_key(g, a) == element_key(g, b);
}

CayleyOracle::CayleyOracle(const DefiningGraph& g, std::size_t inner, std::size_t outer)
    : g_(&g), inner_(inner), outer_(outer) {
  std::vector<std::pair<Piling, Word>> frontier;
  frontier.emplace_back(Piling(g), Word{});
  ball_.emplace(frontier.front().first.key(), 0);
  words_.push_back(Word{});
  for (std::size_t r = 1; r <= inner; ++r) {
    std::vector<std::pair<Piling, Word>> next;
    for (const auto& [p, word] : frontier) {
      for (std::uint32_t c = 0; c < 2 * g.vertex_count(); ++c) {
        Piling q = p;
        q.push(Letter::from_code(c));
        if (!ball_.emplace(q.key(), r).second) continue;
        Word longer = word;
        longer.push_back(Letter::from_code(c));
        words_.push_back(longer);
        next.emplace_back(std::move(q), std::move(longer));
      }
    }
    frontier = std::move(next);
  }
}

std::size_t CayleyOracle::distance(const Word& target) const {
  Piling start(*g_);
  start.push(target);
  if (auto it = ball_.find(start.key()); it != ball_.end()) return it->second;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::set<std::string> seen{start.key()};
  std::vector<Piling> frontier{start};
  for (std::size_t k = 1; k <= outer_ && !frontier.empty(); ++k) {
    std::vector<Piling> next;
    for (const auto& p : frontier) {
      for (std::uint32_t c = 0; c < 2 * g_->vertex_count(); ++c) {
        Piling q = p;
        q.push(Letter::from_code(c));
        std::string key = q.key();
        if (!seen.insert(key).second) continue;
        if (auto it = ball_.find(key); it != ball_.end()) best = std::min(best, k + it->second);
        next.push_back(std::move(q));
      }
    }
    // The inner ball is exact, so the first level that meets it is optimal.
    if (best != std::numeric_limits<std::size_t>::max()) break;
    frontier = std::move(next);
  }
  return best;
}

std::size_t power_translation_length(const DefiningGraph& g, const Word& w) {
  return element_length(g, w * w) - element_length(g, w);
}

std::size_t clique_number(const DefiningGraph& g) {
  std::size_t best = 0;
  const std::size_t n = g.vertex_count();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool clique = true;
    for (VertexId u = 0; u < n && clique; ++u) {
      for (VertexId v = u + 1; v < n && clique; ++v) {
        if ((mask >> u & 1U) != 0 && (mask >> v & 1U) != 0 && !g.adjacent(u, v)) clique = false;
      }
    }
    if (clique) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
  }
  return best;
}

Word substitute(const std::vector<Word>& images, const Word& w) {
  Word out;
  for (Letter x : w) out.append(x.is_inverse() ? images[x.vertex()].inverse() : images[x.vertex()]);
  return out;
}

std::size_t CayleyOracle::sphere_count(std::size_t r) const {
  return static_cast<std::size_t>(
      std::count_if(ball_.begin(), ball_.end(), [&](const auto& kv) { return kv.second == r; }));
}

std::size_t min_conjugate_length(const DefiningGraph& g, const Word& w, std::size_t radius) {
  const CayleyOracle ball(g, radius, 0);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const Word& c : ball.words()) best = std::min(best, element_length(g, c * w * c.inverse()));
  return best;
}

bool conjugate_within(const DefiningGraph& g, const Word& a, const Word& b, std::size_t radius) {
  const CayleyOracle ball(g, radius, 0);
  const std::string target = element_key(g, b);
  return std::any_of(ball.words().begin(), ball.words().end(),
                     [&](const Word& c) { return element_key(g, c * a * c.inverse()) == target; });
}

Word free_cyclic_reduce(const Word& w) {
  std::vector<Letter> s;
  for (Letter x : w) {
    if (!s.empty() && s.back() == x.inverse()) {
      s.pop_back();
    } else {
      s.push_back(x);
    }
  }
  std::size_t lo = 0;
  std::size_t hi = s.size();
  while (hi - lo >= 2 && s[lo] == s[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(s.begin() + static_cast<long>(lo), s.begin() + static_cast<long>(hi)));
}

bool free_conjugate(const Word& a, const Word& b) {
  const Word x = free_cyclic_reduce(a);
  const Word y = free_cyclic_reduce(b);
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  for (std::size_t r = 0; r < x.size(); ++r) {
    bool match = true;
    for (std::size_t i = 0; i < x.size() && match; ++i) match = x[(i + r) % x.size()] == y[i];
    if (match) return true;
  }
  return false;
}

namespace {

LetterSet direct_link(const DefiningGraph& g, Letter x) {
  LetterSet out;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (u != x.vertex() && g.adjacent(u, x.vertex())) {
      out.insert(Letter::positive(u));
      out.insert(Letter::negative(u));
    }
  }
  return out;
}

std::vector<Letter> all_letters(const DefiningGraph& g) {
  std::vector<Letter> out;
  for (std::uint32_t c = 0; c < 2 * g.vertex_count(); ++c) out.push_back(Letter::from_code(c));
  return out;
}

std::vector<Letter> oracle_basepoints(const DefiningGraph& g, const OraclePartition& p) {
  std::vector<Letter> out;
  for (Letter b : all_letters(g)) {
    if (oracle_is_based(g, p.side_a, p.side_b, p.link, b) || oracle_is_based(g, p.side_b, p.side_a, p.link, b)) {
      out.push_back(b);
    }
  }
  return out;
}

}  // namespace

bool oracle_is_based(const DefiningGraph& g, LetterSet p, LetterSet q, LetterSet l, Letter b) {
  const auto letters = all_letters(g);
  for (Letter x : letters) {
    const int count = int(p.contains(x)) + int(q.contains(x)) + int(l.contains(x));
    if (count != 1) return false;
  }
  if (!p.contains(b) || !q.contains(b.inverse()) || l != direct_link(g, b)) return false;
  if (p.size() < 2 || q.size() < 2) return false;
  for (Letter x : letters) {
    if (p.contains(x) && q.contains(x.inverse())) {
      if (!direct_link(g, x).is_subset_of(l)) return false;
    }
  }
  for (Letter x : letters) {
    for (Letter y : letters) {
      if (!p.contains(x) || !q.contains(y) || y == x.inverse()) continue;
      const bool commute = x.vertex() == y.vertex() || g.adjacent(x.vertex(), y.vertex());
      if (commute) return false;
    }
  }
  return true;
}

OraclePartition to_oracle(LetterSet p, LetterSet q, LetterSet l) {
  // Lowest letter x with x and x^{-1} on different sides.
  for (std::uint32_t c = 0; c < 64; ++c) {
    const Letter x = Letter::from_code(c);
    if (p.contains(x) && q.contains(x.inverse())) return {p, q, l};
    if (q.contains(x) && p.contains(x.inverse())) return {q, p, l};
  }
  return {p, q, l};
}

std::vector<OraclePartition> oracle_partitions(const DefiningGraph& g) {
  const auto letters = all_letters(g);
  std::set<OraclePartition> found;
  std::size_t total = 1;
  for (std::size_t i = 0; i < letters.size(); ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    LetterSet part[3];
    std::size_t rest = code;
    for (Letter x : letters) {
      part[rest % 3].insert(x);
      rest /= 3;
    }
    for (Letter b : letters) {
      if (oracle_is_based(g, part[0], part[1], part[2], b)) {
        found.insert(to_oracle(part[0], part[1], part[2]));
        break;
      }
    }
  }
  return {found.begin(), found.end()};
}

bool oracle_compatible(const DefiningGraph& g, const OraclePartition& p, const OraclePartition& q) {
  for (Letter x : oracle_basepoints(g, p)) {
    for (Letter y : oracle_basepoints(g, q)) {
      if (x.vertex() != y.vertex() && g.adjacent(x.vertex(), y.vertex())) return true;
    }
  }
  const int empty = int((p.side_a & q.side_a).empty()) + int((p.side_a & q.side_b).empty()) +
                    int((p.side_b & q.side_a).empty()) + int((p.side_b & q.side_b).empty());
  return empty == 1;
}

std::vector<DefiningGraph> all_graphs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<DefiningGraph> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
    std::string es;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1U) es += edge(pairs[k].first, pairs[k].second);
    }
    out.push_back(graph(vertex_names(n), es));
  }
  return out;
}

bool oracle_conjugates_into(const DefiningGraph& g, const std::vector<Word>& images, VertexSet delta,
                            std::size_t radius) {
  const CayleyOracle ball(g, radius, 0);
  for (const Word& c : ball.words()) {
    bool all = true;
    delta.for_each([&](VertexId v) {
      if (!all) return;
      Piling p(g);
      p.push(c.inverse() * images[v] * c);
      all = p.support().is_subset_of(delta);
    });
    if (all) return true;
  }
  return false;
}

namespace {

bool conjugate_any(const DefiningGraph& g, const Word& a, const Word& b) {
  if (g.edges().empty()) return free_conjugate(a, b);
  return conjugacy_canonical(g, a) == conjugacy_canonical(g, b);
}

}  // namespace

std::size_t oracle_crossings(const DefiningGraph& g, LetterSet side, LetterSet link, const Word& target) {
  const std::size_t base = min_conjugate_length(g, target, 3);
  if (base == 0) return 0;
  const auto on_p = [&](Letter x) { return side.contains(x); };
  std::size_t best_total = std::numeric_limits<std::size_t>::max();
  std::size_t best_cross = 0;
  std::vector<Letter> u;
  auto consider = [&] {
    std::vector<Letter> kept;
    for (Letter x : u) {
      if (!link.contains(x)) kept.push_back(x);
    }
    std::size_t cross = 0;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      // Edge x runs from side(x^{-1}) to side(x).
      const Letter x = kept[i];
      const Letter y = kept[(i + 1) % kept.size()];
      if (on_p(x) != on_p(y.inverse())) ++cross;
    }
    const std::size_t total = u.size() + cross;
    if (total < best_total || (total == best_total && cross < best_cross)) {
      if (!conjugate_any(g, Word(u), target)) return;
      best_total = total;
      best_cross = cross;
    }
  };
  auto extend = [&](auto&& self, std::size_t length) -> void {
    if (u.size() == length) {
      if (u.front() != u.back().inverse()) consider();
      return;
    }
    for (std::uint32_t c = 0; c < 2 * g.vertex_count(); ++c) {
      const Letter x = Letter::from_code(c);
      if (!u.empty() && u.back() == x.inverse()) continue;
      u.push_back(x);
      self(self, length);
      u.pop_back();
    }
  };
  for (std::size_t len = base; len <= 2 * base && len < best_total; ++len) extend(extend, len);
  return best_cross;
}

}  // namespace raag::testing
