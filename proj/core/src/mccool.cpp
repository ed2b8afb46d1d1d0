#include "raag/mccool.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "raag/error.hpp"

namespace raag {

namespace {

Word permute_word(const SignedPermutation& perm, const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w) {
    const Letter y = perm[x.vertex()];
    out.push_back(x.is_inverse() ? y.inverse() : y);
  }
  return Word(std::move(out));
}

SignedPermutation inverse_permutation(const SignedPermutation& perm) {
  SignedPermutation inv(perm.size());
  for (VertexId v = 0; v < perm.size(); ++v) {
    inv[perm[v].vertex()] = Letter::make(v, perm[v].is_inverse());
  }
  return inv;
}

}  // namespace

std::vector<SignedPermutation> signed_graph_automorphisms(const DefiningGraph& g,
                                                          const std::vector<VertexSet>& preserved,
                                                          std::size_t cap) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<VertexId>> unsigned_perms;
  std::vector<VertexId> image(n);
  VertexSet used;
  auto extend = [&](auto&& self, VertexId v) -> void {
    if (v == n) {
      for (VertexSet delta : preserved) {
        VertexSet mapped;
        delta.for_each([&](VertexId u) { mapped.insert(image[u]); });
        if (mapped != delta) return;
      }
      unsigned_perms.push_back(image);
      if (unsigned_perms.size() << std::min<std::size_t>(n, 62) > cap) {
        throw CapExceeded("too many signed graph automorphisms (cap " + std::to_string(cap) + ")");
      }
      return;
    }
    for (VertexId c = 0; c < n; ++c) {
      if (used.contains(c)) continue;
      if (g.neighbors(v).size() != g.neighbors(c).size()) continue;
      bool ok = true;
      for (VertexId u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(image[u], c);
      if (!ok) continue;
      image[v] = c;
      used.insert(c);
      self(self, v + 1);
      used.erase(c);
    }
  };
  extend(extend, 0);

  std::vector<SignedPermutation> out;
  out.reserve(unsigned_perms.size() << n);
  for (const auto& p : unsigned_perms) {
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << n); ++signs) {
      SignedPermutation sp(n);
      for (VertexId v = 0; v < n; ++v) sp[v] = Letter::make(p[v], ((signs >> v) & 1U) != 0);
      out.push_back(std::move(sp));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CyclicClass> classes_up_to_length(const DefiningGraph& g, std::size_t max_length) {
  std::set<CyclicClass> found;
  const auto alphabet = g.alphabet().to_vector();
  std::vector<Letter> cur;
  auto extend = [&](auto&& self) -> void {
    if (!cur.empty()) {
      CyclicClass c = conjugacy_canonical(g, Word(cur));
      if (!c.trivial()) found.insert(std::move(c));
    }
    if (cur.size() == max_length) return;
    for (Letter x : alphabet) {
      if (!cur.empty() && cur.back() == x.inverse()) continue;
      cur.push_back(x);
      self(self);
      cur.pop_back();
    }
  };
  extend(extend);
  std::vector<CyclicClass> out(found.begin(), found.end());
  out.erase(std::remove_if(out.begin(), out.end(),
                           [&](const CyclicClass& c) { return c.length() > max_length; }),
            out.end());
  return out;
}

McCoolEngine::McCoolEngine(const DefiningGraph& g, ConstraintFamily family, EngineOptions options)
    : graph_(g), family_(std::move(family)), options_(options) {
  for (VertexSet delta : family_.stabilized) {
    if (!delta.is_subset_of(graph_.all_vertices())) {
      throw InvalidArgument("stabilized support contains an unknown vertex");
    }
  }
  for (auto& c : family_.fixed_classes) c = canonical(c.word());
  for (const BasedPartition& bp : enumerate_based(graph_)) {
    if (!relative_condition(graph_, bp, family_.stabilized)) continue;
    allowed_.push_back(bp);
    allowed_autos_.push_back(whitehead_automorphism(graph_, bp));
  }
  symmetries_ = signed_graph_automorphisms(graph_, family_.stabilized, options_.symmetry_cap);
  tail_classes_ = classes_up_to_length(graph_, family_.tail_max_length);
}

CyclicClass McCoolEngine::canonical(const Word& w) const {
  return conjugacy_canonical(graph_, w, options_.canonical_guard);
}

std::vector<CyclicClass> McCoolEngine::head_classes(const std::vector<CyclicClass>& targets) const {
  std::vector<CyclicClass> out = family_.fixed_classes;
  for (const auto& c : targets) out.push_back(canonical(c.word()));
  return out;
}

SalvettiState McCoolEngine::state_from_marking(const Automorphism& marking,
                                               const std::vector<CyclicClass>& targets) const {
  SalvettiState s{marking, {}};
  for (const auto& c : head_classes(targets)) {
    s.pulled.push_back(canonical(apply_inverse(graph_, marking, c.word())));
  }
  return s;
}

SalvettiState McCoolEngine::initial_state(const std::vector<CyclicClass>& targets) const {
  return state_from_marking(Automorphism::identity(graph_), targets);
}

std::vector<std::size_t> McCoolEngine::head_norm(const SalvettiState& s) const {
  std::vector<std::size_t> head;
  head.reserve(s.pulled.size());
  for (const auto& c : s.pulled) head.push_back(c.length());
  return head;
}

NormView McCoolEngine::norm(const SalvettiState& s) const {
  NormView n{head_norm(s), {}};
  for (const auto& c : tail_classes_) {
    n.tail.push_back(translation_length(graph_, apply_inverse(graph_, s.marking, c.word())));
  }
  return n;
}

std::vector<CyclicClass> McCoolEngine::apply_pulled(std::size_t move,
                                                    const std::vector<CyclicClass>& pulled) const {
  std::vector<CyclicClass> out;
  out.reserve(pulled.size());
  for (const auto& c : pulled) out.push_back(canonical(apply(graph_, allowed_autos_[move], c.word())));
  return out;
}

std::vector<Move> McCoolEngine::neighbor_moves(const SalvettiState& s) const {
  std::vector<Move> out;
  out.reserve(allowed_.size());
  for (std::size_t i = 0; i < allowed_.size(); ++i) {
    out.push_back({allowed_[i],
                   SalvettiState{compose(graph_, s.marking, allowed_autos_[i]), apply_pulled(i, s.pulled)}});
  }
  return out;
}

std::vector<Move> McCoolEngine::reductive_moves(const SalvettiState& s) const {
  const NormView here = norm(s);
  std::vector<Move> out;
  for (auto& m : neighbor_moves(s)) {
    if (norm(m.successor) < here) out.push_back(std::move(m));
  }
  return out;
}

namespace {

// Norm of a successor of the current state, with tail entries computed on demand.
class LazyNorm {
 public:
  LazyNorm(const DefiningGraph& g, const Automorphism* move, const std::vector<Word>* pulled_tail,
           std::vector<std::size_t> head)
      : g_(g), move_(move), pulled_tail_(pulled_tail), head_(std::move(head)) {}

  const std::vector<std::size_t>& head() const { return head_; }

  std::size_t tail(std::size_t j) {
    while (tail_.size() <= j) {
      const Word& w = (*pulled_tail_)[tail_.size()];
      tail_.push_back(translation_length(g_, move_ ? apply(g_, *move_, w) : w));
    }
    return tail_[j];
  }

  std::size_t tail_size() const { return pulled_tail_->size(); }

  std::weak_ordering compare(LazyNorm& other) {
    if (auto c = head_ <=> other.head_; c != 0) return c;
    for (std::size_t j = 0; j < tail_size(); ++j) {
      if (auto c = tail(j) <=> other.tail(j); c != 0) return c;
    }
    return std::weak_ordering::equivalent;
  }

 private:
  const DefiningGraph& g_;
  const Automorphism* move_;
  const std::vector<Word>* pulled_tail_;
  std::vector<std::size_t> head_;
  std::vector<std::size_t> tail_;
};

}  // namespace

MinimizeResult McCoolEngine::minimize(const SalvettiState& start) const {
  MinimizeResult result{start, start, {}, {head_norm(start)}};
  SalvettiState& cur = result.state;
  for (std::size_t step = 0;; ++step) {
    if (step >= options_.step_cap) {
      throw CapExceeded("minimization exceeded " + std::to_string(options_.step_cap) + " steps");
    }
    std::vector<Word> pulled_tail;
    pulled_tail.reserve(tail_classes_.size());
    for (const auto& c : tail_classes_) pulled_tail.push_back(apply_inverse(graph_, cur.marking, c.word()));
    LazyNorm here(graph_, nullptr, &pulled_tail, head_norm(cur));

    std::optional<std::size_t> best_index;
    std::optional<LazyNorm> best;
    for (std::size_t i = 0; i < allowed_.size(); ++i) {
      std::vector<std::size_t> head;
      head.reserve(cur.pulled.size());
      for (const auto& c : cur.pulled) {
        head.push_back(translation_length(graph_, apply(graph_, allowed_autos_[i], c.word())));
      }
      if (head > here.head()) continue;
      LazyNorm cand(graph_, &allowed_autos_[i], &pulled_tail, std::move(head));
      if (cand.compare(here) >= 0) continue;
      if (!best || cand.compare(*best) < 0) {
        best.emplace(std::move(cand));
        best_index = i;
      }
    }
    if (!best_index) break;
    const std::size_t i = *best_index;
    cur = SalvettiState{compose(graph_, cur.marking, allowed_autos_[i]), apply_pulled(i, cur.pulled)};
    result.trace.push_back(allowed_[i]);
    result.head_norms.push_back(head_norm(cur));
  }
  return result;
}

MinimizeResult McCoolEngine::minimize(const std::vector<CyclicClass>& targets) const {
  return minimize(initial_state(targets));
}

std::vector<CyclicClass> McCoolEngine::key_of(const std::vector<CyclicClass>& pulled) const {
  std::vector<CyclicClass> best;
  for (const auto& perm : symmetries_) {
    std::vector<CyclicClass> cand;
    cand.reserve(pulled.size());
    for (const auto& c : pulled) cand.push_back(canonical(permute_word(perm, c.word())));
    if (best.empty() || cand < best) best = std::move(cand);
  }
  return best;
}

// Breadth-first search over states whose head norm equals the start's, with
// states identified modulo the constraint-preserving signed graph permutations.
struct McCoolEngine::LevelSearch {
  struct Node {
    std::vector<CyclicClass> pulled;
    std::size_t parent;
    std::size_t move;
  };
  enum class Outcome { found, descent, exhausted, capped };

  Outcome outcome = Outcome::exhausted;
  std::vector<Node> nodes;
  std::size_t hit = 0;
  std::size_t descent_move = 0;

  static constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

  void run(const McCoolEngine& e, const SalvettiState& start,
           const std::optional<std::vector<CyclicClass>>& goal) {
    const auto head = e.head_norm(start);
    std::set<std::vector<CyclicClass>> seen;
    nodes.push_back({start.pulled, kRoot, 0});
    auto start_key = e.key_of(start.pulled);
    seen.insert(start_key);
    if (goal && start_key == *goal) {
      outcome = Outcome::found;
      hit = 0;
      return;
    }
    for (std::size_t at = 0; at < nodes.size(); ++at) {
      for (std::size_t i = 0; i < e.allowed_.size(); ++i) {
        std::vector<std::size_t> next_head;
        next_head.reserve(head.size());
        for (const auto& c : nodes[at].pulled) {
          next_head.push_back(translation_length(e.graph_, apply(e.graph_, e.allowed_autos_[i], c.word())));
        }
        if (next_head < head) {
          outcome = Outcome::descent;
          hit = at;
          descent_move = i;
          return;
        }
        if (next_head != head) continue;
        auto pulled = e.apply_pulled(i, nodes[at].pulled);
        auto key = e.key_of(pulled);
        if (!seen.insert(key).second) continue;
        nodes.push_back({std::move(pulled), at, i});
        if (goal && key == *goal) {
          outcome = Outcome::found;
          hit = nodes.size() - 1;
          return;
        }
        if (nodes.size() > e.options_.state_cap) {
          outcome = Outcome::capped;
          return;
        }
      }
    }
    outcome = Outcome::exhausted;
  }

  std::vector<std::size_t> path_to(std::size_t node) const {
    std::vector<std::size_t> moves;
    for (std::size_t at = node; nodes[at].parent != kRoot; at = nodes[at].parent) {
      moves.push_back(nodes[at].move);
    }
    std::reverse(moves.begin(), moves.end());
    return moves;
  }
};

EquivalenceResult McCoolEngine::equivalent(const std::vector<CyclicClass>& left,
                                           const std::vector<CyclicClass>& right) const {
  if (left.size() != right.size()) throw InvalidArgument("target lists differ in length");
  EquivalenceResult result;
  MinimizeResult a = minimize(left);
  MinimizeResult b = minimize(right);

  auto follow = [&](const SalvettiState& from, const std::vector<std::size_t>& moves) {
    SalvettiState s = from;
    for (std::size_t i : moves) {
      s = SalvettiState{compose(graph_, s.marking, allowed_autos_[i]), apply_pulled(i, s.pulled)};
    }
    return s;
  };

  for (;;) {
    const auto ha = head_norm(a.state);
    const auto hb = head_norm(b.state);
    result.left_min_head = ha;
    result.right_min_head = hb;
    const bool same = ha == hb;
    MinimizeResult& side = (same || ha > hb) ? a : b;
    LevelSearch search;
    std::optional<std::vector<CyclicClass>> goal;
    if (same) goal = key_of(b.state.pulled);
    search.run(*this, side.state, goal);
    result.level_states += search.nodes.size();

    if (search.outcome == LevelSearch::Outcome::descent) {
      auto moves = search.path_to(search.hit);
      moves.push_back(search.descent_move);
      MinimizeResult again = minimize(follow(side.state, moves));
      for (std::size_t i : moves) side.trace.push_back(allowed_[i]);
      side.trace.insert(side.trace.end(), again.trace.begin(), again.trace.end());
      side.head_norms.insert(side.head_norms.end(), again.head_norms.begin(), again.head_norms.end());
      side.state = std::move(again.state);
      continue;
    }
    if (search.outcome == LevelSearch::Outcome::capped) {
      result.verdict = Verdict::undecided;
      result.note = "level search reached the state cap of " + std::to_string(options_.state_cap);
      return result;
    }
    if (search.outcome == LevelSearch::Outcome::exhausted) {
      result.verdict = Verdict::inequivalent;
      result.note = same ? "minimal tuples lie in different level components"
                         : "minimal head norms differ";
      if (family_.tail_max_length > 0) result.note += " (norm window " + std::to_string(family_.tail_max_length) + ")";
      return result;
    }

    // Found: the reached tuple T is perm(pulled of b) for some symmetry perm.
    const SalvettiState reached = follow(a.state, search.path_to(search.hit));
    const SignedPermutation* match = nullptr;
    for (const auto& perm : symmetries_) {
      bool ok = true;
      for (std::size_t i = 0; i < reached.pulled.size() && ok; ++i) {
        ok = canonical(permute_word(perm, b.state.pulled[i].word())) == reached.pulled[i];
      }
      if (ok) {
        match = &perm;
        break;
      }
    }
    if (match == nullptr) throw InvariantError("matching level key without a matching symmetry");
    const Automorphism perm_inverse = make_graph_permutation(graph_, inverse_permutation(*match));
    Automorphism cert = compose(graph_, compose(graph_, b.state.marking, perm_inverse),
                                reached.marking.inverse(graph_));
    const auto heads_left = head_classes(left);
    const auto heads_right = head_classes(right);
    for (std::size_t i = 0; i < heads_left.size(); ++i) {
      if (canonical(apply(graph_, cert, heads_left[i].word())) != heads_right[i]) {
        throw InvariantError("certificate does not map the left tuple onto the right tuple");
      }
    }
    if (preserves_standard_family(graph_, cert, family_.stabilized) == Tristate::no) {
      throw InvariantError("certificate fails to preserve a stabilized subgroup");
    }
    result.verdict = Verdict::equivalent;
    result.certificate = std::move(cert);
    return result;
  }
}

std::vector<CyclicClass> expand_fixed_subgroup(const DefiningGraph& g, const std::vector<Word>& generators) {
  if (generators.empty()) throw InvalidArgument("expand_fixed_subgroup needs at least one generator");
  std::vector<CyclicClass> out;
  auto add = [&](const Word& w) {
    CyclicClass c = conjugacy_canonical(g, w);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  };
  for (const Word& w : generators) add(w);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) add(generators[i] * generators[j]);
  }
  return out;
}

AuterEmbedding build_auter_embedding(const DefiningGraph& g) {
  std::string name = "t";
  for (std::size_t k = 1; g.find(name); ++k) name = "t_" + std::to_string(k);
  std::vector<std::string> names = g.names();
  names.push_back(name);
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(g.name(u), g.name(v));
  AuterEmbedding out{DefiningGraph(std::move(names), edges), {}, static_cast<VertexId>(g.vertex_count())};
  out.family.stabilized.push_back(g.all_vertices());
  out.family.fixed_classes.push_back(conjugacy_canonical(out.graph, Word::of(Letter::positive(out.added))));
  return out;
}

Tristate preserves_standard_family(const DefiningGraph& g, const Automorphism& f,
                                   const std::vector<VertexSet>& stabilized, std::size_t search_cap) {
  bool unknown = false;
  for (VertexSet delta : stabilized) {
    std::vector<Word> images;
    std::size_t radius = 0;
    std::vector<Word> candidates{Word{}};
    for (VertexId v : delta.to_vector()) {
      const Word& im = f.image(v);
      const CyclicReduction cr = cyclic_reduce_with_conjugator(g, im);
      if (!support(cr.core).is_subset_of(delta)) return Tristate::no;
      images.push_back(im);
      radius = std::max(radius, im.size());
      for (std::size_t k = 1; k <= cr.conjugator.size(); ++k) {
        candidates.push_back(reduce(g, Word(std::vector<Letter>(cr.conjugator.begin(),
                                                               cr.conjugator.begin() + static_cast<std::ptrdiff_t>(k)))));
      }
    }
    auto works = [&](const Word& c) {
      for (const Word& im : images) {
        if (!support(reduce(g, c.inverse() * im * c)).is_subset_of(delta)) return false;
      }
      return true;
    };
    bool found = std::any_of(candidates.begin(), candidates.end(), works);
    if (!found) {
      // Bounded search over the ball of radius `radius`.
      std::unordered_set<Word, WordHash> seen{Word{}};
      std::deque<Word> queue{Word{}};
      const auto alphabet = g.alphabet().to_vector();
      while (!queue.empty() && !found) {
        Word c = std::move(queue.front());
        queue.pop_front();
        if (works(c)) {
          found = true;
          break;
        }
        if (c.size() >= radius) continue;
        for (Letter x : alphabet) {
          Word next = reduce(g, c * Word::of(x));
          if (next.size() != c.size() + 1 || !seen.insert(next).second) continue;
          if (seen.size() > search_cap) break;
          queue.push_back(std::move(next));
        }
      }
    }
    if (!found) unknown = true;
  }
  return unknown ? Tristate::unknown : Tristate::yes;
}

}  // namespace raag
