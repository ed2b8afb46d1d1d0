#include "raag/word.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "raag/error.hpp"

namespace raag {

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(letters_.begin(), letters_.end(),
                                                other.letters_.begin(), other.letters_.end());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Letter x : w) {
    h ^= x.code() + 1;
    h *= 1099511628211ULL;
  }
  return h;
}

Word shuffle_normal_form(const DefiningGraph& g, const Word& w) {
  const std::size_t n = w.size();
  // blockers[i]: unused letters before i that do not commute past w[i].
  std::vector<std::size_t> blockers(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) blockers[i] += g.independent(w[j], w[i]) ? 0 : 1;
  }
  std::vector<Letter> out;
  out.reserve(n);
  std::vector<bool> used(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!used[i] && blockers[i] == 0 && (best == n || w[i] < w[best])) best = i;
    }
    used[best] = true;
    out.push_back(w[best]);
    for (std::size_t k = best + 1; k < n; ++k) {
      if (!used[k] && !g.independent(w[best], w[k])) --blockers[k];
    }
  }
  return Word(std::move(out));
}

namespace {

// Appends x to a reduced word, cancelling against a trailing-movable x^{-1}.
void push_reduced(const DefiningGraph& g, std::vector<Letter>& r, Letter x) {
  for (std::size_t k = r.size(); k-- > 0;) {
    if (r[k] == x.inverse()) {
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(k));
      return;
    }
    if (!g.independent(r[k], x)) break;
  }
  r.push_back(x);
}

bool movable_to_front(const DefiningGraph& g, const Word& w, std::size_t i) {
  for (std::size_t j = 0; j < i; ++j) {
    if (!g.independent(w[j], w[i])) return false;
  }
  return true;
}

bool movable_to_back(const DefiningGraph& g, const Word& w, std::size_t i) {
  for (std::size_t j = i + 1; j < w.size(); ++j) {
    if (!g.independent(w[j], w[i])) return false;
  }
  return true;
}

// Finds i < j with w[i] movable to the front and w[j] = w[i]^{-1} movable to the back.
bool find_cyclic_pair(const DefiningGraph& g, const Word& w, std::size_t& i_out, std::size_t& j_out) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!movable_to_front(g, w, i)) continue;
    for (std::size_t j = w.size(); j-- > i + 1;) {
      if (w[j] == w[i].inverse() && movable_to_back(g, w, j)) {
        i_out = i;
        j_out = j;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

Word reduce(const DefiningGraph& g, const Word& w) {
  std::vector<Letter> r;
  r.reserve(w.size());
  for (Letter x : w) push_reduced(g, r, x);
  return shuffle_normal_form(g, Word(std::move(r)));
}

CyclicReduction cyclic_reduce_with_conjugator(const DefiningGraph& g, const Word& w) {
  CyclicReduction out;
  Word core = reduce(g, w);
  std::size_t i = 0;
  std::size_t j = 0;
  while (find_cyclic_pair(g, core, i, j)) {
    out.conjugator.push_back(core[i]);
    std::vector<Letter> rest;
    rest.reserve(core.size() - 2);
    for (std::size_t k = 0; k < core.size(); ++k) {
      if (k != i && k != j) rest.push_back(core[k]);
    }
    core = Word(std::move(rest));
  }
  out.core = shuffle_normal_form(g, core);
  return out;
}

Word cyclic_reduce(const DefiningGraph& g, const Word& w) {
  return cyclic_reduce_with_conjugator(g, w).core;
}

bool is_cyclically_reduced(const DefiningGraph& g, const Word& reduced) {
  std::size_t i = 0;
  std::size_t j = 0;
  return !find_cyclic_pair(g, reduced, i, j);
}

std::size_t translation_length(const DefiningGraph& g, const Word& w) {
  return cyclic_reduce(g, w).size();
}

VertexSet support(const Word& w) {
  VertexSet out;
  for (Letter x : w) out.insert(x.vertex());
  return out;
}

std::size_t count_vertex(const Word& w, VertexId v) {
  return static_cast<std::size_t>(
      std::count_if(w.begin(), w.end(), [v](Letter x) { return x.vertex() == v; }));
}

CyclicClass conjugacy_canonical(const DefiningGraph& g, const Word& w, std::size_t length_guard) {
  Word start = cyclic_reduce(g, w);
  if (start.size() > length_guard) {
    throw CapExceeded("cyclic reduction has length " + std::to_string(start.size()) +
                      ", above the canonical-form guard " + std::to_string(length_guard));
  }
  if (start.size() <= 1) return CyclicClass(std::move(start));

  // Cyclically reduced conjugates are exactly the traces reachable by moving a
  // front-movable letter to the back.
  std::unordered_set<Word, WordHash> seen{start};
  std::deque<Word> queue{start};
  Word best = start;
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    if (cur < best) best = cur;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (!movable_to_front(g, cur, i)) continue;
      std::vector<Letter> next;
      next.reserve(cur.size());
      for (std::size_t k = 0; k < cur.size(); ++k) {
        if (k != i) next.push_back(cur[k]);
      }
      next.push_back(cur[i]);
      Word nf = shuffle_normal_form(g, Word(std::move(next)));
      if (seen.insert(nf).second) queue.push_back(std::move(nf));
    }
  }
  return CyclicClass(std::move(best));
}

bool are_conjugate(const DefiningGraph& g, const Word& a, const Word& b, std::size_t length_guard) {
  return conjugacy_canonical(g, a, length_guard) == conjugacy_canonical(g, b, length_guard);
}

}  // namespace raag
