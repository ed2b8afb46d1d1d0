#pragma once

// Independent oracles and seeded generators shared by the unit and acceptance
// tests. Nothing here calls reduce / cyclic_reduce / the partition code; the
// point is to have a second implementation to compare against.

#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag::testing {

/// Builds a graph from names "a b c" and edges "a-b b-c".
DefiningGraph graph(const std::string& names, const std::string& edges = "");
/// Word from "a b^-1 c" over g (test shorthand, no library parser).
Word w(const DefiningGraph& g, const std::string& text);

DefiningGraph edgeless(std::size_t n);
DefiningGraph path(std::size_t n);
DefiningGraph cycle(std::size_t n);

using Rng = std::mt19937_64;
std::size_t uniform(Rng& rng, std::size_t n);
Letter random_letter(const DefiningGraph& g, Rng& rng);
/// Uniform length in [0, max_length], independent letters (not reduced).
Word random_word(const DefiningGraph& g, Rng& rng, std::size_t max_length);
/// Random word of exactly `length` letters with no immediate x x^{-1}.
Word random_freely_reduced(const DefiningGraph& g, Rng& rng, std::size_t length);

/// Heap-of-pieces normal form: one pile per generator; pushing x stacks x on
/// its own pile and a blocker on every pile it does not commute with, or
/// removes x^{-1} when that is on top of x's pile.
class Piling {
 public:
  explicit Piling(const DefiningGraph& g);
  void push(Letter x);
  void push(const Word& w) {
    for (Letter x : w) push(x);
  }
  std::size_t length() const { return length_; }
  /// Generators that occur in the element.
  VertexSet support() const;
  /// Canonical byte string of the element.
  std::string key() const;

 private:
  const DefiningGraph* g_;
  std::vector<std::vector<std::int16_t>> piles_;
  std::size_t length_ = 0;
};

std::string element_key(const DefiningGraph& g, const Word& w);
std::size_t element_length(const DefiningGraph& g, const Word& w);
bool same_element(const DefiningGraph& g, const Word& a, const Word& b);
/// |w^2| - |w|: with w = p u p^{-1} reduced and u cyclically reduced, w^2 is
/// p u^2 p^{-1}, so the difference is |u|.
std::size_t power_translation_length(const DefiningGraph& g, const Word& w);
/// Clique number by brute force over vertex subsets.
std::size_t clique_number(const DefiningGraph& g);
/// Image of w under the substitution v -> images[v].
Word substitute(const std::vector<Word>& images, const Word& w);

/// Word distances in the Cayley graph by breadth-first search. The ball of
/// `inner` around the identity is stored; queries meet it with a second search
/// of depth `outer` from the target.
class CayleyOracle {
 public:
  CayleyOracle(const DefiningGraph& g, std::size_t inner, std::size_t outer);
  /// Shortest word length of w, or SIZE_MAX when beyond inner + outer.
  std::size_t distance(const Word& w) const;
  std::size_t ball_size() const { return ball_.size(); }
  std::size_t sphere_count(std::size_t r) const;
  /// Ball elements as shortest words, in BFS order.
  const std::vector<Word>& words() const { return words_; }

 private:
  const DefiningGraph* g_;
  std::size_t inner_;
  std::size_t outer_;
  std::unordered_map<std::string, std::size_t> ball_;
  std::vector<Word> words_;
};

/// Smallest length of c w c^{-1} over conjugators c of length <= radius.
std::size_t min_conjugate_length(const DefiningGraph& g, const Word& w, std::size_t radius);
/// Is some c of length <= radius with c a c^{-1} = b?
bool conjugate_within(const DefiningGraph& g, const Word& a, const Word& b, std::size_t radius);

/// Free group only: cyclic free reduction and rotation-closure conjugacy.
Word free_cyclic_reduce(const Word& w);
bool free_conjugate(const Word& a, const Word& b);

/// The based-partition axioms, written out directly from the definition.
bool oracle_is_based(const DefiningGraph& g, LetterSet p, LetterSet q, LetterSet l, Letter b);
struct OraclePartition {
  LetterSet side_a;  // the side containing the lowest split letter
  LetterSet side_b;
  LetterSet link;
  auto operator<=>(const OraclePartition&) const = default;
};
/// Every (P, P*, L) assignment of V^{\pm} admitting a basepoint, each once.
std::vector<OraclePartition> oracle_partitions(const DefiningGraph& g);
/// Quadrant/adjacency compatibility from the definition.
bool oracle_compatible(const DefiningGraph& g, const OraclePartition& p, const OraclePartition& q);
OraclePartition to_oracle(LetterSet p, LetterSet q, LetterSet l);

/// Every labelled simple graph on n vertices (n <= 4), edges in bitmask order.
std::vector<DefiningGraph> all_graphs(std::size_t n);

/// Some c of length <= radius has c^{-1} images[v] c in A_delta for every v in
/// delta (images indexed by generator).
bool oracle_conjugates_into(const DefiningGraph& g, const std::vector<Word>& images, VertexSet delta,
                            std::size_t radius);

/// Shortest-loop search in the one-partition blow-up: loops are generator
/// sequences u conjugate to w of length up to 2|w|, with the partition edge
/// inserted wherever consecutive edges end and start on different sides.
/// Returns the partition-edge count of a shortest loop.
std::size_t oracle_crossings(const DefiningGraph& g, LetterSet side, LetterSet link, const Word& w);

}  // namespace raag::testing
