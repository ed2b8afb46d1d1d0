#pragma once

#include <compare>
#include <string>
#include <vector>

#include "raag/automorphism.hpp"
#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag {

/// A partition (P, P*, L) of V^{\pm}. Stored with sides in canonical order by
/// `normalized`: side_p holds the lowest split letter. Based views may order
/// the sides differently.
struct WhiteheadPartition {
  LetterSet side_p;
  LetterSet side_q;
  LetterSet link;

  WhiteheadPartition swapped() const { return {side_q, side_p, link}; }
  /// Sides reordered so that side_p contains the lowest split letter.
  WhiteheadPartition normalized() const;
  /// Equal up to exchanging the sides.
  bool same_partition(const WhiteheadPartition& other) const;

  auto operator<=>(const WhiteheadPartition&) const = default;
};

/// A partition together with a basepoint, oriented so that base lies in side_p.
struct BasedPartition {
  WhiteheadPartition partition;
  Letter base;

  /// (P*, P, L) with basepoint base^{-1}: the same automorphism up to inversion.
  BasedPartition exchanged() const { return {partition.swapped(), base.inverse()}; }

  auto operator<=>(const BasedPartition&) const = default;
};

struct Classification {
  LetterSet single;
  LetterSet double_p;
  LetterSet double_q;
};

Classification classify(const WhiteheadPartition& p);

/// Lists violated axioms; empty when (P, Pstar, L) with basepoint b is a based
/// Whitehead partition.
std::vector<std::string> validate_based(const DefiningGraph& g, LetterSet side_p, LetterSet side_q,
                                        LetterSet link, Letter b);
std::vector<std::string> validate_based(const DefiningGraph& g, const BasedPartition& bp);

/// The based partition determined by one side and a basepoint: L = lk(base),
/// the other side is the complement. Throws InvalidArgument when invalid.
BasedPartition based_from_side(const DefiningGraph& g, LetterSet side, Letter base);

/// Letters b for which the partition (with b's side first) is a valid based
/// partition, in code order.
std::vector<Letter> basepoints(const DefiningGraph& g, const WhiteheadPartition& p);

/// Throws InvalidArgument when the based partition is invalid.
Automorphism whitehead_automorphism(const DefiningGraph& g, const BasedPartition& bp);

/// Some pair of basepoints are adjacent in the graph.
bool adjacent(const DefiningGraph& g, const WhiteheadPartition& p, const WhiteheadPartition& q);
/// Adjacent, or exactly one of the four quadrants is empty. Throws
/// InvalidArgument when p and q are the same partition.
bool compatible(const DefiningGraph& g, const WhiteheadPartition& p, const WhiteheadPartition& q);

struct EnumeratedPartition {
  WhiteheadPartition partition;
  std::vector<Letter> basepoints;
};

/// Every Whitehead partition, each once, sorted by canonical side then link.
/// Throws CapExceeded when a single basepoint leaves more than `max_free_letters`
/// letters to distribute.
std::vector<EnumeratedPartition> enumerate_partitions(const DefiningGraph& g,
                                                      std::size_t max_free_letters = 22);

/// Every based partition, ordered by partition then basepoint.
std::vector<BasedPartition> enumerate_based(const DefiningGraph& g);

/// The based partitions produced from two non-compatible based partitions by
/// the quadrant construction. Tries (P,Q) then (Q,P), each with the four side
/// exchanges, and the double case before the single case; returns the first
/// that applies. Outputs whose side is the basepoint alone define the identity
/// and are left out; `trivial`, when given, is incremented for each. Throws
/// InvalidArgument when no case applies.
std::vector<BasedPartition> quadrant_partitions(const DefiningGraph& g, const BasedPartition& p,
                                                const BasedPartition& q, std::size_t* trivial = nullptr);

/// True iff the Whitehead automorphism of bp preserves the conjugacy class of
/// every standard subgroup A_Delta in the family (support test on sides).
bool relative_condition(const DefiningGraph& g, const BasedPartition& bp,
                        const std::vector<VertexSet>& family);

/// Number of crossings of the partition hyperplane by a shortest loop
/// representing the conjugacy class of w in the blow-up along p.
std::size_t crossing_count(const DefiningGraph& g, const WhiteheadPartition& p, const Word& w);

}  // namespace raag
