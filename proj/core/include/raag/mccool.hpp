#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "raag/automorphism.hpp"
#include "raag/graph.hpp"
#include "raag/partition.hpp"
#include "raag/word.hpp"

namespace raag {

/// Stabilized standard subgroups G (as vertex supports) and fixed conjugacy
/// classes H, plus the length cutoff of the norm tail.
struct ConstraintFamily {
  std::vector<VertexSet> stabilized;
  std::vector<CyclicClass> fixed_classes;
  std::size_t tail_max_length = 2;
};

struct EngineOptions {
  /// Greedy minimization steps before CapExceeded.
  std::size_t step_cap = 10000;
  /// Distinct level states explored before the equivalence search gives up.
  std::size_t state_cap = 100000;
  /// Length guard passed to conjugacy_canonical.
  std::size_t canonical_guard = 256;
  /// Signed graph automorphisms enumerated before CapExceeded.
  std::size_t symmetry_cap = 50000;
};

/// A marked Salvetti [S, marking] with the head classes pulled back by the
/// marking: pulled[i] = canonical(marking^{-1}(head_class[i])). The head
/// classes are the fixed classes followed by the targets.
struct SalvettiState {
  Automorphism marking;
  std::vector<CyclicClass> pulled;
};

/// Lexicographic norm: head lengths, then the tail over all classes of length
/// at most tail_max_length in (length, canonical word) order.
struct NormView {
  std::vector<std::size_t> head;
  std::vector<std::size_t> tail;
  auto operator<=>(const NormView&) const = default;
};

struct Move {
  BasedPartition partition;
  SalvettiState successor;
};

struct MinimizeResult {
  SalvettiState initial;
  SalvettiState state;
  std::vector<BasedPartition> trace;
  /// Head norm before the first move and after each move.
  std::vector<std::vector<std::size_t>> head_norms;
};

enum class Verdict { equivalent, inequivalent, undecided };

struct EquivalenceResult {
  Verdict verdict = Verdict::undecided;
  /// Maps every head class of the left tuple to the matching class of the right.
  std::optional<Automorphism> certificate;
  std::vector<std::size_t> left_min_head;
  std::vector<std::size_t> right_min_head;
  std::size_t level_states = 0;
  std::string note;
};

enum class Tristate { yes, no, unknown };

/// Peak-reduction engine for one graph and one constraint family.
class McCoolEngine {
 public:
  McCoolEngine(const DefiningGraph& g, ConstraintFamily family, EngineOptions options = {});

  const DefiningGraph& graph() const { return graph_; }
  const ConstraintFamily& family() const { return family_; }
  const EngineOptions& options() const { return options_; }

  /// Based partitions whose Whitehead automorphism passes the relative condition.
  const std::vector<BasedPartition>& allowed_partitions() const { return allowed_; }
  /// Signed graph permutations preserving each stabilized support setwise.
  const std::vector<SignedPermutation>& symmetries() const { return symmetries_; }
  /// Nontrivial classes of length at most tail_max_length, in norm order.
  const std::vector<CyclicClass>& tail_classes() const { return tail_classes_; }

  CyclicClass canonical(const Word& w) const;

  SalvettiState state_from_marking(const Automorphism& marking,
                                   const std::vector<CyclicClass>& targets) const;
  SalvettiState initial_state(const std::vector<CyclicClass>& targets) const;

  NormView norm(const SalvettiState& s) const;
  std::vector<std::size_t> head_norm(const SalvettiState& s) const;

  std::vector<Move> neighbor_moves(const SalvettiState& s) const;
  std::vector<Move> reductive_moves(const SalvettiState& s) const;

  /// Greedy descent: always takes the reductive move with the smallest
  /// successor norm, ties by partition order then basepoint.
  MinimizeResult minimize(const SalvettiState& start) const;
  MinimizeResult minimize(const std::vector<CyclicClass>& targets) const;

  EquivalenceResult equivalent(const std::vector<CyclicClass>& left,
                               const std::vector<CyclicClass>& right) const;

 private:
  struct LevelSearch;

  std::vector<CyclicClass> head_classes(const std::vector<CyclicClass>& targets) const;
  std::vector<CyclicClass> key_of(const std::vector<CyclicClass>& pulled) const;
  std::vector<CyclicClass> apply_pulled(std::size_t move, const std::vector<CyclicClass>& pulled) const;

  DefiningGraph graph_;
  ConstraintFamily family_;
  EngineOptions options_;
  std::vector<BasedPartition> allowed_;
  std::vector<Automorphism> allowed_autos_;
  std::vector<SignedPermutation> symmetries_;
  std::vector<CyclicClass> tail_classes_;
};

/// Signed graph permutations mapping each support in `preserved` onto itself.
std::vector<SignedPermutation> signed_graph_automorphisms(const DefiningGraph& g,
                                                          const std::vector<VertexSet>& preserved,
                                                          std::size_t cap);

/// Conjugacy classes of length at most max_length (excluding the trivial
/// class), sorted by length then canonical word.
std::vector<CyclicClass> classes_up_to_length(const DefiningGraph& g, std::size_t max_length);

/// Classes of every a_i and every a_i a_j (i < j), deduplicated in first-seen
/// order. The trivial class is kept when it arises.
std::vector<CyclicClass> expand_fixed_subgroup(const DefiningGraph& g, const std::vector<Word>& generators);

/// Adds an isolated vertex named t (or t_1, t_2, ... on collision); the family
/// stabilizes the original vertex set and fixes the class of the new vertex.
struct AuterEmbedding {
  DefiningGraph graph;
  ConstraintFamily family;
  VertexId added = 0;
};
AuterEmbedding build_auter_embedding(const DefiningGraph& g);

/// Searches a common conjugator c with c^{-1} f(v) c in A_Delta for all v in
/// Delta, over every Delta of `stabilized`. A support obstruction gives a
/// definite `no`; an unsuccessful bounded search gives `unknown`.
Tristate preserves_standard_family(const DefiningGraph& g, const Automorphism& f,
                                   const std::vector<VertexSet>& stabilized,
                                   std::size_t search_cap = 200000);

}  // namespace raag
