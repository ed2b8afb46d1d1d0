#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace raag {

inline constexpr std::size_t kMaxVertices = 32;

using VertexId = std::uint32_t;

/// An element of V^{\pm}, encoded as 2 * vertex + (1 if inverted).
///
/// The encoding doubles as the canonical letter order used everywhere for
/// tie-breaking: generators by declaration order, the positive letter first.
class Letter {
 public:
  constexpr Letter() = default;

  static constexpr Letter positive(VertexId v) { return Letter(2 * v); }
  static constexpr Letter negative(VertexId v) { return Letter(2 * v + 1); }
  static constexpr Letter make(VertexId v, bool inverse) {
    return Letter(2 * v + (inverse ? 1U : 0U));
  }
  static constexpr Letter from_code(std::uint32_t code) { return Letter(code); }

  constexpr VertexId vertex() const { return code_ >> 1U; }
  constexpr bool is_inverse() const { return (code_ & 1U) != 0; }
  constexpr Letter inverse() const { return Letter(code_ ^ 1U); }
  constexpr std::uint32_t code() const { return code_; }

  constexpr auto operator<=>(const Letter&) const = default;

 private:
  constexpr explicit Letter(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 0;
};

namespace detail {

template <typename T>
struct BitTraits;

template <>
struct BitTraits<Letter> {
  using Bits = std::uint64_t;
  static constexpr unsigned index(Letter x) { return x.code(); }
  static constexpr Letter element(unsigned i) { return Letter::from_code(i); }
};

template <>
struct BitTraits<VertexId> {
  using Bits = std::uint32_t;
  static constexpr unsigned index(VertexId v) { return v; }
  static constexpr VertexId element(unsigned i) { return i; }
};

}  // namespace detail

/// Dense set of letters or vertices backed by a single machine word.
template <typename T>
class BitSet {
  using Traits = detail::BitTraits<T>;

 public:
  using Bits = typename Traits::Bits;

  constexpr BitSet() = default;
  constexpr explicit BitSet(Bits bits) : bits_(bits) {}
  BitSet(std::initializer_list<T> items) {
    for (T x : items) insert(x);
  }

  constexpr Bits bits() const { return bits_; }
  constexpr bool contains(T x) const {
    return ((bits_ >> Traits::index(x)) & Bits{1}) != 0;
  }
  constexpr void insert(T x) { bits_ |= Bits{1} << Traits::index(x); }
  constexpr void erase(T x) { bits_ &= ~(Bits{1} << Traits::index(x)); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(BitSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(BitSet other) const { return (bits_ & other.bits_) != 0; }

  /// Smallest element; the set must be non-empty.
  constexpr T front() const { return Traits::element(static_cast<unsigned>(std::countr_zero(bits_))); }

  std::vector<T> to_vector() const {
    std::vector<T> out;
    out.reserve(size());
    for (Bits b = bits_; b != 0; b &= b - 1) {
      out.push_back(Traits::element(static_cast<unsigned>(std::countr_zero(b))));
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (Bits b = bits_; b != 0; b &= b - 1) {
      f(Traits::element(static_cast<unsigned>(std::countr_zero(b))));
    }
  }

  friend constexpr BitSet operator|(BitSet a, BitSet b) { return BitSet(a.bits_ | b.bits_); }
  friend constexpr BitSet operator&(BitSet a, BitSet b) { return BitSet(a.bits_ & b.bits_); }
  friend constexpr BitSet operator-(BitSet a, BitSet b) { return BitSet(a.bits_ & ~b.bits_); }
  BitSet& operator|=(BitSet o) { bits_ |= o.bits_; return *this; }
  BitSet& operator&=(BitSet o) { bits_ &= o.bits_; return *this; }
  BitSet& operator-=(BitSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr auto operator<=>(const BitSet&) const = default;

 private:
  Bits bits_ = 0;
};

using LetterSet = BitSet<Letter>;
using VertexSet = BitSet<VertexId>;

/// {x^{-1} : x in s}.
LetterSet inverted(LetterSet s);
/// Letters closed under inversion whose generators form `vs`.
LetterSet letters_over(VertexSet vs);
/// Generators of the letters in `s`.
VertexSet vertices_of(LetterSet s);

/// The defining graph of a right-angled Artin group: a finite simple graph
/// with named vertices, indexed in declaration order.
class DefiningGraph {
 public:
  DefiningGraph() = default;

  /// Throws InvalidArgument on duplicate names, unknown endpoints, self-edges
  /// or more than kMaxVertices vertices. Duplicate edges are ignored.
  DefiningGraph(std::vector<std::string> names,
                const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t vertex_count() const { return names_.size(); }
  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  /// Throws InvalidArgument for unknown names.
  VertexId index_of(std::string_view name) const;

  bool adjacent(VertexId u, VertexId v) const { return neighbors_[u].contains(v); }
  VertexSet neighbors(VertexId v) const { return neighbors_[v]; }
  /// v together with its neighbors.
  VertexSet star(VertexId v) const {
    VertexSet s = neighbors_[v];
    s.insert(v);
    return s;
  }

  /// Trace independence: distinct generators joined by an edge. Letters over the
  /// same generator are treated as dependent.
  bool independent(Letter x, Letter y) const {
    return x.vertex() != y.vertex() && neighbors_[x.vertex()].contains(y.vertex());
  }
  /// Group commutation of two letters (same generator or adjacent generators).
  bool commute(Letter x, Letter y) const {
    return x.vertex() == y.vertex() || neighbors_[x.vertex()].contains(y.vertex());
  }

  VertexSet all_vertices() const;
  LetterSet alphabet() const { return letters_over(all_vertices()); }

  /// lk(x): letters other than x, x^{-1} commuting with x.
  LetterSet link(Letter x) const;

  /// True iff the subgraph induced by `support` splits as a join of two
  /// non-empty parts, i.e. its complement graph is disconnected.
  bool is_nontrivial_join(VertexSet support) const;

  /// Vertices adjacent to every other vertex; they generate the center.
  VertexSet center_vertices() const;

  /// Size of a largest clique (dimension of the Salvetti complex).
  std::size_t dimension() const;

  /// Every edge {u, v} with u < v, in lexicographic order.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  std::string letter_name(Letter x) const;

  /// Hash of names and edges; used to catch objects built over different graphs.
  std::size_t fingerprint() const;

  bool operator==(const DefiningGraph& other) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<VertexSet> neighbors_;
};

}  // namespace raag
