#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

/// A finite sequence of letters. Words carry no graph; every operation that
/// depends on commutation takes the DefiningGraph explicitly.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  static Word of(Letter x) { return Word({x}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(Letter x) { letters_.push_back(x); }
  void append(const Word& w) { letters_.insert(letters_.end(), w.begin(), w.end()); }

  /// Formal inverse: reversed sequence of inverted letters (no reduction).
  Word inverse() const;

  /// Concatenation (no reduction).
  friend Word operator*(const Word& a, const Word& b) {
    Word out = a;
    out.append(b);
    return out;
  }

  /// Shorter words first, then lexicographic by letter code.
  std::strong_ordering operator<=>(const Word& other) const;
  bool operator==(const Word& other) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Shortest representative of the same group element, in lexicographically
/// least letter order among its commutation shuffles.
Word reduce(const DefiningGraph& g, const Word& w);

/// Lexicographically least commutation shuffle of w. Does not cancel letters.
Word shuffle_normal_form(const DefiningGraph& g, const Word& w);

/// w = conjugator * core * conjugator^{-1} with core cyclically reduced.
struct CyclicReduction {
  Word core;
  Word conjugator;
};

CyclicReduction cyclic_reduce_with_conjugator(const DefiningGraph& g, const Word& w);
Word cyclic_reduce(const DefiningGraph& g, const Word& w);
bool is_cyclically_reduced(const DefiningGraph& g, const Word& reduced);

/// Length of a cyclically reduced conjugate (the translation length).
std::size_t translation_length(const DefiningGraph& g, const Word& w);

/// Generators appearing in w. Pass a reduced word for a well-defined answer.
VertexSet support(const Word& w);

/// Number of letters of w over the generator v (either sign).
std::size_t count_vertex(const Word& w, VertexId v);

/// Canonical representative of a conjugacy class.
class CyclicClass {
 public:
  CyclicClass() = default;

  const Word& word() const { return canonical_; }
  std::size_t length() const { return canonical_.size(); }
  bool trivial() const { return canonical_.empty(); }

  auto operator<=>(const CyclicClass& other) const = default;

 private:
  friend CyclicClass conjugacy_canonical(const DefiningGraph&, const Word&, std::size_t);
  explicit CyclicClass(Word w) : canonical_(std::move(w)) {}
  Word canonical_;
};

inline constexpr std::size_t kDefaultCanonicalGuard = 64;

/// The lexicographically least word among all rotations and commutation
/// shuffles of a cyclic reduction of w. Throws CapExceeded when the cyclic
/// reduction is longer than `length_guard`.
CyclicClass conjugacy_canonical(const DefiningGraph& g, const Word& w,
                                std::size_t length_guard = kDefaultCanonicalGuard);

bool are_conjugate(const DefiningGraph& g, const Word& a, const Word& b,
                   std::size_t length_guard = kDefaultCanonicalGuard);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace raag

template <>
struct std::hash<raag::Word> {
  std::size_t operator()(const raag::Word& w) const noexcept { return raag::WordHash{}(w); }
};
