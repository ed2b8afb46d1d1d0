#include <doctest.h>

#include "raag/error.hpp"
#include "raag/graph.hpp"
#include "support.hpp"

using namespace raag;
using namespace raag::testing;

namespace {

// Complement connectivity by repeated relaxation, for the join check.
bool complement_disconnected(const DefiningGraph& g, VertexSet s) {
  const auto vs = s.to_vector();
  if (vs.size() < 2) return false;
  VertexSet reached{vs.front()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (VertexId u : vs) {
      if (reached.contains(u)) continue;
      for (VertexId r : reached.to_vector()) {
        if (!g.adjacent(u, r)) {
          reached.insert(u);
          grew = true;
          break;
        }
      }
    }
  }
  return reached.size() != vs.size();
}

}  // namespace

TEST_CASE("link reads off adjacency") {
  const auto p = path(3);
  CHECK(p.link(Letter::positive(1)) == LetterSet{Letter::positive(0), Letter::negative(0), Letter::positive(2),
                                                 Letter::negative(2)});
  CHECK(edgeless(2).link(Letter::positive(0)).empty());
  const auto e = graph("a b", "a-b");
  CHECK(e.link(Letter::negative(0)) == LetterSet{Letter::positive(1), Letter::negative(1)});
}

TEST_CASE("link is sign symmetric on every small graph") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& g : all_graphs(n)) {
      for (VertexId v = 0; v < n; ++v) CHECK(g.link(Letter::positive(v)) == g.link(Letter::negative(v)));
    }
  }
}

TEST_CASE("nontrivial joins") {
  CHECK(graph("a b", "a-b").is_nontrivial_join(VertexSet{0, 1}));
  CHECK_FALSE(edgeless(2).is_nontrivial_join(VertexSet{0, 1}));
  CHECK(path(3).is_nontrivial_join(VertexSet{0, 1, 2}));
  CHECK_FALSE(path(4).is_nontrivial_join(VertexSet{0, 1, 2, 3}));
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& g : all_graphs(n)) {
      for (std::uint32_t bits = 1; bits < (1U << n); ++bits) {
        const VertexSet s(bits);
        CHECK(g.is_nontrivial_join(s) == complement_disconnected(g, s));
      }
    }
  }
}

TEST_CASE("center vertices") {
  CHECK(graph("a b", "a-b").center_vertices() == VertexSet{0, 1});
  CHECK(edgeless(2).center_vertices().empty());
  CHECK(path(3).center_vertices() == VertexSet{1});
}

TEST_CASE("dimension is the largest clique") {
  CHECK(edgeless(3).dimension() == 1);
  CHECK(path(3).dimension() == 2);
  CHECK(graph("a b c", "a-b b-c a-c").dimension() == 3);
  CHECK(cycle(4).dimension() == 2);
}

TEST_CASE("graph construction errors") {
  CHECK_THROWS_AS(graph("a a"), InvalidArgument);
  CHECK_THROWS_AS(graph("a b", "a-a"), InvalidArgument);
  CHECK_THROWS_AS(graph("a b", "a-c"), InvalidArgument);
  CHECK(graph("a b", "a-b b-a").edges().size() == 1);
}

TEST_CASE("letter names and order") {
  const auto g = edgeless(2);
  CHECK(g.letter_name(Letter::negative(1)) == "b^-1");
  CHECK(Letter::positive(0) < Letter::negative(0));
  CHECK(Letter::negative(0) < Letter::positive(1));
  CHECK(Letter::positive(3).inverse().inverse() == Letter::positive(3));
}
