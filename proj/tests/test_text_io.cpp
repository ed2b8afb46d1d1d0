#include <doctest.h>

#include "raag/error.hpp"
#include "raag/text_io.hpp"
#include "support.hpp"

using namespace raag;
using namespace raag::testing;

TEST_CASE("graph files") {
  const auto g = parse_graph("# path\nvertices: a b c\n\nedge: a b  # first\nedge: b c\nedge: b a\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edges().size() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(parse_graph("vertices: x").vertex_count() == 1);
  CHECK_THROWS_AS(parse_graph("edge: a b\nvertices: a b"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertices: a b\nedge: a a"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertices: a a"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertices: a b\nedge: a c"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertices: a^b"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertices: a\nvertices: b"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
  CHECK_THROWS_AS(load_graph("/nonexistent/graph.txt"), ParseError);
}

TEST_CASE("words") {
  const auto g = graph("a b c", "a-b");
  CHECK(parse_word(g, "a b^-1  c") == w(g, "a b^-1 c"));
  CHECK(parse_word(g, "").empty());
  CHECK(parse_word(g, "1").empty());
  CHECK(format_word(g, w(g, "c^-1 a")) == "c^-1 a");
  CHECK_THROWS_AS(parse_word(g, "a^+2"), ParseError);
  CHECK_THROWS_AS(parse_word(g, "a^2"), ParseError);
  CHECK_THROWS_AS(parse_word(g, "d"), ParseError);
  const auto list = parse_word_list(g, "a b, c,1");
  REQUIRE(list.size() == 3);
  CHECK(list[0] == w(g, "a b"));
  CHECK(list[2].empty());
  CHECK(parse_size_list("4, 4") == std::vector<std::size_t>{4, 4});
  CHECK_THROWS_AS(parse_size_list("4,x"), ParseError);
}

TEST_CASE("round trips") {
  Rng rng(91);
  const auto g = cycle(5);
  for (int i = 0; i < 100; ++i) {
    const Word x = random_word(g, rng, 8);
    CHECK(parse_word(g, format_word(g, x)) == x);
  }
  const LetterSet s{Letter::positive(0), Letter::negative(3)};
  CHECK(format_letter_set(g, s) == "{a,d^-1}");
  CHECK(parse_letter_set(g, format_letter_set(g, s)) == s);
  CHECK(parse_vertex_set(g, "{b,e}") == VertexSet{1, 4});
  CHECK_THROWS_AS(parse_vertex_set(g, "b,e"), ParseError);
  CHECK(parse_subgroup_family(g, "{c};{a,b}") == std::vector<VertexSet>{VertexSet{2}, VertexSet{0, 1}});
  CHECK(parse_subgroup_family(g, "").empty());
}

TEST_CASE("partitions") {
  const auto f3 = edgeless(3);
  const auto bp = parse_partition(f3, "P={a,b} Pstar={a^-1,b^-1,c,c^-1} base=a");
  CHECK(bp.base == Letter::positive(0));
  CHECK(bp.partition.link.empty());
  CHECK(parse_partition(f3, format_partition(f3, bp)).partition.side_p == bp.partition.side_p);
  CHECK_THROWS_AS(parse_partition(f3, "P={a} Pstar={a^-1,b,b^-1,c,c^-1} base=b"), InvalidArgument);
  CHECK_THROWS_AS(parse_partition(f3, "P={a} base=a"), ParseError);
  CHECK_THROWS_AS(parse_partition(f3, "P={a} Pstar={a} base=a"), ParseError);
  const auto unchecked = parse_partition_sides(f3, "P={a} Pstar={a^-1,b,b^-1,c,c^-1} base=b");
  CHECK(unchecked.base == Letter::positive(1));
  const auto p3 = path(3);
  const auto linked = parse_partition(p3, "P={a,c} Pstar={a^-1,c^-1} base=a");
  CHECK(linked.partition.link == LetterSet{Letter::positive(1), Letter::negative(1)});
}

TEST_CASE("descriptors") {
  const auto g = graph("a b c", "a-b");
  CHECK(parse_descriptor(g, "inv a").kind == GeneratorKind::inversion);
  CHECK(parse_descriptor(g, "fold c a").kind == GeneratorKind::transvection);
  CHECK_THROWS_AS(parse_descriptor(g, "fold a c"), InvalidArgument);
  CHECK(parse_descriptor(g, "twist a b").kind == GeneratorKind::transvection);
  CHECK_THROWS_AS(parse_descriptor(g, "fold a b"), InvalidArgument);
  CHECK_THROWS_AS(parse_descriptor(g, "twist a c"), InvalidArgument);
  CHECK(parse_descriptor(g, "pconj c {a,b}").kind == GeneratorKind::partial_conjugation);
  CHECK(parse_descriptor(g, "perm a:b b:a^-1").kind == GeneratorKind::graph_permutation);
  CHECK_THROWS_AS(parse_descriptor(g, "perm a:c c:a"), InvalidArgument);
  CHECK_THROWS_AS(parse_descriptor(g, "spin a"), ParseError);
  CHECK_THROWS_AS(parse_descriptor(g, "inv"), ParseError);
  const auto seq = parse_descriptor_sequence(g, "fold c a; inv c");
  CHECK(seq.size() == 2);
  for (const auto& d : seq) CHECK(parse_descriptor(g, describe(g, d)).kind == d.kind);
  CHECK(parse_descriptor(edgeless(3), "whp P={a,b} Pstar={a^-1,b^-1,c,c^-1} base=a").kind ==
        GeneratorKind::whitehead);
}
