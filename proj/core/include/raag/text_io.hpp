#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "raag/automorphism.hpp"
#include "raag/graph.hpp"
#include "raag/partition.hpp"
#include "raag/word.hpp"

namespace raag {

/// Graph file: a `vertices: a b c` line followed by `edge: a b` lines. Blank
/// lines and `#` comments are ignored, duplicate edges too. Throws ParseError.
DefiningGraph parse_graph(std::string_view text);
DefiningGraph load_graph(const std::string& path);

/// Whitespace-separated `a` / `a^-1` tokens. The empty string and the token `1`
/// denote the identity.
Letter parse_letter(const DefiningGraph& g, std::string_view token);
Word parse_word(const DefiningGraph& g, std::string_view text);
/// Comma-separated words.
std::vector<Word> parse_word_list(const DefiningGraph& g, std::string_view text);
std::string format_word(const DefiningGraph& g, const Word& w);

/// `{a,b^-1}`.
LetterSet parse_letter_set(const DefiningGraph& g, std::string_view text);
std::string format_letter_set(const DefiningGraph& g, LetterSet s);
/// `{a,b}` (unsigned generators).
VertexSet parse_vertex_set(const DefiningGraph& g, std::string_view text);
std::string format_vertex_set(const DefiningGraph& g, VertexSet s);
/// `{c};{a,b}`.
std::vector<VertexSet> parse_subgroup_family(const DefiningGraph& g, std::string_view text);

/// `P={a,b} Pstar={a^-1,b^-1,c,c^-1} base=a`. The link is the complement of
/// the two sides; the result is validated.
BasedPartition parse_partition(const DefiningGraph& g, std::string_view text);
/// Same syntax without checking the axioms.
BasedPartition parse_partition_sides(const DefiningGraph& g, std::string_view text);
std::string format_partition(const DefiningGraph& g, const BasedPartition& bp);
std::string format_partition(const DefiningGraph& g, const WhiteheadPartition& p);

/// `inv a`, `perm a:b b:a^-1`, `fold a b`, `twist a b^-1`, `pconj a {b,c}`,
/// `whp <partition>`. The descriptor is validated.
GeneratorDescriptor parse_descriptor(const DefiningGraph& g, std::string_view text);
/// Descriptors separated by `;`, read as d1 o d2 o ...
std::vector<GeneratorDescriptor> parse_descriptor_sequence(const DefiningGraph& g, std::string_view text);

/// Comma-separated integers, e.g. `4,4`.
std::vector<std::size_t> parse_size_list(std::string_view text);

}  // namespace raag
