#include "raag/text_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "raag/error.hpp"

namespace raag {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r' || s[i] == '\n')) ++i;
    const std::size_t start = i;
    while (i < s.size() && !(s[i] == ' ' || s[i] == '\t' || s[i] == '\r' || s[i] == '\n')) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

VertexId parse_vertex(const DefiningGraph& g, std::string_view name) {
  if (auto v = g.find(name)) return *v;
  throw ParseError("unknown generator '" + std::string(name) + "'");
}

// Contents of a `{...}` group, split on commas; empty braces give no items.
std::vector<std::string_view> brace_items(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw ParseError("expected a braced list, got '" + std::string(text) + "'");
  }
  text = trim(text.substr(1, text.size() - 2));
  if (text.empty()) return {};
  std::vector<std::string_view> out;
  for (auto item : split(text, ',')) {
    item = trim(item);
    if (item.empty()) throw ParseError("empty item in braced list");
    out.push_back(item);
  }
  return out;
}

}  // namespace

DefiningGraph parse_graph(std::string_view text) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  bool have_vertices = false;
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (starts_with(line, "vertices:")) {
      if (have_vertices) throw ParseError(where + "second 'vertices:' line");
      for (auto t : tokens(line.substr(9))) names.emplace_back(t);
      have_vertices = true;
    } else if (starts_with(line, "edge:")) {
      if (!have_vertices) throw ParseError(where + "'edge:' before 'vertices:'");
      const auto t = tokens(line.substr(5));
      if (t.size() != 2) throw ParseError(where + "an edge needs exactly two endpoints");
      edges.emplace_back(std::string(t[0]), std::string(t[1]));
    } else {
      throw ParseError(where + "expected 'vertices:' or 'edge:'");
    }
  }
  if (!have_vertices) throw ParseError("graph file has no 'vertices:' line");
  for (const auto& name : names) {
    if (name.find_first_of("^{},;:=") != std::string::npos) {
      throw ParseError("vertex name '" + name + "' contains a reserved character");
    }
  }
  try {
    return DefiningGraph(std::move(names), edges);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

DefiningGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

Letter parse_letter(const DefiningGraph& g, std::string_view token) {
  token = trim(token);
  if (auto caret = token.find('^'); caret != std::string_view::npos) {
    if (token.substr(caret) != "^-1") {
      throw ParseError("malformed letter '" + std::string(token) + "'; use 'a' or 'a^-1'");
    }
    return Letter::negative(parse_vertex(g, token.substr(0, caret)));
  }
  return Letter::positive(parse_vertex(g, token));
}

Word parse_word(const DefiningGraph& g, std::string_view text) {
  Word w;
  for (auto t : tokens(text)) {
    if (t == "1") continue;
    w.push_back(parse_letter(g, t));
  }
  return w;
}

std::vector<Word> parse_word_list(const DefiningGraph& g, std::string_view text) {
  std::vector<Word> out;
  if (trim(text).empty()) return out;
  for (auto item : split(text, ',')) out.push_back(parse_word(g, item));
  return out;
}

std::string format_word(const DefiningGraph& g, const Word& w) {
  std::string out;
  for (Letter x : w) {
    if (!out.empty()) out += ' ';
    out += g.letter_name(x);
  }
  return out;
}

LetterSet parse_letter_set(const DefiningGraph& g, std::string_view text) {
  LetterSet s;
  for (auto item : brace_items(text)) s.insert(parse_letter(g, item));
  return s;
}

std::string format_letter_set(const DefiningGraph& g, LetterSet s) {
  std::string out = "{";
  for (Letter x : s.to_vector()) {
    if (out.size() > 1) out += ',';
    out += g.letter_name(x);
  }
  return out + "}";
}

VertexSet parse_vertex_set(const DefiningGraph& g, std::string_view text) {
  VertexSet s;
  for (auto item : brace_items(text)) s.insert(parse_vertex(g, item));
  return s;
}

std::string format_vertex_set(const DefiningGraph& g, VertexSet s) {
  std::string out = "{";
  for (VertexId v : s.to_vector()) {
    if (out.size() > 1) out += ',';
    out += g.name(v);
  }
  return out + "}";
}

std::vector<VertexSet> parse_subgroup_family(const DefiningGraph& g, std::string_view text) {
  std::vector<VertexSet> out;
  if (trim(text).empty()) return out;
  for (auto item : split(text, ';')) out.push_back(parse_vertex_set(g, item));
  return out;
}

BasedPartition parse_partition_sides(const DefiningGraph& g, std::string_view text) {
  std::optional<LetterSet> side;
  std::optional<LetterSet> other;
  std::optional<Letter> base;
  for (auto t : tokens(text)) {
    if (starts_with(t, "P=")) {
      side = parse_letter_set(g, t.substr(2));
    } else if (starts_with(t, "Pstar=")) {
      other = parse_letter_set(g, t.substr(6));
    } else if (starts_with(t, "base=")) {
      base = parse_letter(g, t.substr(5));
    } else {
      throw ParseError("unexpected token '" + std::string(t) + "' in partition text");
    }
  }
  if (!side || !other || !base) throw ParseError("partition text needs P=, Pstar= and base=");
  if (side->intersects(*other)) throw ParseError("P and Pstar overlap");
  return BasedPartition{{*side, *other, g.alphabet() - *side - *other}, *base};
}

BasedPartition parse_partition(const DefiningGraph& g, std::string_view text) {
  BasedPartition bp = parse_partition_sides(g, text);
  const auto report = validate_based(g, bp);
  if (!report.empty()) throw InvalidArgument("invalid based Whitehead partition: " + report.front());
  return bp;
}

std::string format_partition(const DefiningGraph& g, const BasedPartition& bp) {
  return "P=" + format_letter_set(g, bp.partition.side_p) +
         " Pstar=" + format_letter_set(g, bp.partition.side_q) + " base=" + g.letter_name(bp.base);
}

std::string format_partition(const DefiningGraph& g, const WhiteheadPartition& p) {
  return "P=" + format_letter_set(g, p.side_p) + " Pstar=" + format_letter_set(g, p.side_q) +
         " L=" + format_letter_set(g, p.link);
}

GeneratorDescriptor parse_descriptor(const DefiningGraph& g, std::string_view text) {
  text = trim(text);
  const auto t = tokens(text);
  if (t.empty()) throw ParseError("empty generator descriptor");
  GeneratorDescriptor d;
  const std::string_view kind = t[0];
  auto expect = [&](std::size_t n) {
    if (t.size() != n) throw ParseError("wrong number of arguments in '" + std::string(text) + "'");
  };
  if (kind == "inv") {
    expect(2);
    d.kind = GeneratorKind::inversion;
    d.vertex = parse_vertex(g, t[1]);
  } else if (kind == "perm") {
    d.kind = GeneratorKind::graph_permutation;
    d.permutation.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) d.permutation[v] = Letter::positive(v);
    VertexSet assigned;
    for (std::size_t i = 1; i < t.size(); ++i) {
      const auto colon = t[i].find(':');
      if (colon == std::string_view::npos) throw ParseError("perm entries look like 'a:b'");
      const VertexId v = parse_vertex(g, t[i].substr(0, colon));
      if (assigned.contains(v)) throw ParseError("generator assigned twice in perm");
      assigned.insert(v);
      d.permutation[v] = parse_letter(g, t[i].substr(colon + 1));
    }
  } else if (kind == "fold" || kind == "twist") {
    expect(3);
    d.kind = GeneratorKind::transvection;
    d.vertex = parse_vertex(g, t[1]);
    d.letter = parse_letter(g, t[2]);
    if (d.vertex != d.letter.vertex() && is_twist(g, d) != (kind == "twist")) {
      throw InvalidArgument("'" + std::string(text) + "' is a " + (is_twist(g, d) ? "twist" : "fold"));
    }
  } else if (kind == "pconj") {
    d.kind = GeneratorKind::partial_conjugation;
    const auto brace = text.find('{');
    if (t.size() < 3 || brace == std::string_view::npos) throw ParseError("pconj needs a letter and a {set}");
    d.letter = parse_letter(g, t[1]);
    d.moved = parse_vertex_set(g, text.substr(brace));
  } else if (kind == "whp") {
    d.kind = GeneratorKind::whitehead;
    const BasedPartition bp = parse_partition(g, text.substr(3));
    d.letter = bp.base;
    d.side = bp.partition.side_p;
  } else {
    throw ParseError("unknown generator kind '" + std::string(kind) + "'");
  }
  Automorphism::from_descriptor(g, d);  // validates
  return d;
}

std::vector<GeneratorDescriptor> parse_descriptor_sequence(const DefiningGraph& g, std::string_view text) {
  std::vector<GeneratorDescriptor> out;
  for (auto item : split(text, ';')) {
    if (trim(item).empty()) continue;
    out.push_back(parse_descriptor(g, item));
  }
  return out;
}

std::vector<std::size_t> parse_size_list(std::string_view text) {
  std::vector<std::size_t> out;
  if (trim(text).empty()) return out;
  for (auto item : split(text, ',')) {
    item = trim(item);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      throw ParseError("expected a non-negative integer, got '" + std::string(item) + "'");
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace raag
