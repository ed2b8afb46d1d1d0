#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "raag/automorphism.hpp"
#include "raag/cube.hpp"
#include "raag/error.hpp"
#include "raag/graph.hpp"
#include "raag/mccool.hpp"
#include "raag/partition.hpp"
#include "raag/spine.hpp"
#include "raag/text_io.hpp"
#include "raag/word.hpp"

namespace raag::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string graph_path;
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::size_t tail_max = 2;
  std::optional<std::size_t> state_cap;
  std::size_t step_cap = 10000;
  std::size_t canonical_guard = 256;

  std::string word;
  std::optional<std::string> other;
  std::string automorphism;
  std::string with;
  std::string marking;
  std::string stabilize;
  std::string fixed;
  std::string fixed_subgroup;
  std::string partition;
  std::string other_partition;
  std::string targets;
  std::string left;
  std::string right;
  std::string generators;
  bool based = false;
  bool tables = false;
  std::string export_path;

  std::size_t radius = 4;
  std::size_t ball_cap = 2000000;
  std::string x;
  std::string y;
  std::string z;
  std::string element;
  std::string h_element;
  std::string elements;

  std::size_t max_size = 3;
  std::string bound;
  std::size_t slack = 0;
  std::size_t node_cap = 5000;
};

/// Collects the result as an ordered JSON object; text mode flattens it to
/// key=value lines, or prints `plain` when a command has a single value.
struct Report {
  Json data = Json::object();
  std::optional<std::string> plain;
  int status = kExitOk;
};

void flatten(std::ostream& out, const std::string& key, const Json& v) {
  if (v.is_object()) {
    for (const auto& [k, child] : v.items()) flatten(out, key.empty() ? k : key + "." + k, child);
  } else if (v.is_array()) {
    if (v.empty()) out << key << "=\n";
    for (std::size_t i = 0; i < v.size(); ++i) flatten(out, key + "." + std::to_string(i), v[i]);
  } else if (v.is_string()) {
    out << key << "=" << v.get<std::string>() << "\n";
  } else {
    out << key << "=" << v.dump() << "\n";
  }
}

void render(std::ostream& out, const Report& r, bool json) {
  if (json) {
    out << r.data.dump(2) << "\n";
  } else if (r.plain) {
    out << *r.plain << "\n";
  } else {
    flatten(out, "", r.data);
  }
}

std::string show(const DefiningGraph& g, const Word& w) { return w.empty() ? "1" : format_word(g, w); }

Json images_json(const DefiningGraph& g, const std::vector<Word>& images) {
  Json out = Json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) out[g.name(v)] = show(g, images[v]);
  return out;
}

Json automorphism_json(const DefiningGraph& g, const Automorphism& f) {
  Json out = Json::object();
  out["images"] = images_json(g, f.images());
  out["inverse_images"] = images_json(g, f.inverse_images());
  if (f.factorization()) {
    Json seq = Json::array();
    for (const auto& d : *f.factorization()) seq.push_back(describe(g, d));
    out["factorization"] = seq;
  }
  return out;
}

Json sizes_json(const std::vector<std::size_t>& xs) {
  Json out = Json::array();
  for (auto x : xs) out.push_back(x);
  return out;
}

std::string tristate_name(Tristate t) {
  switch (t) {
    case Tristate::yes:
      return "yes";
    case Tristate::no:
      return "no";
    default:
      return "unknown";
  }
}

Automorphism parse_automorphism(const DefiningGraph& g, const std::string& text) {
  if (text.empty()) return Automorphism::identity(g);
  return Automorphism::from_sequence(g, parse_descriptor_sequence(g, text));
}

std::vector<CyclicClass> parse_classes(const DefiningGraph& g, const std::string& text, std::size_t guard) {
  std::vector<CyclicClass> out;
  for (const Word& w : parse_word_list(g, text)) out.push_back(conjugacy_canonical(g, w, guard));
  return out;
}

Json classes_json(const DefiningGraph& g, const std::vector<CyclicClass>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(show(g, c.word()));
  return out;
}

std::optional<std::size_t> env_state_cap() {
  const char* raw = std::getenv("RAAG_STATE_CAP");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const auto caps = parse_size_list(raw);
  if (caps.size() != 1 || caps[0] == 0) throw ParseError("RAAG_STATE_CAP must be a positive integer");
  return caps[0];
}

McCoolEngine make_engine(const DefiningGraph& g, const Options& o) {
  ConstraintFamily family;
  family.stabilized = parse_subgroup_family(g, o.stabilize);
  family.fixed_classes = parse_classes(g, o.fixed, o.canonical_guard);
  if (!o.fixed_subgroup.empty()) {
    for (auto& c : expand_fixed_subgroup(g, parse_word_list(g, o.fixed_subgroup))) {
      if (!c.trivial()) family.fixed_classes.push_back(c);
    }
  }
  family.tail_max_length = o.tail_max;
  EngineOptions options;
  options.step_cap = o.step_cap;
  options.canonical_guard = o.canonical_guard;
  if (auto cap = env_state_cap()) options.state_cap = *cap;
  if (o.state_cap) options.state_cap = *o.state_cap;
  return McCoolEngine(g, std::move(family), options);
}

Json family_json(const DefiningGraph& g, const ConstraintFamily& f) {
  Json out = Json::object();
  Json st = Json::array();
  for (VertexSet s : f.stabilized) st.push_back(format_vertex_set(g, s));
  out["stabilized"] = st;
  out["fixed"] = classes_json(g, f.fixed_classes);
  out["tail_max_length"] = f.tail_max_length;
  return out;
}

// ---- word commands

Report cmd_reduce(const DefiningGraph& g, const Options& o) {
  Report r;
  const Word w = reduce(g, parse_word(g, o.word));
  r.plain = show(g, w);
  r.data["word"] = show(g, w);
  r.data["length"] = w.size();
  return r;
}

Report cmd_cyclic(const DefiningGraph& g, const Options& o) {
  Report r;
  const auto cr = cyclic_reduce_with_conjugator(g, parse_word(g, o.word));
  r.data["core"] = show(g, cr.core);
  r.data["conjugator"] = show(g, cr.conjugator);
  r.data["length"] = cr.core.size();
  return r;
}

Report cmd_length(const DefiningGraph& g, const Options& o) {
  Report r;
  const std::size_t len = translation_length(g, parse_word(g, o.word));
  r.plain = std::to_string(len);
  r.data["translation_length"] = len;
  return r;
}

Report cmd_conj(const DefiningGraph& g, const Options& o) {
  Report r;
  const Word w = parse_word(g, o.word);
  r.data["canonical"] = show(g, conjugacy_canonical(g, w, o.canonical_guard).word());
  if (o.other) {
    const bool same = are_conjugate(g, w, parse_word(g, *o.other), o.canonical_guard);
    r.data["other_canonical"] = show(g, conjugacy_canonical(g, parse_word(g, *o.other), o.canonical_guard).word());
    r.data["conjugate"] = same;
    if (!same) r.status = kExitNo;
  }
  return r;
}

// ---- automorphisms

Report cmd_auto_apply(const DefiningGraph& g, const Options& o) {
  Report r;
  const Automorphism f = parse_automorphism(g, o.automorphism);
  const Word image = apply(g, f, parse_word(g, o.word));
  r.plain = show(g, image);
  r.data["image"] = show(g, image);
  return r;
}

Report cmd_auto_compose(const DefiningGraph& g, const Options& o) {
  Report r;
  const Automorphism f = parse_automorphism(g, o.automorphism);
  const Automorphism h = parse_automorphism(g, o.with);
  r.data = automorphism_json(g, compose(g, f, h));
  return r;
}

Report cmd_auto_check(const DefiningGraph& g, const Options& o) {
  Report r;
  const Automorphism f = parse_automorphism(g, o.automorphism);
  r.data = automorphism_json(g, f);
  r.data["untwisted_by_construction"] = f.untwisted_by_construction(g);
  const Simplicity s = is_simple(g, f);
  r.data["simple"] = s == Simplicity::simple ? "yes" : s == Simplicity::not_simple ? "no" : "inapplicable";
  r.data["inner"] = is_inner(g, f);
  r.data["inner_times_graph_permutation"] = inner_times_graph_permutation(g, f).has_value();
  if (!o.stabilize.empty()) {
    r.data["preserves_family"] = tristate_name(preserves_standard_family(g, f, parse_subgroup_family(g, o.stabilize)));
  }
  return r;
}

// ---- Whitehead partitions

Report cmd_wh_enumerate(const DefiningGraph& g, const Options& o) {
  Report r;
  Json list = Json::array();
  if (o.based) {
    const auto based = enumerate_based(g);
    for (const auto& bp : based) list.push_back(format_partition(g, bp));
    r.data["count"] = based.size();
    r.data["based_partitions"] = list;
    return r;
  }
  const auto parts = enumerate_partitions(g);
  for (const auto& e : parts) {
    Json item = Json::object();
    item["partition"] = format_partition(g, e.partition);
    Json bps = Json::array();
    for (Letter b : e.basepoints) bps.push_back(g.letter_name(b));
    item["basepoints"] = bps;
    list.push_back(item);
  }
  r.data["count"] = parts.size();
  r.data["partitions"] = list;
  return r;
}

Report cmd_wh_validate(const DefiningGraph& g, const Options& o) {
  Report r;
  const BasedPartition bp = parse_partition_sides(g, o.partition);
  const auto violations = validate_based(g, bp);
  r.data["valid"] = violations.empty();
  Json v = Json::array();
  for (const auto& s : violations) v.push_back(s);
  r.data["violations"] = v;
  if (violations.empty()) {
    const auto k = classify(bp.partition);
    r.data["single"] = format_letter_set(g, k.single);
    r.data["double_p"] = format_letter_set(g, k.double_p);
    r.data["double_pstar"] = format_letter_set(g, k.double_q);
  } else {
    r.status = kExitNo;
  }
  return r;
}

Report cmd_wh_apply(const DefiningGraph& g, const Options& o) {
  Report r;
  const BasedPartition bp = parse_partition(g, o.partition);
  const Automorphism wh = whitehead_automorphism(g, bp);
  if (!o.word.empty()) {
    r.data["image"] = show(g, apply(g, wh, parse_word(g, o.word)));
  }
  r.data["images"] = images_json(g, wh.images());
  return r;
}

Report cmd_wh_quadrants(const DefiningGraph& g, const Options& o) {
  Report r;
  const BasedPartition p = parse_partition(g, o.partition);
  const BasedPartition q = parse_partition(g, o.other_partition);
  Json list = Json::array();
  std::size_t trivial = 0;
  for (const auto& bp : quadrant_partitions(g, p, q, &trivial)) list.push_back(format_partition(g, bp));
  r.data["partitions"] = list;
  r.data["trivial_outputs"] = trivial;
  return r;
}

Report cmd_wh_relcond(const DefiningGraph& g, const Options& o) {
  Report r;
  const BasedPartition bp = parse_partition(g, o.partition);
  const bool ok = relative_condition(g, bp, parse_subgroup_family(g, o.stabilize));
  r.plain = ok ? "true" : "false";
  r.data["relative_condition"] = ok;
  return r;
}

Report cmd_wh_cross(const DefiningGraph& g, const Options& o) {
  Report r;
  const BasedPartition bp = parse_partition(g, o.partition);
  const std::size_t n = crossing_count(g, bp.partition, parse_word(g, o.word));
  r.plain = std::to_string(n);
  r.data["crossings"] = n;
  return r;
}

// ---- peak reduction

Report cmd_minimize(const DefiningGraph& g, const Options& o) {
  Report r;
  const McCoolEngine engine = make_engine(g, o);
  const auto targets = parse_classes(g, o.targets, o.canonical_guard);
  const SalvettiState start = engine.state_from_marking(parse_automorphism(g, o.marking), targets);
  const MinimizeResult m = engine.minimize(start);
  r.data["family"] = family_json(g, engine.family());
  r.data["initial_head"] = sizes_json(m.head_norms.front());
  r.data["final_head"] = sizes_json(m.head_norms.back());
  Json trace = Json::array();
  for (std::size_t i = 0; i < m.trace.size(); ++i) {
    Json step = Json::object();
    step["descriptor"] = "whp " + format_partition(g, m.trace[i]);
    step["head"] = sizes_json(m.head_norms[i + 1]);
    trace.push_back(step);
  }
  r.data["trace"] = trace;
  r.data["pulled"] = classes_json(g, m.state.pulled);
  r.data["marking"] = images_json(g, m.state.marking.images());
  return r;
}

Report cmd_equivalent(const DefiningGraph& g, const Options& o) {
  Report r;
  const McCoolEngine engine = make_engine(g, o);
  const auto left = parse_classes(g, o.left, o.canonical_guard);
  const auto right = parse_classes(g, o.right, o.canonical_guard);
  const EquivalenceResult e = engine.equivalent(left, right);
  r.data["family"] = family_json(g, engine.family());
  r.data["verdict"] = e.verdict == Verdict::equivalent     ? "equivalent"
                      : e.verdict == Verdict::inequivalent ? "inequivalent"
                                                           : "undecided";
  r.data["left_min_head"] = sizes_json(e.left_min_head);
  r.data["right_min_head"] = sizes_json(e.right_min_head);
  r.data["level_states"] = e.level_states;
  if (!e.note.empty()) r.data["note"] = e.note;
  if (e.verdict == Verdict::equivalent) {
    if (!e.certificate) throw InvariantError("equivalent verdict without a certificate");
    // Re-verified here, independently of the engine's own check.
    for (std::size_t i = 0; i < left.size(); ++i) {
      if (engine.canonical(apply(g, *e.certificate, left[i].word())) != right[i]) {
        throw InvariantError("certificate does not map target " + std::to_string(i));
      }
    }
    for (const auto& c : engine.family().fixed_classes) {
      if (engine.canonical(apply(g, *e.certificate, c.word())) != c) {
        throw InvariantError("certificate moves a fixed class");
      }
    }
    r.data["certificate"] = automorphism_json(g, *e.certificate);
  }
  r.status = e.verdict == Verdict::equivalent ? kExitOk : e.verdict == Verdict::inequivalent ? kExitNo : kExitUndecided;
  return r;
}

Report cmd_expand_fixed(const DefiningGraph& g, const Options& o) {
  Report r;
  r.data["classes"] = classes_json(g, expand_fixed_subgroup(g, parse_word_list(g, o.generators)));
  return r;
}

Report cmd_auter_embed(const DefiningGraph& g, const Options&) {
  Report r;
  const AuterEmbedding e = build_auter_embedding(g);
  std::ostringstream file;
  file << "vertices:";
  for (const auto& n : e.graph.names()) file << " " << n;
  file << "\n";
  Json edges = Json::array();
  for (auto [u, v] : e.graph.edges()) {
    file << "edge: " << e.graph.name(u) << " " << e.graph.name(v) << "\n";
    edges.push_back(e.graph.name(u) + "-" + e.graph.name(v));
  }
  r.data["added"] = e.graph.name(e.added);
  r.data["edges"] = edges;
  r.data["family"] = family_json(e.graph, e.family);
  r.data["graph_file"] = file.str();
  return r;
}

// ---- cube complex

CubeBall ball_for(const DefiningGraph& g, const Options& o) { return build_ball(g, o.radius, o.ball_cap); }

Report cmd_cube_ball(const DefiningGraph& g, const Options& o) {
  Report r;
  const CubeBall b = ball_for(g, o);
  r.data["radius"] = b.radius();
  r.data["vertices"] = b.vertices().size();
  r.data["edges"] = b.edges().size();
  r.data["squares"] = b.squares().size();
  r.data["hyperplanes"] = b.hyperplane_count();
  r.data["dimension"] = g.dimension();
  if (o.tables) {
    Json vertices = Json::array();
    for (const Word& v : b.vertices()) vertices.push_back(show(g, v));
    Json edges = Json::array();
    for (std::size_t i = 0; i < b.edges().size(); ++i) {
      const auto& e = b.edges()[i];
      edges.push_back(Json::array({e.from, e.to, g.name(e.label), b.hyperplane_of_edge()[i]}));
    }
    Json squares = Json::array();
    for (const auto& sq : b.squares()) squares.push_back(Json::array({sq.corner, g.name(sq.first), g.name(sq.second)}));
    r.data["vertex_table"] = vertices;
    r.data["edge_table"] = edges;
    r.data["square_table"] = squares;
  }
  return r;
}

Report cmd_cube_median(const DefiningGraph& g, const Options& o) {
  Report r;
  const CubeBall b = ball_for(g, o);
  const Word m = median(b, parse_word(g, o.x), parse_word(g, o.y), parse_word(g, o.z));
  r.plain = show(g, m);
  r.data["median"] = show(g, m);
  return r;
}

Report cmd_cube_minset(const DefiningGraph& g, const Options& o) {
  Report r;
  const CubeBall b = ball_for(g, o);
  const auto ids = minset(b, parse_word(g, o.element));
  Json vs = Json::array();
  for (auto i : ids) vs.push_back(show(g, b.vertex(i)));
  const auto conv = is_convex(b, ids);
  r.data["translation_length"] = translation_length(g, parse_word(g, o.element));
  r.data["size"] = ids.size();
  r.data["convex"] = conv.convex;
  r.data["boundary_clipped"] = conv.boundary_clipped;
  r.data["vertices"] = vs;
  return r;
}

Report cmd_cube_distcheck(const DefiningGraph& g, const Options& o) {
  Report r;
  const CubeBall b = ball_for(g, o);
  const auto d = minset_distance_check(b, parse_word(g, o.element), parse_word(g, o.h_element));
  r.data["distance"] = d.distance;
  r.data["twice_bound"] = d.twice_bound;
  r.data["ok"] = d.ok;
  r.data["empty_minset"] = d.empty_minset;
  if (!d.ok && !d.empty_minset) r.status = kExitNo;
  return r;
}

Report cmd_cube_witness(const DefiningGraph& g, const Options& o) {
  Report r;
  const CubeBall b = ball_for(g, o);
  const auto wit = bounded_displacement_witness(b, parse_word_list(g, o.elements));
  r.data["twice_bound"] = wit.twice_bound;
  r.data["found"] = wit.vertex.has_value();
  if (wit.vertex) {
    r.data["vertex"] = show(g, b.vertex(*wit.vertex));
    r.data["displacements"] = sizes_json(wit.displacements);
  } else {
    r.status = kExitNo;
  }
  return r;
}

// ---- spine

Report cmd_spine_simplices(const DefiningGraph& g, const Options& o) {
  Report r;
  const SimplexList s = enumerate_simplices(g, o.max_size);
  Json parts = Json::array();
  for (const auto& p : s.partitions) parts.push_back(format_partition(g, p));
  std::vector<std::size_t> counts(o.max_size, 0);
  Json simplices = Json::array();
  for (const auto& simplex : s.simplices) {
    ++counts[simplex.size() - 1];
    simplices.push_back(sizes_json(simplex));
  }
  r.data["partitions"] = parts;
  r.data["counts_by_size"] = sizes_json(counts);
  r.data["simplices"] = simplices;
  return r;
}

Report cmd_spine_movegraph(const DefiningGraph& g, const Options& o) {
  Report r;
  const McCoolEngine engine = make_engine(g, o);
  const auto targets = parse_classes(g, o.targets, o.canonical_guard);
  const MoveGraph mg = move_graph(engine, targets, parse_size_list(o.bound), o.slack, o.node_cap);
  r.data["nodes"] = mg.nodes.size();
  r.data["edges"] = mg.edges.size();
  r.data["components"] = mg.components;
  r.data["out_of_bound_moves"] = mg.out_of_bound_moves;
  r.data["capped"] = mg.capped;
  Json nodes = Json::array();
  for (const auto& n : mg.nodes) {
    Json item = Json::object();
    item["head"] = sizes_json(n.norm.head);
    item["in_bound"] = n.in_bound;
    item["in_sg"] = n.in_sg;
    nodes.push_back(item);
  }
  r.data["node_list"] = nodes;
  Json edges = Json::array();
  for (const auto& e : mg.edges) {
    edges.push_back(std::to_string(e.from) + "-" + std::to_string(e.to) + " " + format_partition(g, e.partition));
  }
  r.data["edge_list"] = edges;
  if (!o.export_path.empty()) {
    std::ofstream file(o.export_path);
    if (!file) throw ParseError("cannot write '" + o.export_path + "'");
    file << r.data.dump(2) << "\n";
  }
  return r;
}

Report cmd_spine_changenorm(const DefiningGraph& g, const Options& o) {
  Report r;
  const BasedPartition bp = parse_partition(g, o.partition);
  const Automorphism marking = parse_automorphism(g, o.marking);
  std::vector<CyclicClass> pulled;
  for (const Word& t : parse_word_list(g, o.targets)) {
    pulled.push_back(conjugacy_canonical(g, apply_inverse(g, marking, t), o.canonical_guard));
  }
  const auto entries = verify_changenorm(g, pulled, bp);
  Json list = Json::array();
  bool all = true;
  for (const auto& e : entries) {
    Json item = Json::object();
    item["before"] = e.before;
    item["after"] = e.after;
    item["crossings"] = e.crossings;
    item["base_letters"] = e.base_letters;
    item["ok"] = e.ok;
    list.push_back(item);
    all = all && e.ok;
  }
  r.data["entries"] = list;
  r.data["all_ok"] = all;
  if (!all) r.status = kExitNo;
  return r;
}

std::string joined(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& a : args) {
    if (!out.empty()) out += ' ';
    const bool quote = a.find_first_of(" \t;{}^") != std::string::npos || a.empty();
    out += quote ? "'" + a + "'" : a;
  }
  return out;
}

void repro_dump(std::ostream& err, const std::vector<std::string>& args, const Options& o) {
  err << "repro: raag " << joined(args) << "\n";
  if (!o.graph_path.empty()) {
    std::ifstream in(o.graph_path);
    if (in) err << "graph file " << o.graph_path << ":\n" << in.rdbuf() << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Computations in right-angled Artin groups and their automorphisms"};
  app.name("raag");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--graph", o.graph_path, "Graph file (`vertices:` and `edge:` lines)");
  app.add_flag("--json", o.json, "Print a JSON object instead of key=value lines");
  app.add_option("--seed", o.seed, "Seed (default 0); no command currently draws random numbers");
  app.add_option("--jobs", o.jobs, "Worker count; computation is sequential, so output never depends on it")->check(CLI::PositiveNumber);
  app.add_option("--tail-max,--tail-len", o.tail_max, "Longest class in the norm tail");
  app.add_option("--state-cap", o.state_cap, "Equivalence search state cap (overrides RAAG_STATE_CAP)")
      ->check(CLI::PositiveNumber);
  app.add_option("--step-cap", o.step_cap, "Greedy minimization step cap")->check(CLI::PositiveNumber);
  app.add_option("--canonical-guard", o.canonical_guard, "Longest word accepted by conjugacy canonicalization")
      ->check(CLI::PositiveNumber);

  auto word_opt = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--word", o.word, "Word, e.g. \"a b^-1 c\"");
    if (required) opt->required();
  };
  auto family_opts = [&](CLI::App* sub) {
    sub->add_option("--stabilize", o.stabilize, "Stabilized standard subgroups, e.g. \"{c};{a,b}\"");
    sub->add_option("--fixed,--fix", o.fixed, "Comma-separated fixed conjugacy classes");
    sub->add_option("--fixed-subgroup", o.fixed_subgroup, "Generators of a subgroup fixed up to conjugacy");
  };

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduced normal form of a word");
  word_opt(reduce_cmd);
  auto* cyclic_cmd = app.add_subcommand("cyclic", "Cyclic reduction with conjugator");
  word_opt(cyclic_cmd);
  auto* length_cmd = app.add_subcommand("length", "Translation length");
  word_opt(length_cmd);
  auto* conj_cmd = app.add_subcommand("conj", "Conjugacy canonical form, optional comparison");
  word_opt(conj_cmd);
  conj_cmd->add_option("--other", o.other, "Second word to compare with");

  auto* auto_cmd = app.add_subcommand("auto", "Automorphisms given as `;`-separated generator descriptors");
  auto_cmd->require_subcommand(1);
  auto_cmd->fallthrough();
  auto* auto_apply = auto_cmd->add_subcommand("apply", "Apply an automorphism to a word");
  auto_apply->add_option("--auto", o.automorphism, "Descriptors, e.g. \"fold a b; inv b\"")->required();
  word_opt(auto_apply);
  auto* auto_compose = auto_cmd->add_subcommand("compose", "Images of f o h");
  auto_compose->add_option("--auto", o.automorphism, "f")->required();
  auto_compose->add_option("--with", o.with, "h")->required();
  auto* auto_check = auto_cmd->add_subcommand("check", "Validate and classify an automorphism");
  auto_check->add_option("--auto", o.automorphism, "Descriptors")->required();
  auto_check->add_option("--stabilize", o.stabilize, "Family to test preservation of");

  auto* wh_cmd = app.add_subcommand("wh", "Whitehead partitions");
  wh_cmd->require_subcommand(1);
  wh_cmd->fallthrough();
  auto* wh_enum = wh_cmd->add_subcommand("enumerate", "All Whitehead partitions");
  wh_enum->add_flag("--based", o.based, "List based partitions instead");
  auto* wh_validate = wh_cmd->add_subcommand("validate", "Check the based-partition axioms");
  wh_validate->add_option("--partition", o.partition, "P={..} Pstar={..} base=x")->required();
  auto* wh_apply = wh_cmd->add_subcommand("apply", "Whitehead automorphism images");
  wh_apply->add_option("--partition", o.partition, "Based partition")->required();
  word_opt(wh_apply, false);
  auto* wh_quad = wh_cmd->add_subcommand("quadrants", "Quadrant partitions of two non-compatible partitions");
  wh_quad->add_option("--partition", o.partition, "First based partition")->required();
  wh_quad->add_option("--other", o.other_partition, "Second based partition")->required();
  auto* wh_rel = wh_cmd->add_subcommand("relcond", "Relative condition against a subgroup family");
  wh_rel->add_option("--partition", o.partition, "Based partition")->required();
  wh_rel->add_option("--stabilize", o.stabilize, "Family, e.g. \"{c};{a,b}\"")->required();
  auto* wh_cross = wh_cmd->add_subcommand("cross", "Crossing count of a class");
  wh_cross->add_option("--partition", o.partition, "Based partition")->required();
  word_opt(wh_cross);

  auto* min_cmd = app.add_subcommand("minimize", "Greedy peak reduction of a target tuple");
  min_cmd->add_option("--targets", o.targets, "Comma-separated classes")->required();
  min_cmd->add_option("--marking", o.marking, "Start from this marking (descriptors)");
  family_opts(min_cmd);
  auto* eq_cmd = app.add_subcommand("equivalent", "Decide whether an automorphism maps one tuple to another");
  eq_cmd->add_option("--left", o.left, "Comma-separated classes")->required();
  eq_cmd->add_option("--right", o.right, "Comma-separated classes")->required();
  family_opts(eq_cmd);
  auto* expand_cmd = app.add_subcommand("expand-fixed", "Classes fixed when a subgroup is fixed up to conjugacy");
  expand_cmd->add_option("--generators", o.generators, "Comma-separated generators")->required();
  app.add_subcommand("auter-embed", "Graph and family realizing automorphisms as outer automorphisms");

  auto* cube_cmd = app.add_subcommand("cube", "Universal cover of the Salvetti complex");
  cube_cmd->require_subcommand(1);
  cube_cmd->fallthrough();
  cube_cmd->add_option("--radius", o.radius, "Ball radius");
  cube_cmd->add_option("--ball-cap", o.ball_cap, "Largest ball built")->check(CLI::PositiveNumber);
  auto* cube_ball = cube_cmd->add_subcommand("ball", "Ball statistics");
  cube_ball->add_flag("--stats", "Print counts only (the default)");
  cube_ball->add_flag("--tables", o.tables, "Also list vertices, edges with hyperplane ids, and squares");
  auto* cube_median = cube_cmd->add_subcommand("median", "Median of three vertices");
  cube_median->add_option("--x", o.x, "Vertex")->required();
  cube_median->add_option("--y", o.y, "Vertex")->required();
  cube_median->add_option("--z", o.z, "Vertex")->required();
  auto* cube_minset = cube_cmd->add_subcommand("minset", "Minset of an element inside the ball");
  cube_minset->add_option("--element,--g", o.element, "Group element")->required();
  auto* cube_dist = cube_cmd->add_subcommand("distcheck", "d(Min g, Min h) <= l(gh)/2");
  cube_dist->add_option("--element", o.element, "First element g")->required();
  cube_dist->add_option("--other", o.h_element, "Second element h")->required();
  auto* cube_wit = cube_cmd->add_subcommand("witness", "Vertex moved at most M by every element");
  cube_wit->add_option("--elements", o.elements, "Comma-separated elements")->required();

  auto* spine_cmd = app.add_subcommand("spine", "Spine of untwisted outer space");
  spine_cmd->require_subcommand(1);
  spine_cmd->fallthrough();
  auto* spine_simp = spine_cmd->add_subcommand("simplices", "Sets of pairwise compatible partitions");
  spine_simp->add_option("--max-size", o.max_size, "Largest simplex listed")->check(CLI::PositiveNumber);
  auto* spine_move = spine_cmd->add_subcommand("movegraph", "Whitehead move graph within a norm bound");
  spine_move->add_option("--targets", o.targets, "Comma-separated classes")->required();
  spine_move->add_option("--bound", o.bound, "Comma-separated head bound, one per target")->required();
  spine_move->add_option("--slack", o.slack, "Extra room for exploring beyond the bound");
  spine_move->add_option("--node-cap", o.node_cap, "Largest graph built")->check(CLI::PositiveNumber);
  spine_move->add_option("--export", o.export_path, "Also write the JSON report to this file");
  family_opts(spine_move);
  auto* spine_change = spine_cmd->add_subcommand("changenorm", "Check the change-of-norm identity");
  spine_change->add_option("--partition", o.partition, "Based partition")->required();
  spine_change->add_option("--targets", o.targets, "Comma-separated classes")->required();
  spine_change->add_option("--marking", o.marking, "Marking (descriptors); defaults to the identity");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (o.graph_path.empty()) throw ParseError("--graph is required");
    const DefiningGraph g = load_graph(o.graph_path);
    Report r;
    if (reduce_cmd->parsed()) r = cmd_reduce(g, o);
    else if (cyclic_cmd->parsed()) r = cmd_cyclic(g, o);
    else if (length_cmd->parsed()) r = cmd_length(g, o);
    else if (conj_cmd->parsed()) r = cmd_conj(g, o);
    else if (auto_apply->parsed()) r = cmd_auto_apply(g, o);
    else if (auto_compose->parsed()) r = cmd_auto_compose(g, o);
    else if (auto_check->parsed()) r = cmd_auto_check(g, o);
    else if (wh_enum->parsed()) r = cmd_wh_enumerate(g, o);
    else if (wh_validate->parsed()) r = cmd_wh_validate(g, o);
    else if (wh_apply->parsed()) r = cmd_wh_apply(g, o);
    else if (wh_quad->parsed()) r = cmd_wh_quadrants(g, o);
    else if (wh_rel->parsed()) r = cmd_wh_relcond(g, o);
    else if (wh_cross->parsed()) r = cmd_wh_cross(g, o);
    else if (min_cmd->parsed()) r = cmd_minimize(g, o);
    else if (eq_cmd->parsed()) r = cmd_equivalent(g, o);
    else if (expand_cmd->parsed()) r = cmd_expand_fixed(g, o);
    else if (app.got_subcommand("auter-embed")) r = cmd_auter_embed(g, o);
    else if (cube_ball->parsed()) r = cmd_cube_ball(g, o);
    else if (cube_median->parsed()) r = cmd_cube_median(g, o);
    else if (cube_minset->parsed()) r = cmd_cube_minset(g, o);
    else if (cube_dist->parsed()) r = cmd_cube_distcheck(g, o);
    else if (cube_wit->parsed()) r = cmd_cube_witness(g, o);
    else if (spine_simp->parsed()) r = cmd_spine_simplices(g, o);
    else if (spine_move->parsed()) r = cmd_spine_movegraph(g, o);
    else if (spine_change->parsed()) r = cmd_spine_changenorm(g, o);
    else throw ParseError("no command given");
    render(out, r, o.json);
    return r.status;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitParse;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const InvariantError& e) {
    err << "internal invariant breach: " << e.what() << "\n";
    repro_dump(err, args, o);
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    repro_dump(err, args, o);
    return kExitInvariant;
  }
}

}  // namespace raag::cli
