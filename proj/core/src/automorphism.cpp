#include "raag/automorphism.hpp"

#include <algorithm>

#include "raag/error.hpp"
#include "raag/partition.hpp"

namespace raag {

namespace {

void require_same_graph(const DefiningGraph& g, const Automorphism& f) {
  if (f.graph_fingerprint() != g.fingerprint() || f.rank() != g.vertex_count()) {
    throw InvalidArgument("automorphism was built over a different graph");
  }
}

Word substitute(const DefiningGraph& g, const std::vector<Word>& images,
                const std::vector<Word>& inverse_of_images, const Word& w) {
  Word out;
  for (Letter x : w) {
    out.append(x.is_inverse() ? inverse_of_images[x.vertex()] : images[x.vertex()]);
  }
  return reduce(g, out);
}

std::vector<Word> inverted_words(const std::vector<Word>& ws) {
  std::vector<Word> out;
  out.reserve(ws.size());
  for (const Word& w : ws) out.push_back(w.inverse());
  return out;
}

std::string vertex_list(const DefiningGraph& g, VertexSet vs) {
  std::string out = "{";
  bool first = true;
  vs.for_each([&](VertexId v) {
    if (!first) out += ",";
    out += g.name(v);
    first = false;
  });
  return out + "}";
}

std::string letter_list(const DefiningGraph& g, LetterSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Letter x) {
    if (!first) out += ",";
    out += g.letter_name(x);
    first = false;
  });
  return out + "}";
}

void check_vertex(const DefiningGraph& g, VertexId v) {
  if (v >= g.vertex_count()) throw InvalidArgument("vertex index out of range");
}

}  // namespace

bool is_twist(const DefiningGraph& g, const GeneratorDescriptor& d) {
  return d.kind == GeneratorKind::transvection && g.adjacent(d.vertex, d.letter.vertex());
}

GeneratorDescriptor inverse_descriptor(const DefiningGraph& g, const GeneratorDescriptor& d) {
  GeneratorDescriptor inv = d;
  switch (d.kind) {
    case GeneratorKind::inversion:
    case GeneratorKind::whitehead:
      break;
    case GeneratorKind::transvection:
    case GeneratorKind::partial_conjugation:
      inv.letter = d.letter.inverse();
      break;
    case GeneratorKind::graph_permutation: {
      inv.permutation.assign(g.vertex_count(), Letter{});
      for (VertexId v = 0; v < d.permutation.size(); ++v) {
        const Letter y = d.permutation[v];
        inv.permutation[y.vertex()] = Letter::make(v, y.is_inverse());
      }
      break;
    }
  }
  return inv;
}

std::string describe(const DefiningGraph& g, const GeneratorDescriptor& d) {
  switch (d.kind) {
    case GeneratorKind::inversion:
      return "inv " + g.name(d.vertex);
    case GeneratorKind::graph_permutation: {
      std::string out = "perm";
      for (VertexId v = 0; v < d.permutation.size(); ++v) {
        out += " " + g.name(v) + ":" + g.letter_name(d.permutation[v]);
      }
      return out;
    }
    case GeneratorKind::transvection:
      return std::string(is_twist(g, d) ? "twist " : "fold ") + g.name(d.vertex) + " " +
             g.letter_name(d.letter);
    case GeneratorKind::partial_conjugation:
      return "pconj " + g.letter_name(d.letter) + " " + vertex_list(g, d.moved);
    case GeneratorKind::whitehead: {
      const LetterSet link = g.link(d.letter);
      const LetterSet other = g.alphabet() - d.side - link;
      return "whp P=" + letter_list(g, d.side) + " Pstar=" + letter_list(g, other) +
             " base=" + g.letter_name(d.letter);
    }
  }
  return {};
}

Automorphism Automorphism::identity(const DefiningGraph& g) {
  Automorphism f;
  for (VertexId v = 0; v < g.vertex_count(); ++v) f.images_.push_back(Word::of(Letter::positive(v)));
  f.inverse_images_ = f.images_;
  f.factorization_ = std::vector<GeneratorDescriptor>{};
  f.fingerprint_ = g.fingerprint();
  return f;
}

Automorphism Automorphism::from_images(const DefiningGraph& g, std::vector<Word> images,
                                       std::vector<Word> inverse_images) {
  const std::size_t n = g.vertex_count();
  if (images.size() != n || inverse_images.size() != n) {
    throw InvalidArgument("expected one image per generator");
  }
  for (auto& w : images) w = reduce(g, w);
  for (auto& w : inverse_images) w = reduce(g, w);
  const auto images_inv = inverted_words(images);
  const auto inverse_images_inv = inverted_words(inverse_images);
  for (VertexId v = 0; v < n; ++v) {
    const Word gen = Word::of(Letter::positive(v));
    if (substitute(g, inverse_images, inverse_images_inv, images[v]) != gen ||
        substitute(g, images, images_inv, inverse_images[v]) != gen) {
      throw InvalidArgument("supplied inverse images do not invert the images at generator " +
                            g.name(v));
    }
  }
  for (auto [u, v] : g.edges()) {
    for (const auto* im : {&images, &inverse_images}) {
      const Word& a = (*im)[u];
      const Word& b = (*im)[v];
      if (!reduce(g, a * b * a.inverse() * b.inverse()).empty()) {
        throw InvalidArgument("images do not preserve the relation [" + g.name(u) + "," +
                              g.name(v) + "]");
      }
    }
  }
  Automorphism f;
  f.images_ = std::move(images);
  f.inverse_images_ = std::move(inverse_images);
  f.fingerprint_ = g.fingerprint();
  return f;
}

Automorphism Automorphism::from_descriptor(const DefiningGraph& g, const GeneratorDescriptor& d) {
  Automorphism f = identity(g);
  const std::size_t n = g.vertex_count();
  switch (d.kind) {
    case GeneratorKind::inversion:
      check_vertex(g, d.vertex);
      f.images_[d.vertex] = Word::of(Letter::negative(d.vertex));
      f.inverse_images_ = f.images_;
      break;
    case GeneratorKind::graph_permutation: {
      if (!is_valid_signed_permutation(g, d.permutation)) {
        throw InvalidArgument("not an adjacency-preserving signed permutation of the generators");
      }
      for (VertexId v = 0; v < n; ++v) {
        const Letter y = d.permutation[v];
        f.images_[v] = Word::of(y);
        f.inverse_images_[y.vertex()] = Word::of(Letter::make(v, y.is_inverse()));
      }
      break;
    }
    case GeneratorKind::transvection: {
      check_vertex(g, d.vertex);
      check_vertex(g, d.letter.vertex());
      const VertexId v1 = d.vertex;
      const VertexId v2 = d.letter.vertex();
      if (v1 == v2) throw InvalidArgument("transvection needs two distinct generators");
      if (!g.neighbors(v1).is_subset_of(g.star(v2))) {
        throw InvalidArgument("transvection " + g.name(v1) + " -> " + g.name(v1) + " " +
                              g.letter_name(d.letter) + " is not well defined: lk(" +
                              g.name(v1) + ") does not centralize " + g.name(v2));
      }
      f.images_[v1] = Word({Letter::positive(v1), d.letter});
      f.inverse_images_[v1] = Word({Letter::positive(v1), d.letter.inverse()});
      break;
    }
    case GeneratorKind::partial_conjugation: {
      check_vertex(g, d.letter.vertex());
      if (!d.moved.is_subset_of(g.all_vertices())) throw InvalidArgument("vertex out of range");
      const VertexSet outside = g.all_vertices() - g.star(d.letter.vertex());
      for (VertexId u = 0; u < n; ++u) {
        if (!outside.contains(u)) continue;
        const VertexSet bad = (g.neighbors(u) & outside) & VertexSet(d.moved.contains(u) ? ~d.moved.bits() : d.moved.bits());
        if (!bad.empty()) {
          throw InvalidArgument("partial conjugation is not well defined: " + g.name(u) + " and " +
                                g.name(bad.front()) + " commute with each other but not with " +
                                g.name(d.letter.vertex()) + ", and only one of them is moved");
        }
      }
      const Letter x = d.letter;
      d.moved.for_each([&](VertexId w) {
        const Letter y = Letter::positive(w);
        f.images_[w] = reduce(g, Word({x, y, x.inverse()}));
        f.inverse_images_[w] = reduce(g, Word({x.inverse(), y, x}));
      });
      break;
    }
    case GeneratorKind::whitehead: {
      const Letter b = d.letter;
      check_vertex(g, b.vertex());
      const LetterSet link = g.link(b);
      const LetterSet other = g.alphabet() - d.side - link;
      const auto report = validate_based(g, d.side, other, link, b);
      if (!report.empty()) {
        throw InvalidArgument("invalid based Whitehead partition: " + report.front());
      }
      for (VertexId v = 0; v < n; ++v) {
        const Letter x = Letter::positive(v);
        Word im;
        if (v == b.vertex()) {
          im = Word::of(x.inverse());
        } else if (link.contains(x)) {
          im = Word::of(x);
        } else {
          const bool x_in_p = d.side.contains(x);
          const bool inv_in_p = d.side.contains(x.inverse());
          if (x_in_p && inv_in_p) {
            im = Word({b, x, b.inverse()});
          } else if (x_in_p) {
            im = Word({x, b.inverse()});
          } else if (inv_in_p) {
            im = Word({b, x});
          } else {
            im = Word::of(x);
          }
        }
        f.images_[v] = reduce(g, im);
      }
      // Whitehead automorphisms are involutions.
      f.inverse_images_ = f.images_;
      break;
    }
  }
  f.factorization_ = std::vector<GeneratorDescriptor>{d};
  return f;
}

Automorphism Automorphism::from_sequence(const DefiningGraph& g,
                                         const std::vector<GeneratorDescriptor>& seq) {
  Automorphism f = identity(g);
  for (const auto& d : seq) f = compose(g, f, from_descriptor(g, d));
  return f;
}

Automorphism Automorphism::inverse(const DefiningGraph& g) const {
  require_same_graph(g, *this);
  Automorphism f;
  f.images_ = inverse_images_;
  f.inverse_images_ = images_;
  f.fingerprint_ = fingerprint_;
  if (factorization_) {
    std::vector<GeneratorDescriptor> inv;
    for (auto it = factorization_->rbegin(); it != factorization_->rend(); ++it) {
      inv.push_back(inverse_descriptor(g, *it));
    }
    f.factorization_ = std::move(inv);
  }
  return f;
}

bool Automorphism::untwisted_by_construction(const DefiningGraph& g) const {
  if (!factorization_) return false;
  return std::none_of(factorization_->begin(), factorization_->end(),
                      [&](const GeneratorDescriptor& d) { return is_twist(g, d); });
}

Automorphism make_inversion(const DefiningGraph& g, VertexId v) {
  GeneratorDescriptor d;
  d.kind = GeneratorKind::inversion;
  d.vertex = v;
  return Automorphism::from_descriptor(g, d);
}

Automorphism make_graph_permutation(const DefiningGraph& g, const SignedPermutation& perm) {
  GeneratorDescriptor d;
  d.kind = GeneratorKind::graph_permutation;
  d.permutation = perm;
  return Automorphism::from_descriptor(g, d);
}

Automorphism make_transvection(const DefiningGraph& g, VertexId v1, Letter multiplier) {
  GeneratorDescriptor d;
  d.kind = GeneratorKind::transvection;
  d.vertex = v1;
  d.letter = multiplier;
  return Automorphism::from_descriptor(g, d);
}

Automorphism make_partial_conjugation(const DefiningGraph& g, Letter x, VertexSet moved) {
  GeneratorDescriptor d;
  d.kind = GeneratorKind::partial_conjugation;
  d.letter = x;
  d.moved = moved;
  return Automorphism::from_descriptor(g, d);
}

Word apply(const DefiningGraph& g, const Automorphism& f, const Word& w) {
  require_same_graph(g, f);
  Word out;
  for (Letter x : w) {
    const Word& im = f.image(x.vertex());
    out.append(x.is_inverse() ? im.inverse() : im);
  }
  return reduce(g, out);
}

Word apply_inverse(const DefiningGraph& g, const Automorphism& f, const Word& w) {
  require_same_graph(g, f);
  Word out;
  for (Letter x : w) {
    const Word& im = f.inverse_image(x.vertex());
    out.append(x.is_inverse() ? im.inverse() : im);
  }
  return reduce(g, out);
}

Automorphism compose(const DefiningGraph& g, const Automorphism& f, const Automorphism& h) {
  require_same_graph(g, f);
  require_same_graph(g, h);
  Automorphism out;
  out.fingerprint_ = f.fingerprint_;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out.images_.push_back(apply(g, f, h.image(v)));
    out.inverse_images_.push_back(apply_inverse(g, h, f.inverse_image(v)));
  }
  if (f.factorization_ && h.factorization_) {
    std::vector<GeneratorDescriptor> seq = *f.factorization_;
    seq.insert(seq.end(), h.factorization_->begin(), h.factorization_->end());
    out.factorization_ = std::move(seq);
  }
  return out;
}

bool is_valid_signed_permutation(const DefiningGraph& g, const SignedPermutation& perm) {
  const std::size_t n = g.vertex_count();
  if (perm.size() != n) return false;
  VertexSet hit;
  for (Letter y : perm) {
    if (y.vertex() >= n || hit.contains(y.vertex())) return false;
    hit.insert(y.vertex());
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) != g.adjacent(perm[u].vertex(), perm[v].vertex())) return false;
    }
  }
  return true;
}

Simplicity is_simple(const DefiningGraph& g, const Automorphism& f) {
  require_same_graph(g, f);
  std::vector<VertexSet> supports;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const VertexSet s = support(cyclic_reduce(g, f.image(v)));
    if (!s.contains(v)) return Simplicity::inapplicable;
    supports.push_back(s);
  }
  for (VertexSet s : supports) {
    if (g.is_nontrivial_join(s)) return Simplicity::not_simple;
  }
  return Simplicity::simple;
}

namespace {

// Intersects the coset c * A_X with d * A_Y in place. Returns false when empty.
bool intersect_cosets(const DefiningGraph& g, Word& c, VertexSet& x_set, const Word& d,
                      VertexSet y_set) {
  std::vector<Letter> h = reduce(g, c.inverse() * d).letters();
  Word prefix;
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (!x_set.contains(h[i].vertex())) continue;
      bool front = true;
      for (std::size_t j = 0; j < i && front; ++j) front = g.independent(h[j], h[i]);
      if (!front) continue;
      prefix.push_back(h[i]);
      h.erase(h.begin() + static_cast<std::ptrdiff_t>(i));
      stripped = true;
      break;
    }
  }
  if (!support(Word(h)).is_subset_of(y_set)) return false;
  c = reduce(g, c * prefix);
  x_set &= y_set;
  return true;
}

}  // namespace

std::optional<InnerDecomposition> inner_times_graph_permutation(const DefiningGraph& g,
                                                                const Automorphism& f) {
  require_same_graph(g, f);
  const std::size_t n = g.vertex_count();
  InnerDecomposition out;
  std::vector<Word> conjugators;
  for (VertexId v = 0; v < n; ++v) {
    CyclicReduction cr = cyclic_reduce_with_conjugator(g, f.image(v));
    if (cr.core.size() != 1) return std::nullopt;
    out.permutation.push_back(cr.core[0]);
    conjugators.push_back(std::move(cr.conjugator));
  }
  if (!is_valid_signed_permutation(g, out.permutation)) return std::nullopt;
  // Conjugators c with c y c^{-1} = f(v) form the coset p_v * C(y), and the
  // centralizer of a generator is the standard subgroup on its star.
  Word c;
  VertexSet x_set = g.all_vertices();
  for (VertexId v = 0; v < n; ++v) {
    if (!intersect_cosets(g, c, x_set, conjugators[v], g.star(out.permutation[v].vertex()))) {
      return std::nullopt;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (reduce(g, c * Word::of(out.permutation[v]) * c.inverse()) != f.image(v)) {
      throw InvariantError("coset intersection produced a conjugator that does not conjugate");
    }
  }
  out.conjugator = std::move(c);
  return out;
}

bool is_inner(const DefiningGraph& g, const Automorphism& f) {
  auto dec = inner_times_graph_permutation(g, f);
  if (!dec) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (dec->permutation[v] != Letter::positive(v)) return false;
  }
  return true;
}

bool is_graph_perm_equivalent(const DefiningGraph& g, const Automorphism& f, const Automorphism& h) {
  return inner_times_graph_permutation(g, compose(g, f.inverse(g), h)).has_value();
}

}  // namespace raag
