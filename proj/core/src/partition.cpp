#include "raag/partition.hpp"

#include <algorithm>
#include <map>

#include "raag/error.hpp"

namespace raag {

Classification classify(const WhiteheadPartition& p) {
  Classification c;
  c.double_p = p.side_p & inverted(p.side_p);
  c.double_q = p.side_q & inverted(p.side_q);
  c.single = (p.side_p & inverted(p.side_q)) | (p.side_q & inverted(p.side_p));
  return c;
}

WhiteheadPartition WhiteheadPartition::normalized() const {
  const LetterSet single = classify(*this).single;
  if (single.empty() || side_p.contains(single.front())) return *this;
  return swapped();
}

bool WhiteheadPartition::same_partition(const WhiteheadPartition& other) const {
  return link == other.link && ((side_p == other.side_p && side_q == other.side_q) ||
                                (side_p == other.side_q && side_q == other.side_p));
}

std::vector<std::string> validate_based(const DefiningGraph& g, LetterSet side_p, LetterSet side_q,
                                        LetterSet link, Letter b) {
  std::vector<std::string> report;
  const LetterSet alphabet = g.alphabet();
  if (side_p.intersects(side_q) || side_p.intersects(link) || side_q.intersects(link) ||
      (side_p | side_q | link) != alphabet) {
    report.emplace_back("P, P* and L do not partition the signed alphabet");
    return report;
  }
  if (!side_p.contains(b)) report.push_back("basepoint " + g.letter_name(b) + " is not in P");
  if (!side_q.contains(b.inverse())) {
    report.push_back("inverse basepoint " + g.letter_name(b.inverse()) + " is not in P*");
  }
  if (link != g.link(b)) report.push_back("L is not the link of the basepoint");
  (side_p & inverted(side_q)).for_each([&](Letter x) {
    if (!g.link(x).is_subset_of(link)) {
      report.push_back("split letter " + g.letter_name(x) + " has a link not contained in L");
    }
  });
  side_p.for_each([&](Letter x) {
    LetterSet commuting = letters_over(g.star(x.vertex()));
    commuting.erase(x.inverse());
    const LetterSet bad = side_q & commuting;
    if (!bad.empty()) {
      report.push_back(g.letter_name(x) + " in P commutes with " + g.letter_name(bad.front()) +
                       " in P*");
    }
  });
  if (side_p.size() < 2) report.emplace_back("P has fewer than two elements");
  if (side_q.size() < 2) report.emplace_back("P* has fewer than two elements");
  return report;
}

std::vector<std::string> validate_based(const DefiningGraph& g, const BasedPartition& bp) {
  return validate_based(g, bp.partition.side_p, bp.partition.side_q, bp.partition.link, bp.base);
}

BasedPartition based_from_side(const DefiningGraph& g, LetterSet side, Letter base) {
  const LetterSet link = g.link(base);
  BasedPartition bp{{side, g.alphabet() - side - link, link}, base};
  if (!side.is_subset_of(g.alphabet()) || side.intersects(link)) {
    throw InvalidArgument("side meets the link of the basepoint or lies outside the alphabet");
  }
  const auto report = validate_based(g, bp);
  if (!report.empty()) throw InvalidArgument("invalid based Whitehead partition: " + report.front());
  return bp;
}

std::vector<Letter> basepoints(const DefiningGraph& g, const WhiteheadPartition& p) {
  std::vector<Letter> out;
  (p.side_p | p.side_q).for_each([&](Letter b) {
    const WhiteheadPartition view = p.side_p.contains(b) ? p : p.swapped();
    if (validate_based(g, view.side_p, view.side_q, view.link, b).empty()) out.push_back(b);
  });
  return out;
}

Automorphism whitehead_automorphism(const DefiningGraph& g, const BasedPartition& bp) {
  const auto report = validate_based(g, bp);
  if (!report.empty()) throw InvalidArgument("invalid based Whitehead partition: " + report.front());
  GeneratorDescriptor d;
  d.kind = GeneratorKind::whitehead;
  d.letter = bp.base;
  d.side = bp.partition.side_p;
  return Automorphism::from_descriptor(g, d);
}

bool adjacent(const DefiningGraph& g, const WhiteheadPartition& p, const WhiteheadPartition& q) {
  const auto bp = basepoints(g, p);
  const auto bq = basepoints(g, q);
  for (Letter x : bp) {
    for (Letter y : bq) {
      if (g.adjacent(x.vertex(), y.vertex())) return true;
    }
  }
  return false;
}

bool compatible(const DefiningGraph& g, const WhiteheadPartition& p, const WhiteheadPartition& q) {
  if (p.same_partition(q)) throw InvalidArgument("compatibility is undefined for identical partitions");
  if (adjacent(g, p, q)) return true;
  int empty = 0;
  for (LetterSet a : {p.side_p, p.side_q}) {
    for (LetterSet b : {q.side_p, q.side_q}) {
      if (!a.intersects(b)) ++empty;
    }
  }
  return empty == 1;
}

namespace {

bool canonical_less(const WhiteheadPartition& a, const WhiteheadPartition& b) {
  const auto ap = a.side_p.to_vector();
  const auto bp = b.side_p.to_vector();
  if (ap != bp) return ap < bp;
  return a.link.to_vector() < b.link.to_vector();
}

}  // namespace

std::vector<EnumeratedPartition> enumerate_partitions(const DefiningGraph& g,
                                                      std::size_t max_free_letters) {
  std::map<WhiteheadPartition, std::vector<Letter>> found;
  const LetterSet alphabet = g.alphabet();
  alphabet.for_each([&](Letter b) {
    const LetterSet link = g.link(b);
    LetterSet rest = alphabet - link;
    rest.erase(b);
    rest.erase(b.inverse());
    const auto free = rest.to_vector();
    if (free.size() > max_free_letters) {
      throw CapExceeded("partition enumeration would try 2^" + std::to_string(free.size()) +
                        " sides per basepoint");
    }
    const std::uint64_t count = std::uint64_t{1} << free.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      LetterSet side;
      side.insert(b);
      for (std::size_t i = 0; i < free.size(); ++i) {
        if ((mask >> i) & 1U) side.insert(free[i]);
      }
      const LetterSet other = alphabet - side - link;
      if (!validate_based(g, side, other, link, b).empty()) continue;
      found[WhiteheadPartition{side, other, link}.normalized()].push_back(b);
    }
  });
  std::vector<EnumeratedPartition> out;
  out.reserve(found.size());
  for (auto& [p, bases] : found) {
    std::sort(bases.begin(), bases.end());
    out.push_back({p, std::move(bases)});
  }
  std::sort(out.begin(), out.end(), [](const EnumeratedPartition& a, const EnumeratedPartition& b) {
    return canonical_less(a.partition, b.partition);
  });
  return out;
}

std::vector<BasedPartition> enumerate_based(const DefiningGraph& g) {
  std::vector<BasedPartition> out;
  for (const auto& e : enumerate_partitions(g)) {
    for (Letter b : e.basepoints) {
      out.push_back({e.partition.side_p.contains(b) ? e.partition : e.partition.swapped(), b});
    }
  }
  return out;
}

namespace {

// A side reduced to the basepoint alone gives the identity automorphism; such
// outputs are counted in `trivial` and dropped.
void emit(const DefiningGraph& g, LetterSet side, Letter base, std::vector<BasedPartition>& out,
          std::size_t* trivial) {
  if (side == LetterSet{base}) {
    if (trivial != nullptr) ++*trivial;
    return;
  }
  try {
    out.push_back(based_from_side(g, side, base));
  } catch (const InvalidArgument& e) {
    throw InvariantError(std::string("quadrant construction produced an invalid partition: ") +
                         e.what());
  }
}

}  // namespace

std::vector<BasedPartition> quadrant_partitions(const DefiningGraph& g, const BasedPartition& p,
                                                const BasedPartition& q, std::size_t* trivial) {
  for (const auto* bp : {&p, &q}) {
    const auto report = validate_based(g, *bp);
    if (!report.empty()) throw InvalidArgument("invalid based Whitehead partition: " + report.front());
  }
  if (compatible(g, p.partition, q.partition)) {
    throw InvalidArgument("quadrant construction needs non-compatible partitions");
  }
  const std::pair<const BasedPartition*, const BasedPartition*> roles[] = {{&p, &q}, {&q, &p}};
  for (const auto& [first, second] : roles) {
    for (const BasedPartition& bp : {*first, first->exchanged()}) {
      for (const BasedPartition& bq : {*second, second->exchanged()}) {
        const LetterSet P = bp.partition.side_p;
        const LetterSet Ps = bp.partition.side_q;
        const LetterSet Q = bq.partition.side_p;
        const LetterSet Qs = bq.partition.side_q;
        const Letter v = bp.base;
        const Letter w = bq.base;
        const Classification cp = classify(bp.partition);
        const Classification cq = classify(bq.partition);
        std::vector<BasedPartition> out;
        if (cq.double_p.contains(v) && P.contains(w.inverse())) {
          emit(g, P & Qs, w.inverse(), out, trivial);
          emit(g, Ps & Q, v.inverse(), out, trivial);
          return out;
        }
        if (cq.single.contains(v) && cp.single.contains(w) && Q.contains(v)) {
          emit(g, P & Q, v, out, trivial);
          emit(g, Ps & Qs, v.inverse(), out, trivial);
          return out;
        }
      }
    }
  }
  throw InvalidArgument("no case of the quadrant construction applies to these partitions");
}

bool relative_condition(const DefiningGraph& /*g*/, const BasedPartition& bp,
                        const std::vector<VertexSet>& family) {
  const Classification c = classify(bp.partition);
  for (VertexSet delta : family) {
    if (delta.contains(bp.base.vertex())) continue;
    const LetterSet letters = letters_over(delta);
    if (c.single.intersects(letters)) return false;
    if (c.double_p.intersects(letters) && c.double_q.intersects(letters)) return false;
  }
  return true;
}

std::size_t crossing_count(const DefiningGraph& g, const WhiteheadPartition& p, const Word& w) {
  const Word core = cyclic_reduce(g, w);
  std::vector<Letter> kept;
  for (Letter x : core) {
    if (!p.link.contains(x)) kept.push_back(x);
  }
  // A letter x is traversed from the side holding x^{-1} to the side holding
  // x; the loop crosses the hyperplane wherever consecutive letters disagree.
  std::size_t count = 0;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const Letter next = kept[(i + 1) % kept.size()];
    if (p.side_p.contains(kept[i]) != p.side_p.contains(next.inverse())) ++count;
  }
  return count;
}

}  // namespace raag
