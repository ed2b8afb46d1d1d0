#pragma once

#include <optional>
#include <string>
#include <vector>

#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag {

enum class GeneratorKind { inversion, graph_permutation, transvection, partial_conjugation, whitehead };

/// Image of each positive generator under a signed graph permutation.
using SignedPermutation = std::vector<Letter>;

/// One elementary generator of the automorphism group. Only the fields used by
/// `kind` are meaningful.
struct GeneratorDescriptor {
  GeneratorKind kind = GeneratorKind::inversion;
  /// inversion: the inverted generator. transvection: the generator v1 that moves.
  VertexId vertex = 0;
  /// transvection: right multiplier (v1 -> v1 * letter).
  /// partial_conjugation: conjugating letter (w -> letter * w * letter^{-1}).
  /// whitehead: basepoint.
  Letter letter;
  SignedPermutation permutation;
  /// partial_conjugation: the conjugated generators.
  VertexSet moved;
  /// whitehead: the side containing the basepoint.
  LetterSet side;

  bool operator==(const GeneratorDescriptor&) const = default;
};

/// A transvection is a twist when its two generators commute.
bool is_twist(const DefiningGraph& g, const GeneratorDescriptor& d);

/// The descriptor of the inverse generator.
GeneratorDescriptor inverse_descriptor(const DefiningGraph& g, const GeneratorDescriptor& d);

/// Text form accepted back by the descriptor parser, e.g. `fold a b^-1`.
std::string describe(const DefiningGraph& g, const GeneratorDescriptor& d);

/// An automorphism given by the images of the standard generators together
/// with a certified inverse.
class Automorphism {
 public:
  static Automorphism identity(const DefiningGraph& g);

  /// Builds from explicit images. Verifies that both compositions are the
  /// identity on generators and that every defining relation is preserved;
  /// throws InvalidArgument otherwise.
  static Automorphism from_images(const DefiningGraph& g, std::vector<Word> images,
                                  std::vector<Word> inverse_images);

  /// Validates the descriptor and builds the generator.
  static Automorphism from_descriptor(const DefiningGraph& g, const GeneratorDescriptor& d);

  /// Composition d[0] o d[1] o ... of validated descriptors.
  static Automorphism from_sequence(const DefiningGraph& g,
                                    const std::vector<GeneratorDescriptor>& seq);

  std::size_t rank() const { return images_.size(); }
  const Word& image(VertexId v) const { return images_.at(v); }
  const Word& inverse_image(VertexId v) const { return inverse_images_.at(v); }
  const std::vector<Word>& images() const { return images_; }
  const std::vector<Word>& inverse_images() const { return inverse_images_; }

  /// Present when built from descriptors; the automorphism is
  /// factorization[0] o factorization[1] o ...
  const std::optional<std::vector<GeneratorDescriptor>>& factorization() const {
    return factorization_;
  }
  std::size_t graph_fingerprint() const { return fingerprint_; }

  /// Swaps images and inverse images; the factorization is reversed and inverted.
  Automorphism inverse(const DefiningGraph& g) const;

  /// True when a factorization exists and contains no twist.
  bool untwisted_by_construction(const DefiningGraph& g) const;

  /// Exact equality of reduced generator images.
  bool operator==(const Automorphism& other) const {
    return images_ == other.images_ && fingerprint_ == other.fingerprint_;
  }

 private:
  friend Automorphism compose(const DefiningGraph&, const Automorphism&, const Automorphism&);
  Automorphism() = default;

  std::vector<Word> images_;
  std::vector<Word> inverse_images_;
  std::optional<std::vector<GeneratorDescriptor>> factorization_;
  std::size_t fingerprint_ = 0;
};

Automorphism make_inversion(const DefiningGraph& g, VertexId v);
/// Throws InvalidArgument unless `perm` is a signed bijection preserving adjacency.
Automorphism make_graph_permutation(const DefiningGraph& g, const SignedPermutation& perm);
/// v1 -> v1 * multiplier. Requires lk(v1) inside lk(v2) together with v2^{+-}.
Automorphism make_transvection(const DefiningGraph& g, VertexId v1, Letter multiplier);
/// w -> x w x^{-1} for w in `moved`. Generators that commute with each other but
/// not with x must lie on the same side of `moved`.
Automorphism make_partial_conjugation(const DefiningGraph& g, Letter x, VertexSet moved);

/// Substitutes images letterwise and reduces.
Word apply(const DefiningGraph& g, const Automorphism& f, const Word& w);
/// Applies f^{-1} using the stored inverse images.
Word apply_inverse(const DefiningGraph& g, const Automorphism& f, const Word& w);

/// f o h: first h, then f. Throws InvalidArgument when built over different graphs.
Automorphism compose(const DefiningGraph& g, const Automorphism& f, const Automorphism& h);

/// Checks a signed permutation: bijective on generators, adjacency preserving.
bool is_valid_signed_permutation(const DefiningGraph& g, const SignedPermutation& perm);

enum class Simplicity { simple, not_simple, inapplicable };
Simplicity is_simple(const DefiningGraph& g, const Automorphism& f);

/// When f = (conjugation by c) o (signed graph permutation), returns the
/// permutation and the conjugator. Exact; no search radius involved.
struct InnerDecomposition {
  SignedPermutation permutation;
  Word conjugator;
};
std::optional<InnerDecomposition> inner_times_graph_permutation(const DefiningGraph& g,
                                                                const Automorphism& f);

bool is_inner(const DefiningGraph& g, const Automorphism& f);

/// True iff f^{-1} o h is an inner automorphism composed with a signed graph
/// permutation, so the two markings define the same marked Salvetti.
bool is_graph_perm_equivalent(const DefiningGraph& g, const Automorphism& f, const Automorphism& h);

}  // namespace raag
