#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ggd/monodromy.hpp"

namespace ggd {

/// A subset of the morphisms of one groupoid.
class MorphismSet {
 public:
  MorphismSet() = default;
  MorphismSet(std::span<const Mor> members, std::size_t universe);
  static MorphismSet all(const Groupoid& g);
  static MorphismSet identities(const Groupoid& g);

  bool contains(Mor g) const {
    return idx(g) < mask_.size() && mask_[idx(g)];
  }
  const std::vector<Mor>& members() const noexcept { return members_; }
  const std::vector<bool>& mask() const noexcept { return mask_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool operator==(const MorphismSet&) const = default;

 private:
  std::vector<bool> mask_;
  std::vector<Mor> members_;
};

/// W² = { u∘v : u, v ∈ W composable }.
MorphismSet square(const Groupoid& g, const MorphismSet& w);

/// Element of the free groupoid on W: letters are non-identity members of
/// W forming a composable chain from `source`. The empty word is the
/// identity at `source`.
struct Word {
  Obj source;
  std::vector<Mor> letters;
  auto operator<=>(const Word&) const = default;
};

/// Builds a word, dropping identity letters; throws PreconditionError when
/// a letter is outside W or the chain is not composable.
Word make_word(const Groupoid& g, const MorphismSet& w, Obj source,
               std::span<const Mor> letters);
Obj word_target(const Groupoid& g, const Word& w);
/// Groupoid product of the letters in G.
Mor evaluate(const Groupoid& g, const Word& w);
Word concatenate(const Groupoid& g, const Word& a, const Word& b);
Word invert(const Groupoid& g, const Word& w);

/// Cancels identity letters and adjacent inverse pairs.
Word free_reduce(const Groupoid& g, const Word& w);
/// Left-to-right merge of adjacent letters u, v with u∘v ∈ W, then
/// free reduction. Sound in M(G,W), but not a decision procedure.
Word fold(const Groupoid& g, const MorphismSet& w, const Word& word);

/// All words of length ≤ max_len from every object, in lexicographic
/// order of (source, letters).
std::vector<Word> enumerate_words(const Groupoid& g, const MorphismSet& w,
                                  std::size_t max_len);

/// Checks that W contains the identities, is closed under inversion,
/// induces connected subgraphs of the stars through the identities and
/// generates G; that the stars are connected; and that V (default W ∪ W²)
/// contains W ∪ W² and meets every star in a tree through the identity.
Report check_hypotheses(const StarredGroupoid& sg, const MorphismSet& w,
                        const std::optional<MorphismSet>& v = std::nullopt);

/// M(G,W) = F(W)/N with equality decided through μ: M(G,W) → Mon(G).
class Presentation {
 public:
  /// Throws ValidationError when check_hypotheses fails.
  Presentation(const StarredGroupoid& sg, MorphismSet w,
               std::optional<MorphismSet> v = std::nullopt);

  const StarredGroupoid& ambient() const noexcept { return *sg_; }
  const Groupoid& groupoid() const noexcept { return sg_->groupoid(); }
  const MorphismSet& w() const noexcept { return w_; }
  const MorphismSet& v() const noexcept { return v_; }
  const MonGroupoid& mon() const noexcept { return mon_; }

  Word word(Obj source, std::span<const Mor> letters) const {
    return make_word(groupoid(), w_, source, letters);
  }
  /// The reduced path from the identity to u inside the tree V_x.
  MonMor lift(Mor u) const;
  /// μ(w): composite in Mon of the letter lifts.
  MonMor to_mon(const Word& w) const;
  bool equal(const Word& a, const Word& b) const;

 private:
  const StarredGroupoid* sg_;
  MorphismSet w_;
  MorphismSet v_;
  MonGroupoid mon_;
  std::vector<Mor> tree_parent_;
};

}  // namespace ggd
