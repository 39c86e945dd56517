#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ggd/presentation.hpp"

namespace ggd {

/// A map f: W → H defined near the identities of G. Objects of G are
/// identified with the objects of H of the same name.
class LocalMorphism {
 public:
  /// `values` is indexed by morphisms of G; kNoMor where f is undefined.
  LocalMorphism(const StarredGroupoid& source, MorphismSet domain,
                const StarredGroupoid& target, std::vector<Mor> values);
  /// Builds from (u, f(u)) name pairs; throws PreconditionError for names
  /// unknown to G or H.
  static LocalMorphism from_names(
      const StarredGroupoid& source, MorphismSet domain,
      const StarredGroupoid& target,
      std::span<const std::pair<std::string, std::string>> pairs);

  const StarredGroupoid& source() const noexcept { return *source_; }
  const StarredGroupoid& target() const noexcept { return *target_; }
  const MorphismSet& domain() const noexcept { return domain_; }
  /// kNoMor outside the domain.
  Mor operator()(Mor u) const { return values_[idx(u)]; }
  /// The object of H with the same name as x, or kNoObj.
  Obj object_image(Obj x) const { return objects_[idx(x)]; }

 private:
  const StarredGroupoid* source_;
  const StarredGroupoid* target_;
  MorphismSet domain_;
  std::vector<Mor> values_;
  std::vector<Obj> objects_;
};

/// Identity on objects, compatible with source and target, and
/// f(u∘v) = f(u)∘f(v) (and f(uv) = f(u)f(v) for group-groupoids) whenever
/// u, v and the composite lie in W.
Report validate_local_morphism(const LocalMorphism& f);

enum class TieBreak { lexicographic, reverse_lexicographic };

/// The globalization f̃ of a valid local morphism: on words of M(G,W)
/// always, and on morphisms of G when every star is a tree.
class Extension {
 public:
  /// Throws ValidationError when f is invalid or the M(G,W) hypotheses fail.
  explicit Extension(const LocalMorphism& f,
                     std::optional<MorphismSet> cover = std::nullopt);

  const LocalMorphism& local() const noexcept { return *f_; }
  const Presentation& presentation() const noexcept { return presentation_; }

  /// f̃(u1…un) = f(u1)∘…∘f(un); the identity of H at the source when empty.
  Mor on_word(const Word& w) const;
  /// Breadth-first factorization of g into W-letters from the identity at
  /// its source. Throws PreconditionError unless every star is a
  /// connected tree.
  Word factorize(Mor g, TieBreak order = TieBreak::lexicographic) const;
  Mor on_morphism(Mor g, TieBreak order = TieBreak::lexicographic) const;

 private:
  const LocalMorphism* f_;
  Presentation presentation_;
};

/// Word for the group product of two words, padding the shorter one with
/// identities: u1v1, …, unvn, 1·v(n+1), …  Letters must stay in W.
Word product_word(const Groupoid& g, const GroupStructure& s,
                  const MorphismSet& w, const Word& a, const Word& b);

/// Verifies f̃(product_word(a, b)) = f̃(a)·f̃(b) on every sampled pair.
/// Refuses with PreconditionError when G or H lacks a group structure or
/// W is not a subgroup, naming a violating pair.
Report check_group_morphism(const Extension& ext, std::span<const Word> samples);

using WordMap = std::function<Mor(const Word&)>;

struct Agreement {
  bool agree = true;
  std::optional<Word> witness;
};

/// Compares two extensions of f on every word of length ≤ max_len. Throws
/// PreconditionError if either disagrees with f on W.
Agreement uniqueness_check(const LocalMorphism& f, const WordMap& first,
                           const WordMap& second, std::size_t max_len);

}  // namespace ggd
