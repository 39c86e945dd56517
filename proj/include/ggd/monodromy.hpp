#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "ggd/star_graph.hpp"

namespace ggd {

/// One morphism [a] of Mon(G): a canonical edge path in star(base)
/// starting at the identity of base. Its projection to G is the last
/// vertex; its target is the target of that vertex.
struct MonMor {
  Obj base;
  EdgePath path;
  auto operator<=>(const MonMor&) const = default;
};

/// The monodromy groupoid of a starred groupoid, computed element by
/// element. Stars of Mon are the trees of reduced paths, so they are
/// infinite as soon as a star graph has a cycle.
///
/// Over a product ambient the canonical form of a path is the pair of
/// reduced projections, re-joined with all left-factor steps first.
class MonGroupoid {
 public:
  /// Throws PreconditionError unless every star graph is connected.
  explicit MonGroupoid(const StarredGroupoid& ambient);

  const StarredGroupoid& ambient() const noexcept { return *ambient_; }

  MonMor identity(Obj x) const;
  Obj source(const MonMor& a) const { return a.base; }
  Obj target(const MonMor& a) const;
  /// p: Mon(G) → G, the endpoint of the path.
  Mor project(const MonMor& a) const { return a.path.end(); }

  /// Checks that p is a valid path from an identity and returns the
  /// element it represents.
  MonMor element(const EdgePath& p) const;
  bool is_canonical(const MonMor& a) const;
  EdgePath canonical(const EdgePath& p) const;

  /// [a]•[b] = [a ⋆ (a(1)∘b)].
  MonMor compose(const MonMor& a, const MonMor& b) const;
  MonMor inverse(const MonMor& a) const;
  /// [a][b] represented by (a·ε(base b)) ⋆ (a(1)·b). Needs a group-groupoid.
  MonMor group_multiply(const MonMor& a, const MonMor& b) const;

  /// Every element based at x of length at most max_len, in lexicographic
  /// order of vertex sequences.
  std::vector<MonMor> enumerate(Obj x, std::size_t max_len) const;
  /// Neighbours of a in the Mon star: canonical one-step extensions.
  std::vector<MonMor> lifts(const MonMor& a) const;

  /// Product ambients only: ([p1 a], [p2 a]) and its inverse.
  std::pair<MonMor, MonMor> split(const MonMor& a) const;
  MonMor join(const MonMor& left, const MonMor& right) const;
  const MonGroupoid& factor(std::size_t i) const;

 private:
  const StarredGroupoid* ambient_;
  std::unique_ptr<MonGroupoid> left_;
  std::unique_ptr<MonGroupoid> right_;

  EdgePath project_component(const EdgePath& p, std::size_t which) const;
};

/// A map of starred groupoids, by index: objects and morphisms.
struct StarredMorphism {
  std::vector<Obj> objects;
  std::vector<Mor> morphisms;
  bool operator==(const StarredMorphism&) const = default;
};

StarredMorphism identity_morphism(const StarredGroupoid& sg);
/// second ∘ first.
StarredMorphism compose_morphisms(const StarredMorphism& first,
                                  const StarredMorphism& second);

/// Groupoid morphism whose restriction to each star sends edges to edges
/// or collapses them to a vertex; group homomorphism when both sides are
/// group-groupoids.
Report validate_starred_morphism(const StarredGroupoid& source,
                                 const StarredGroupoid& target,
                                 const StarredMorphism& f);

/// Mon(f): apply f vertexwise, drop stationary steps, canonicalize.
/// Throws PreconditionError when a step is not sent to an edge or a vertex.
MonMor mon_map(const MonGroupoid& source, const MonGroupoid& target,
               const StarredMorphism& f, const MonMor& a);

/// Checks on a product ambient that split is a bijection from canonical
/// forms with both component lengths ≤ max_len onto pairs of factor
/// elements, inverse to join, and that it preserves composition, inverses
/// and (when both factors are group-groupoids) the group product.
Report check_product_split(const MonGroupoid& product, std::size_t max_len);

}  // namespace ggd
