#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ggd/group_groupoid.hpp"
#include "ggd/groupoid.hpp"

namespace ggd {

/// Undirected edge {a, b} of the graph on star(base).
struct StarEdge {
  Obj base;
  Mor a;
  Mor b;
  bool operator==(const StarEdge&) const = default;
};

/// Sequence of successive vertices in one star graph. The path of length
/// zero at v is {v}.
struct EdgePath {
  std::vector<Mor> vertices;

  Mor start() const { return vertices.front(); }
  Mor end() const { return vertices.back(); }
  std::size_t length() const { return vertices.size() - 1; }
  auto operator<=>(const EdgePath&) const = default;
};

/// A groupoid (optionally a group-groupoid) whose stars carry graphs.
///
/// A product ambient carries no graphs of its own: adjacency is the
/// cartesian one (one coordinate moves along a factor edge) and all
/// homotopy questions are answered componentwise.
class StarredGroupoid {
 public:
  StarredGroupoid(Groupoid groupoid, std::optional<GroupStructure> group,
                  std::vector<StarEdge> edges);

  static std::shared_ptr<const StarredGroupoid> product(
      std::shared_ptr<const StarredGroupoid> left,
      std::shared_ptr<const StarredGroupoid> right);

  const Groupoid& groupoid() const noexcept { return groupoid_; }
  const GroupStructure* group() const noexcept {
    return group_ ? &*group_ : nullptr;
  }

  bool is_product() const noexcept { return product_ != nullptr; }
  /// Factor 0 or 1 of a product ambient.
  const StarredGroupoid& factor(std::size_t i) const;
  const ProductGroupoid& product_index() const;

  /// Declared edges, exactly as given (empty for products).
  const std::vector<StarEdge>& edges() const noexcept { return edges_; }

  bool adjacent(Mor a, Mor b) const;
  /// Neighbours of v inside star(source(v)), in index order.
  std::vector<Mor> neighbors(Mor v) const;

 private:
  struct ProductTag {
    std::shared_ptr<const StarredGroupoid> left;
    std::shared_ptr<const StarredGroupoid> right;
    ProductGroupoid index;
  };

  StarredGroupoid(Groupoid groupoid, std::optional<GroupStructure> group,
                  std::shared_ptr<const ProductTag> tag);

  Groupoid groupoid_;
  std::optional<GroupStructure> group_;
  std::vector<StarEdge> edges_;
  std::vector<std::vector<Mor>> adjacency_;
  std::shared_ptr<const ProductTag> product_;
};

/// Checks edge well-formedness and that every left translation (and, for
/// group-groupoids, every left/right multiplication and the group
/// inversion) is a graph isomorphism between the relevant stars.
Report validate_star_structure(const StarredGroupoid& sg);

bool is_valid_path(const StarredGroupoid& sg, const EdgePath& p);

/// Deletes immediate backtracks u,v,u → u until none remain.
EdgePath reduce_path(const EdgePath& p);

/// Vertexwise g∘v. p must lie in star(target(g)).
EdgePath left_translate_path(const StarredGroupoid& sg, Mor g,
                             const EdgePath& p);

/// Per object: is the star graph connected / a tree. Products answer
/// componentwise.
std::vector<bool> star_connected(const StarredGroupoid& sg);
std::vector<bool> star_is_tree(const StarredGroupoid& sg);

/// Shape of the subgraph of star(x) induced by the marked vertices.
struct SubgraphShape {
  bool contains_base = false;
  bool connected = false;
  /// A closed edge path (first vertex repeated at the end), if any.
  std::optional<EdgePath> cycle;
  bool is_tree() const { return contains_base && connected && !cycle; }
};

SubgraphShape induced_subgraph_shape(const StarredGroupoid& sg, Obj x,
                                     const std::vector<bool>& member);

}  // namespace ggd
