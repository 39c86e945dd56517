#pragma once

#include <string>
#include <vector>

#include "ggd/groupoid.hpp"

namespace ggd {

/// Name-level group tables for a group-groupoid. Inverses and the
/// morphism unit are derived.
struct GroupTables {
  using Triple = std::array<std::string, 3>;
  /// (x, y, z) meaning x·y = z.
  std::vector<Triple> object_product;
  std::string object_unit;
  /// (g, h, k) meaning g·h = k.
  std::vector<Triple> morphism_product;

  void canonicalize();
  bool operator==(const GroupTables&) const = default;
};

/// Group structures on the objects and on the morphisms of a groupoid.
/// Like Groupoid, construction only indexes: missing or dangling entries
/// throw MalformedError, axiom failures are left to the validator.
class GroupStructure {
 public:
  GroupStructure(const Groupoid& base, const GroupTables& tables);

  Obj multiply(Obj x, Obj y) const {
    return obj_mul_[idx(x) * num_objects_ + idx(y)];
  }
  Mor multiply(Mor g, Mor h) const {
    return mor_mul_[idx(g) * num_morphisms_ + idx(h)];
  }
  /// Group inverse (written g⁻¹, as opposed to the groupoid inverse).
  /// kNoObj / kNoMor when the table has no unit or no inverse.
  Obj group_inverse(Obj x) const { return obj_inv_[idx(x)]; }
  Mor group_inverse(Mor g) const { return mor_inv_[idx(g)]; }
  Obj object_unit() const { return obj_unit_; }
  /// Two-sided unit of the morphism table, or kNoMor.
  Mor morphism_unit() const { return mor_unit_; }

  GroupTables tables(const Groupoid& base) const;

 private:
  std::size_t num_objects_;
  std::size_t num_morphisms_;
  std::vector<Obj> obj_mul_;
  std::vector<Obj> obj_inv_;
  Obj obj_unit_;
  std::vector<Mor> mor_mul_;
  std::vector<Mor> mor_inv_;
  Mor mor_unit_;
};

/// Checks that objects and morphisms form groups, that α, β, ε are
/// homomorphisms with mor_unit = ε(obj_unit), and the interchange rule
/// (gh)∘(kl) = (g∘k)(h∘l) on every quadruple where both sides are defined.
/// The base groupoid is assumed valid.
Report validate_group_groupoid(const Groupoid& base, const GroupStructure& group);
/// Validates base and group tables from names; malformed input is reported.
Report validate_group_groupoid(const GroupoidTable& base,
                               const GroupTables& group);

struct ProductGroupGroupoid {
  ProductGroupoid product;
  GroupStructure group;
};

/// Componentwise group structure on G×H.
ProductGroupGroupoid product_group_groupoid(const Groupoid& left,
                                            const GroupStructure& left_group,
                                            const Groupoid& right,
                                            const GroupStructure& right_group);

}  // namespace ggd
