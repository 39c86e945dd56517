#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ggd/error.hpp"

namespace ggd {

/// Index of an object inside one groupoid. Objects are numbered in
/// lexicographic order of their names.
enum class Obj : std::uint32_t {};
/// Index of a morphism inside one groupoid, lexicographic by name.
enum class Mor : std::uint32_t {};

inline constexpr Mor kNoMor{std::numeric_limits<std::uint32_t>::max()};
inline constexpr Obj kNoObj{std::numeric_limits<std::uint32_t>::max()};

constexpr std::size_t idx(Obj o) noexcept {
  return static_cast<std::size_t>(o);
}
constexpr std::size_t idx(Mor m) noexcept {
  return static_cast<std::size_t>(m);
}

/// Name-level description of a groupoid, exactly as it appears in a GGD
/// document. Inverses are never listed; they are derived.
struct GroupoidTable {
  struct Morphism {
    std::string name;
    std::string source;
    std::string target;
    bool operator==(const Morphism&) const = default;
  };
  struct Identity {
    std::string morphism;
    std::string object;
    bool operator==(const Identity&) const = default;
  };
  using Triple = std::array<std::string, 3>;

  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<Identity> identities;
  /// (g, h, k) meaning g∘h = k.
  std::vector<Triple> compose;

  /// Sorts every list by name so equal groupoids compare equal.
  void canonicalize();
  bool operator==(const GroupoidTable&) const = default;
};

/// A finite groupoid stored as explicit tables.
///
/// Construction only indexes the tables; it throws MalformedError when a
/// name is dangling or duplicated, but accepts tables that break the
/// groupoid axioms so that validate_groupoid can report them.
class Groupoid {
 public:
  explicit Groupoid(const GroupoidTable& table);

  std::size_t num_objects() const noexcept { return object_names_.size(); }
  std::size_t num_morphisms() const noexcept {
    return morphism_names_.size();
  }

  const std::string& name(Obj x) const { return object_names_[idx(x)]; }
  const std::string& name(Mor g) const { return morphism_names_[idx(g)]; }
  std::optional<Obj> find_object(std::string_view name) const;
  std::optional<Mor> find_morphism(std::string_view name) const;
  /// Throws PreconditionError for unknown names.
  Obj object(std::string_view name) const;
  Mor morphism(std::string_view name) const;

  Obj source(Mor g) const { return source_[idx(g)]; }
  Obj target(Mor g) const { return target_[idx(g)]; }
  Mor identity(Obj x) const { return identity_[idx(x)]; }
  bool is_identity(Mor g) const { return identity_of_[idx(g)] != kNoObj; }

  /// Raw table entry, possibly absent or inconsistent in a broken table.
  std::optional<Mor> table_entry(Mor g, Mor h) const;
  /// g∘h; throws PreconditionError when β(g) ≠ α(h) or the entry is missing.
  Mor compose(Mor g, Mor h) const;
  /// Groupoid inverse; kNoMor if the table has none.
  Mor inverse(Mor g) const { return inverse_[idx(g)]; }
  /// δ(g, h) = inv(g)∘h, defined when α(g) = α(h).
  Mor difference(Mor g, Mor h) const;

  /// All morphisms with source x, in name order. Always contains ε(x).
  std::span<const Mor> star(Obj x) const { return stars_[idx(x)]; }
  std::vector<Mor> hom(Obj x, Obj y) const;

  std::vector<Obj> objects() const;
  std::vector<Mor> morphisms() const;

  GroupoidTable table() const;

 private:
  std::vector<std::string> object_names_;
  std::vector<std::string> morphism_names_;
  std::unordered_map<std::string, Obj> object_index_;
  std::unordered_map<std::string, Mor> morphism_index_;
  std::vector<Obj> source_;
  std::vector<Obj> target_;
  std::vector<Mor> identity_;
  std::vector<Obj> identity_of_;
  std::vector<Mor> comp_;
  std::vector<Mor> inverse_;
  std::vector<std::vector<Mor>> stars_;
};

/// Exhaustive axiom check. Empty report iff G is a groupoid.
Report validate_groupoid(const Groupoid& g);
/// Same, starting from names; malformed tables are reported under the
/// rule "malformed" rather than thrown.
Report validate_groupoid(const GroupoidTable& table);

/// Name of the pair (a, b) in a product: "(a,b)".
std::string pair_name(std::string_view a, std::string_view b);

/// G×H with componentwise structure, plus the maps back to the factors.
struct ProductGroupoid {
  Groupoid groupoid;
  std::vector<std::pair<Obj, Obj>> object_parts;
  std::vector<std::pair<Mor, Mor>> morphism_parts;
  std::size_t right_objects = 0;
  std::size_t right_morphisms = 0;
  std::vector<Obj> object_of;
  std::vector<Mor> morphism_of;

  Obj pair(Obj x, Obj y) const {
    return object_of[idx(x) * right_objects + idx(y)];
  }
  Mor pair(Mor g, Mor h) const {
    return morphism_of[idx(g) * right_morphisms + idx(h)];
  }
};

ProductGroupoid product_groupoid(const Groupoid& left, const Groupoid& right);

struct Closure {
  /// Members of the generated subgroupoid, in index order.
  std::vector<Mor> members;
  bool generates = false;
  bool contains(Mor g) const;
};

/// Closure of S together with all identities under composition and
/// inversion. G must be valid.
Closure subgroupoid_generated(const Groupoid& g, std::span<const Mor> s);

}  // namespace ggd
