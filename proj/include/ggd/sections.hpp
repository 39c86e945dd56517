#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ggd/presentation.hpp"

namespace ggd {

/// Admissible local section over a discrete object space: a partial map
/// x ↦ s(x) with source(s(x)) = x and x ↦ target(s(x)) injective.
/// Entries are kept sorted by object.
struct Section {
  std::vector<std::pair<Obj, Mor>> values;

  std::optional<Mor> at(Obj x) const;
  bool empty() const noexcept { return values.empty(); }
  auto operator<=>(const Section&) const = default;
};

Report validate_section(const Groupoid& g, const Section& s);
Section singleton_section(const Groupoid& g, Mor value);
Section identity_section(const Groupoid& g, std::span<const Obj> domain);

struct SectionProduct {
  Section section;
  /// True when the product keeps the whole domain of the left factor.
  bool composable = false;
};

/// (st)(x) = s(x)∘t(target s(x)) on { x ∈ D_s : target s(x) ∈ D_t }.
SectionProduct section_product(const Groupoid& g, const Section& s,
                               const Section& t);
/// Defined on target s(D_s), sending target s(x) to inv(s(x)).
Section section_inverse(const Groupoid& g, const Section& s);

/// All sections with |domain| ≤ max_domain, in a fixed order.
std::vector<Section> enumerate_sections(const Groupoid& g,
                                        std::size_t max_domain);

/// Checks s s⁻¹ s = s, s⁻¹ s s⁻¹ = s⁻¹, associativity, and that
/// idempotents commute, over the given family (closed under products).
Report check_inverse_semigroup(const Groupoid& g,
                               const std::vector<Section>& family);

/// Germ [s]_x. With discrete objects it is determined by x and s(x).
struct Germ {
  Obj at;
  Mor value;
  auto operator<=>(const Germ&) const = default;
};

Germ germ_of(const Groupoid& g, const Section& s, Obj x);
/// [s]_x [t]_{target s(x)} = [st]_x, via singleton sections.
Germ germ_product(const Groupoid& g, const Germ& a, const Germ& b);
Germ germ_inverse(const Groupoid& g, const Germ& a);
/// ψ([s]_x) = s(x).
inline Mor psi(const Germ& germ) { return germ.value; }

/// For each w ∈ W the singleton section {source(w) ↦ w}; each one
/// satisfies s(source w) = w and s(D_s) ⊆ W.
std::vector<std::pair<Mor, Section>> enough_sections(const Groupoid& g,
                                                     const MorphismSet& w);

struct Holonomy {
  /// Hol(G,W) as an explicit groupoid; morphisms are the classes <s>_x,
  /// named "<value>".
  Groupoid groupoid;
  /// φ: Hol → G on morphisms.
  std::vector<Mor> phi;
  /// Germs of J^c(G,W) and J₀, both sorted.
  std::vector<Germ> germs;
  std::vector<Germ> kernel;
  /// Class of each germ, parallel to `germs`.
  std::vector<Mor> quotient;
  /// Whether W generates G; if not Hol lands in the subgroupoid ⟨W⟩.
  bool generates = false;
  bool kernel_normal = false;
  Report report;
};

/// Germs of products of W-valued sections modulo J₀ = J^c(W) ∩ ker ψ.
/// W must contain the identities and be closed under inversion
/// (PreconditionError otherwise). The report is empty iff φ is an
/// isomorphism onto ⟨W⟩ with φ∘p = ψ and J₀ is normal.
Holonomy holonomy(const Groupoid& g, const MorphismSet& w);

struct Extendibility {
  std::size_t products_checked = 0;
  std::size_t identity_valued = 0;
  Report report;
};

/// For every product s1…sn (n ≤ max_len) of singleton W-sections whose
/// value at x is the identity, the restriction to {x} must be W-valued.
Extendibility check_extendibility(const Groupoid& g, const MorphismSet& w,
                                  std::size_t max_len = 3);

}  // namespace ggd
