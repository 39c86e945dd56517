#include "ggd/sections.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ggd {

std::optional<Mor> Section::at(Obj x) const {
  auto it = std::lower_bound(
      values.begin(), values.end(), x,
      [](const std::pair<Obj, Mor>& e, Obj o) { return e.first < o; });
  if (it == values.end() || it->first != x) {
    return std::nullopt;
  }
  return it->second;
}

Report validate_section(const Groupoid& g, const Section& s) {
  Report r;
  std::vector<Obj> images;
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    const auto [x, v] = s.values[i];
    if (i > 0 && s.values[i - 1].first >= x) {
      r.add("section-order", "domain must be strictly increasing",
            {g.name(x)});
    }
    if (g.source(v) != x) {
      r.add("section-source", "source(s(x)) != x", {g.name(x), g.name(v)});
    }
    images.push_back(g.target(v));
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
    r.add("section-injective", "target∘s is not injective");
  }
  return r;
}

Section singleton_section(const Groupoid& g, Mor value) {
  return Section{{{g.source(value), value}}};
}

Section identity_section(const Groupoid& g, std::span<const Obj> domain) {
  Section s;
  for (Obj x : domain) {
    s.values.emplace_back(x, g.identity(x));
  }
  std::sort(s.values.begin(), s.values.end());
  return s;
}

SectionProduct section_product(const Groupoid& g, const Section& s,
                               const Section& t) {
  SectionProduct p;
  for (const auto& [x, v] : s.values) {
    if (auto w = t.at(g.target(v))) {
      p.section.values.emplace_back(x, g.compose(v, *w));
    }
  }
  p.composable = p.section.values.size() == s.values.size();
  return p;
}

Section section_inverse(const Groupoid& g, const Section& s) {
  Section out;
  for (const auto& [x, v] : s.values) {
    out.values.emplace_back(g.target(v), g.inverse(v));
  }
  std::sort(out.values.begin(), out.values.end());
  return out;
}

std::vector<Section> enumerate_sections(const Groupoid& g,
                                        std::size_t max_domain) {
  std::vector<Section> out;
  const auto objs = g.objects();
  Section current;
  std::vector<bool> used(g.num_objects(), false);
  auto visit = [&](auto&& self, std::size_t i) -> void {
    if (i == objs.size()) {
      out.push_back(current);
      return;
    }
    self(self, i + 1);
    if (current.values.size() == max_domain) {
      return;
    }
    for (Mor v : g.star(objs[i])) {
      if (used[idx(g.target(v))]) {
        continue;
      }
      used[idx(g.target(v))] = true;
      current.values.emplace_back(objs[i], v);
      self(self, i + 1);
      current.values.pop_back();
      used[idx(g.target(v))] = false;
    }
  };
  visit(visit, 0);
  return out;
}

Report check_inverse_semigroup(const Groupoid& g,
                               const std::vector<Section>& family) {
  constexpr std::size_t kAssociativityLimit = 128;
  Report r;
  auto mul = [&](const Section& a, const Section& b) {
    return section_product(g, a, b).section;
  };
  std::vector<Section> idempotents;
  for (const Section& s : family) {
    const Section inv = section_inverse(g, s);
    if (mul(mul(s, inv), s) != s) {
      r.add("s s^-1 s = s", "inverse law fails", {std::to_string(s.values.size())});
    }
    if (mul(mul(inv, s), inv) != inv) {
      r.add("s^-1 s s^-1 = s^-1", "inverse law fails");
    }
    if (mul(s, s) == s) {
      idempotents.push_back(s);
    }
  }
  for (const Section& e : idempotents) {
    for (const Section& f : idempotents) {
      if (mul(e, f) != mul(f, e)) {
        r.add("idempotents-commute", "ef != fe");
      }
    }
  }
  if (family.size() <= kAssociativityLimit) {
    for (const Section& a : family) {
      for (const Section& b : family) {
        const Section ab = mul(a, b);
        for (const Section& c : family) {
          if (mul(ab, c) != mul(a, mul(b, c))) {
            r.add("associativity", "(st)u != s(tu)");
          }
        }
      }
    }
  } else {
    r.note("associativity skipped: family has " +
           std::to_string(family.size()) + " sections");
  }
  r.note(std::to_string(family.size()) + " sections, " +
         std::to_string(idempotents.size()) + " idempotents");
  return r;
}

Germ germ_of(const Groupoid& g, const Section& s, Obj x) {
  auto v = s.at(x);
  if (!v) {
    throw PreconditionError(g.name(x) + " is not in the domain of the section");
  }
  return Germ{x, *v};
}

Germ germ_product(const Groupoid& g, const Germ& a, const Germ& b) {
  if (g.target(a.value) != b.at) {
    throw PreconditionError("germs are not composable");
  }
  const auto p = section_product(g, Section{{{a.at, a.value}}},
                                 Section{{{b.at, b.value}}});
  return germ_of(g, p.section, a.at);
}

Germ germ_inverse(const Groupoid& g, const Germ& a) {
  return germ_of(g, section_inverse(g, Section{{{a.at, a.value}}}),
                 g.target(a.value));
}

std::vector<std::pair<Mor, Section>> enough_sections(const Groupoid& g,
                                                     const MorphismSet& w) {
  std::vector<std::pair<Mor, Section>> out;
  for (Mor u : w.members()) {
    out.emplace_back(u, singleton_section(g, u));
  }
  return out;
}

namespace {

void require_symmetric_with_identities(const Groupoid& g,
                                       const MorphismSet& w) {
  for (Obj x : g.objects()) {
    if (!w.contains(g.identity(x))) {
      throw PreconditionError("W must contain every identity; missing " +
                              g.name(g.identity(x)));
    }
  }
  for (Mor u : w.members()) {
    if (!w.contains(g.inverse(u))) {
      throw PreconditionError("W must equal its inverse; missing " +
                              g.name(g.inverse(u)));
    }
  }
}

}  // namespace

Holonomy holonomy(const Groupoid& g, const MorphismSet& w) {
  require_symmetric_with_identities(g, w);
  Holonomy h{Groupoid(GroupoidTable{}), {}, {}, {}, {}, false, false, {}};

  // J^c(G,W): germs of products of singleton W-sections.
  std::vector<Section> generators;
  for (const auto& [u, s] : enough_sections(g, w)) {
    generators.push_back(s);
  }
  std::set<Section> closure(generators.begin(), generators.end());
  std::deque<Section> work(generators.begin(), generators.end());
  while (!work.empty()) {
    const Section s = work.front();
    work.pop_front();
    for (const Section& t : generators) {
      Section st = section_product(g, s, t).section;
      if (!st.empty() && closure.insert(st).second) {
        work.push_back(std::move(st));
      }
    }
  }
  std::set<Germ> germs;
  for (const Section& s : closure) {
    for (const auto& [x, v] : s.values) {
      germs.insert(germ_of(g, s, x));
    }
  }
  h.germs.assign(germs.begin(), germs.end());

  // J₀ = J^c(W) ∩ ker ψ.
  for (const Section& s : generators) {
    const Germ germ = germ_of(g, s, s.values.front().first);
    if (g.is_identity(psi(germ))) {
      h.kernel.push_back(germ);
    }
  }
  std::sort(h.kernel.begin(), h.kernel.end());
  auto in_kernel = [&](const Germ& germ) {
    return std::binary_search(h.kernel.begin(), h.kernel.end(), germ);
  };

  h.kernel_normal = true;
  for (const Germ& a : h.germs) {
    for (const Germ& j : h.kernel) {
      if (j.at != g.target(a.value)) {
        continue;
      }
      const Germ conj =
          germ_product(g, germ_product(g, a, j), germ_inverse(g, a));
      if (!in_kernel(conj)) {
        h.kernel_normal = false;
        h.report.add("kernel-normal", "a j a^-1 is not in J0",
                     {g.name(a.value), g.name(j.value)});
      }
    }
  }

  // Classes of J^c(G,W)/J₀: a ~ b iff a⁻¹b ∈ J₀.
  std::vector<std::size_t> rep_of(h.germs.size());
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < h.germs.size(); ++i) {
    const Germ& b = h.germs[i];
    rep_of[i] = h.germs.size();
    for (std::size_t r : reps) {
      const Germ& a = h.germs[r];
      if (a.at == b.at &&
          in_kernel(germ_product(g, germ_inverse(g, a), b))) {
        rep_of[i] = r;
        break;
      }
    }
    if (rep_of[i] == h.germs.size()) {
      rep_of[i] = i;
      reps.push_back(i);
    }
  }

  auto class_name = [&](std::size_t r) {
    return "<" + g.name(h.germs[r].value) + ">";
  };
  auto germ_index = [&](const Germ& germ) {
    auto it = std::lower_bound(h.germs.begin(), h.germs.end(), germ);
    if (it == h.germs.end() || *it != germ) {
      throw PreconditionError("germ set is not closed under products");
    }
    return static_cast<std::size_t>(it - h.germs.begin());
  };

  GroupoidTable t;
  for (Obj x : g.objects()) {
    t.objects.push_back(g.name(x));
    t.identities.push_back(
        {class_name(rep_of[germ_index(Germ{x, g.identity(x)})]), g.name(x)});
  }
  for (std::size_t r : reps) {
    const Germ& a = h.germs[r];
    t.morphisms.push_back(
        {class_name(r), g.name(a.at), g.name(g.target(a.value))});
  }
  for (std::size_t r1 : reps) {
    for (std::size_t r2 : reps) {
      const Germ& a = h.germs[r1];
      const Germ& b = h.germs[r2];
      if (g.target(a.value) != b.at) {
        continue;
      }
      const std::size_t ab = germ_index(germ_product(g, a, b));
      t.compose.push_back(
          {class_name(r1), class_name(r2), class_name(rep_of[ab])});
    }
  }
  h.groupoid = Groupoid(t);
  const Groupoid& H = h.groupoid;

  h.phi.assign(H.num_morphisms(), kNoMor);
  for (std::size_t r : reps) {
    h.phi[idx(H.morphism(class_name(r)))] = h.germs[r].value;
  }
  for (std::size_t i = 0; i < h.germs.size(); ++i) {
    const Mor cls = H.morphism(class_name(rep_of[i]));
    h.quotient.push_back(cls);
    if (h.phi[idx(cls)] != psi(h.germs[i])) {
      h.report.add("phi-p-equals-psi", "phi(p(germ)) != psi(germ)",
                   {g.name(h.germs[i].at), g.name(h.germs[i].value)});
    }
  }

  std::size_t psi_pairs = 0;
  for (const Germ& a : h.germs) {
    for (const Germ& b : h.germs) {
      if (b.at != g.target(a.value)) {
        continue;
      }
      ++psi_pairs;
      if (psi(germ_product(g, a, b)) != g.compose(psi(a), psi(b))) {
        h.report.add("psi-morphism", "psi([s][t]) != psi([s])∘psi([t])",
                     {g.name(a.value), g.name(b.value)});
      }
    }
  }
  h.report.note("psi checked on " + std::to_string(psi_pairs) +
                " composable germ pairs");

  h.report.merge(validate_groupoid(H), "hol: ");
  for (Mor a : H.morphisms()) {
    for (Mor b : H.star(H.target(a))) {
      if (h.phi[idx(H.compose(a, b))] !=
          g.compose(h.phi[idx(a)], h.phi[idx(b)])) {
        h.report.add("phi-morphism", "phi(a∘b) != phi(a)∘phi(b)",
                     {H.name(a), H.name(b)});
      }
    }
  }

  const Closure generated = subgroupoid_generated(g, w.members());
  h.generates = generated.generates;
  std::vector<Mor> image = h.phi;
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
    h.report.add("phi-injective", "two holonomy classes share an image");
  }
  image.erase(std::unique(image.begin(), image.end()), image.end());
  if (image != generated.members) {
    h.report.add("phi-image", "image of phi differs from the subgroupoid "
                              "generated by W");
  }
  if (!h.generates) {
    h.report.note("W does not generate G; Hol is computed over <W>");
  }
  return h;
}

Extendibility check_extendibility(const Groupoid& g, const MorphismSet& w,
                                  std::size_t max_len) {
  require_symmetric_with_identities(g, w);
  Extendibility e;
  std::vector<Section> generators;
  for (const auto& [u, s] : enough_sections(g, w)) {
    generators.push_back(s);
  }
  auto visit = [&](auto&& self, const Section& s, std::size_t len) -> void {
    ++e.products_checked;
    const auto [x, v] = s.values.front();
    if (v == g.identity(x)) {
      ++e.identity_valued;
      const Section restricted{{{x, v}}};
      if (!w.contains(restricted.values.front().second)) {
        e.report.add("extendibility",
                     "identity-valued product restricts outside W",
                     {g.name(x)});
      }
    }
    if (len == max_len) {
      return;
    }
    for (const Section& t : generators) {
      const Section st = section_product(g, s, t).section;
      if (!st.empty()) {
        self(self, st, len + 1);
      }
    }
  };
  for (const Section& s : generators) {
    visit(visit, s, 1);
  }
  e.report.note(std::to_string(e.products_checked) + " products checked, " +
                std::to_string(e.identity_valued) + " identity-valued");
  return e;
}

}  // namespace ggd
