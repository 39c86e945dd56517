#include "ggd/group_groupoid.hpp"

#include <algorithm>

namespace ggd {

void GroupTables::canonicalize() {
  std::sort(object_product.begin(), object_product.end());
  std::sort(morphism_product.begin(), morphism_product.end());
}

GroupStructure::GroupStructure(const Groupoid& G, const GroupTables& t)
    : num_objects_(G.num_objects()),
      num_morphisms_(G.num_morphisms()),
      obj_mul_(num_objects_ * num_objects_, kNoObj),
      obj_inv_(num_objects_, kNoObj),
      obj_unit_(kNoObj),
      mor_mul_(num_morphisms_ * num_morphisms_, kNoMor),
      mor_inv_(num_morphisms_, kNoMor),
      mor_unit_(kNoMor) {
  Report bad;
  for (const auto& [a, b, c] : t.object_product) {
    auto x = G.find_object(a);
    auto y = G.find_object(b);
    auto z = G.find_object(c);
    if (!x || !y || !z) {
      bad.add("malformed", "object-product entry references unknown object",
              {a, b, c});
      continue;
    }
    Obj& slot = obj_mul_[idx(*x) * num_objects_ + idx(*y)];
    if (slot != kNoObj) {
      bad.add("malformed", "object-product entry given twice", {a, b});
      continue;
    }
    slot = *z;
  }
  for (const auto& [a, b, c] : t.morphism_product) {
    auto g = G.find_morphism(a);
    auto h = G.find_morphism(b);
    auto k = G.find_morphism(c);
    if (!g || !h || !k) {
      bad.add("malformed",
              "morphism-product entry references unknown morphism", {a, b, c});
      continue;
    }
    Mor& slot = mor_mul_[idx(*g) * num_morphisms_ + idx(*h)];
    if (slot != kNoMor) {
      bad.add("malformed", "morphism-product entry given twice", {a, b});
      continue;
    }
    slot = *k;
  }
  if (auto u = G.find_object(t.object_unit)) {
    obj_unit_ = *u;
  } else {
    bad.add("malformed", "object unit is not an object", {t.object_unit});
  }
  for (Obj x : G.objects()) {
    for (Obj y : G.objects()) {
      if (multiply(x, y) == kNoObj) {
        bad.add("malformed", "object-product table is not total",
                {G.name(x), G.name(y)});
      }
    }
  }
  for (Mor g : G.morphisms()) {
    for (Mor h : G.morphisms()) {
      if (multiply(g, h) == kNoMor) {
        bad.add("malformed", "morphism-product table is not total",
                {G.name(g), G.name(h)});
      }
    }
  }
  if (!bad.ok()) {
    throw MalformedError(std::move(bad));
  }

  for (Mor e : G.morphisms()) {
    bool two_sided = true;
    for (Mor g : G.morphisms()) {
      if (multiply(e, g) != g || multiply(g, e) != g) {
        two_sided = false;
        break;
      }
    }
    if (two_sided) {
      mor_unit_ = e;
      break;
    }
  }
  for (Obj x : G.objects()) {
    for (Obj y : G.objects()) {
      if (multiply(x, y) == obj_unit_ && multiply(y, x) == obj_unit_) {
        obj_inv_[idx(x)] = y;
        break;
      }
    }
  }
  if (mor_unit_ != kNoMor) {
    for (Mor g : G.morphisms()) {
      for (Mor h : G.morphisms()) {
        if (multiply(g, h) == mor_unit_ && multiply(h, g) == mor_unit_) {
          mor_inv_[idx(g)] = h;
          break;
        }
      }
    }
  }
}

GroupTables GroupStructure::tables(const Groupoid& G) const {
  GroupTables t;
  for (Obj x : G.objects()) {
    for (Obj y : G.objects()) {
      t.object_product.push_back(
          {G.name(x), G.name(y), G.name(multiply(x, y))});
    }
  }
  t.object_unit = G.name(obj_unit_);
  for (Mor g : G.morphisms()) {
    for (Mor h : G.morphisms()) {
      t.morphism_product.push_back(
          {G.name(g), G.name(h), G.name(multiply(g, h))});
    }
  }
  return t;
}

namespace {

template <typename Id>
void check_group(const Groupoid& G, const GroupStructure& S,
                 const std::vector<Id>& elems, Id unit, const char* which,
                 Report& r) {
  const std::string prefix = std::string(which) + "-group-";
  for (Id a : elems) {
    for (Id b : elems) {
      const Id ab = S.multiply(a, b);
      for (Id c : elems) {
        if (S.multiply(ab, c) != S.multiply(a, S.multiply(b, c))) {
          r.add(prefix + "associativity", "(ab)c != a(bc)",
                {G.name(a), G.name(b), G.name(c)});
        }
      }
    }
  }
  if (unit == Id{std::numeric_limits<std::uint32_t>::max()}) {
    r.add(prefix + "unit", "no two-sided unit");
    return;
  }
  for (Id a : elems) {
    if (S.multiply(unit, a) != a || S.multiply(a, unit) != a) {
      r.add(prefix + "unit", "unit does not act trivially",
            {G.name(unit), G.name(a)});
    }
    if (S.group_inverse(a) == Id{std::numeric_limits<std::uint32_t>::max()}) {
      r.add(prefix + "inverse", "no group inverse", {G.name(a)});
    }
  }
}

}  // namespace

Report validate_group_groupoid(const Groupoid& G, const GroupStructure& S) {
  Report r;
  const auto objs = G.objects();
  const auto mors = G.morphisms();
  check_group(G, S, objs, S.object_unit(), "object", r);
  check_group(G, S, mors, S.morphism_unit(), "morphism", r);

  if (S.morphism_unit() != kNoMor &&
      S.morphism_unit() != G.identity(S.object_unit())) {
    r.add("unit-compatibility", "morphism unit must be the identity at the "
                                "object unit",
          {G.name(S.morphism_unit()), G.name(G.identity(S.object_unit()))});
  }

  for (Mor g : mors) {
    for (Mor h : mors) {
      const Mor gh = S.multiply(g, h);
      if (G.source(gh) != S.multiply(G.source(g), G.source(h))) {
        r.add("source-homomorphism", "source(gh) != source(g)source(h)",
              {G.name(g), G.name(h)});
      }
      if (G.target(gh) != S.multiply(G.target(g), G.target(h))) {
        r.add("target-homomorphism", "target(gh) != target(g)target(h)",
              {G.name(g), G.name(h)});
      }
    }
  }
  for (Obj x : objs) {
    for (Obj y : objs) {
      if (G.identity(S.multiply(x, y)) !=
          S.multiply(G.identity(x), G.identity(y))) {
        r.add("identity-homomorphism", "identity(xy) != identity(x)identity(y)",
              {G.name(x), G.name(y)});
      }
    }
  }

  // Interchange: (gh)∘(kl) = (g∘k)(h∘l) for composable (g,k) and (h,l).
  std::vector<std::pair<Mor, Mor>> composable;
  for (Mor g : mors) {
    for (Mor k : G.star(G.target(g))) {
      if (G.table_entry(g, k)) {
        composable.emplace_back(g, k);
      }
    }
  }
  for (const auto& [g, k] : composable) {
    const Mor gk = *G.table_entry(g, k);
    for (const auto& [h, l] : composable) {
      const auto left = G.table_entry(S.multiply(g, h), S.multiply(k, l));
      if (!left || G.target(S.multiply(g, h)) != G.source(S.multiply(k, l))) {
        continue;
      }
      const Mor right = S.multiply(gk, *G.table_entry(h, l));
      if (*left != right) {
        r.add("interchange", "(gh)∘(kl) != (g∘k)(h∘l)",
              {G.name(g), G.name(h), G.name(k), G.name(l)});
      }
    }
  }

  if (G.num_objects() == 1) {
    bool coincide = true;
    bool commutative = true;
    for (Mor g : mors) {
      for (Mor h : mors) {
        if (G.table_entry(g, h) != S.multiply(g, h)) {
          coincide = false;
        }
        if (S.multiply(g, h) != S.multiply(h, g)) {
          commutative = false;
        }
      }
    }
    r.note(std::string("one object: interchange forces composition and "
                       "product to coincide and commute (Eckmann-Hilton); "
                       "composition ") +
           (coincide ? "coincides with" : "differs from") +
           " product, product is " +
           (commutative ? "commutative" : "not commutative"));
  }
  return r;
}

Report validate_group_groupoid(const GroupoidTable& base,
                               const GroupTables& group) {
  try {
    Groupoid G(base);
    Report r = validate_groupoid(G);
    if (!r.ok()) {
      return r;
    }
    return validate_group_groupoid(G, GroupStructure(G, group));
  } catch (const MalformedError& e) {
    return e.report();
  }
}

ProductGroupGroupoid product_group_groupoid(const Groupoid& L,
                                            const GroupStructure& LS,
                                            const Groupoid& R,
                                            const GroupStructure& RS) {
  ProductGroupoid p = product_groupoid(L, R);
  GroupTables t;
  for (Obj x1 : L.objects()) {
    for (Obj y1 : R.objects()) {
      for (Obj x2 : L.objects()) {
        for (Obj y2 : R.objects()) {
          t.object_product.push_back(
              {pair_name(L.name(x1), R.name(y1)),
               pair_name(L.name(x2), R.name(y2)),
               pair_name(L.name(LS.multiply(x1, x2)),
                         R.name(RS.multiply(y1, y2)))});
        }
      }
    }
  }
  t.object_unit = pair_name(L.name(LS.object_unit()), R.name(RS.object_unit()));
  for (Mor g1 : L.morphisms()) {
    for (Mor h1 : R.morphisms()) {
      for (Mor g2 : L.morphisms()) {
        for (Mor h2 : R.morphisms()) {
          t.morphism_product.push_back(
              {pair_name(L.name(g1), R.name(h1)),
               pair_name(L.name(g2), R.name(h2)),
               pair_name(L.name(LS.multiply(g1, g2)),
                         R.name(RS.multiply(h1, h2)))});
        }
      }
    }
  }
  GroupStructure s(p.groupoid, t);
  return ProductGroupGroupoid{std::move(p), std::move(s)};
}

}  // namespace ggd
