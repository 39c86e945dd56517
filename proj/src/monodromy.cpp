#include "ggd/monodromy.hpp"

#include <algorithm>
#include <set>

namespace ggd {

MonGroupoid::MonGroupoid(const StarredGroupoid& ambient) : ambient_(&ambient) {
  const auto connected = star_connected(ambient);
  for (Obj x : ambient.groupoid().objects()) {
    if (!connected[idx(x)]) {
      throw PreconditionError("star of " + ambient.groupoid().name(x) +
                              " is not connected; Mon needs a star-connected "
                              "groupoid");
    }
  }
  if (ambient.is_product()) {
    left_ = std::make_unique<MonGroupoid>(ambient.factor(0));
    right_ = std::make_unique<MonGroupoid>(ambient.factor(1));
  }
}

MonMor MonGroupoid::identity(Obj x) const {
  return MonMor{x, EdgePath{{ambient_->groupoid().identity(x)}}};
}

Obj MonGroupoid::target(const MonMor& a) const {
  return ambient_->groupoid().target(a.path.end());
}

MonMor MonGroupoid::element(const EdgePath& p) const {
  const Groupoid& G = ambient_->groupoid();
  if (!is_valid_path(*ambient_, p)) {
    throw PreconditionError("not an edge path in a star graph");
  }
  if (!G.is_identity(p.start())) {
    throw PreconditionError("path must start at an identity, not at " +
                            G.name(p.start()));
  }
  return MonMor{G.source(p.start()), canonical(p)};
}

bool MonGroupoid::is_canonical(const MonMor& a) const {
  const Groupoid& G = ambient_->groupoid();
  return !a.path.vertices.empty() &&
         a.path.start() == G.identity(a.base) &&
         is_valid_path(*ambient_, a.path) && canonical(a.path) == a.path;
}

EdgePath MonGroupoid::project_component(const EdgePath& p,
                                        std::size_t which) const {
  const auto& parts = ambient_->product_index().morphism_parts;
  EdgePath out;
  for (Mor v : p.vertices) {
    const Mor c = which == 0 ? parts[idx(v)].first : parts[idx(v)].second;
    if (out.vertices.empty() || out.vertices.back() != c) {
      out.vertices.push_back(c);
    }
  }
  return out;
}

EdgePath MonGroupoid::canonical(const EdgePath& p) const {
  if (!ambient_->is_product()) {
    return reduce_path(p);
  }
  const EdgePath a = left_->canonical(project_component(p, 0));
  const EdgePath b = right_->canonical(project_component(p, 1));
  const auto& P = ambient_->product_index();
  EdgePath out;
  for (Mor v : a.vertices) {
    out.vertices.push_back(P.pair(v, b.start()));
  }
  for (std::size_t i = 1; i < b.vertices.size(); ++i) {
    out.vertices.push_back(P.pair(a.end(), b.vertices[i]));
  }
  return out;
}

MonMor MonGroupoid::compose(const MonMor& a, const MonMor& b) const {
  const Groupoid& G = ambient_->groupoid();
  if (target(a) != b.base) {
    throw PreconditionError("Mon composite undefined: target " +
                            G.name(target(a)) + " != base " +
                            G.name(b.base));
  }
  const EdgePath moved = left_translate_path(*ambient_, a.path.end(), b.path);
  EdgePath joined = a.path;
  joined.vertices.insert(joined.vertices.end(), moved.vertices.begin() + 1,
                         moved.vertices.end());
  return MonMor{a.base, canonical(joined)};
}

MonMor MonGroupoid::inverse(const MonMor& a) const {
  const Groupoid& G = ambient_->groupoid();
  const Mor back = G.inverse(a.path.end());
  EdgePath reversed{{a.path.vertices.rbegin(), a.path.vertices.rend()}};
  return MonMor{target(a),
                canonical(left_translate_path(*ambient_, back, reversed))};
}

MonMor MonGroupoid::group_multiply(const MonMor& a, const MonMor& b) const {
  const Groupoid& G = ambient_->groupoid();
  const GroupStructure* S = ambient_->group();
  if (S == nullptr) {
    throw PreconditionError("ambient has no group structure");
  }
  const Mor unit_b = G.identity(b.base);
  EdgePath joined;
  for (Mor v : a.path.vertices) {
    joined.vertices.push_back(S->multiply(v, unit_b));
  }
  const Mor end_a = a.path.end();
  for (std::size_t i = 1; i < b.path.vertices.size(); ++i) {
    joined.vertices.push_back(S->multiply(end_a, b.path.vertices[i]));
  }
  return MonMor{S->multiply(a.base, b.base), canonical(joined)};
}

std::vector<MonMor> MonGroupoid::enumerate(Obj x, std::size_t max_len) const {
  std::vector<MonMor> out;
  if (ambient_->is_product()) {
    // Walk all cartesian paths and keep the distinct canonical forms.
    std::set<MonMor> found;
    EdgePath walk{{ambient_->groupoid().identity(x)}};
    auto visit = [&](auto&& self) -> void {
      MonMor m{x, canonical(walk)};
      if (m.path.length() <= max_len) {
        found.insert(std::move(m));
      }
      if (walk.length() == max_len) {
        return;
      }
      for (Mor v : ambient_->neighbors(walk.end())) {
        if (walk.length() > 0 && v == walk.vertices[walk.length() - 1]) {
          continue;
        }
        walk.vertices.push_back(v);
        self(self);
        walk.vertices.pop_back();
      }
    };
    visit(visit);
    out.assign(found.begin(), found.end());
    return out;
  }
  EdgePath walk{{ambient_->groupoid().identity(x)}};
  auto visit = [&](auto&& self) -> void {
    out.push_back(MonMor{x, walk});
    if (walk.length() == max_len) {
      return;
    }
    for (Mor v : ambient_->neighbors(walk.end())) {
      if (walk.length() > 0 && v == walk.vertices[walk.length() - 1]) {
        continue;
      }
      walk.vertices.push_back(v);
      self(self);
      walk.vertices.pop_back();
    }
  };
  visit(visit);
  return out;
}

std::vector<MonMor> MonGroupoid::lifts(const MonMor& a) const {
  std::vector<MonMor> out;
  for (Mor v : ambient_->neighbors(a.path.end())) {
    EdgePath step = a.path;
    step.vertices.push_back(v);
    out.push_back(MonMor{a.base, canonical(step)});
  }
  return out;
}

std::pair<MonMor, MonMor> MonGroupoid::split(const MonMor& a) const {
  if (!ambient_->is_product()) {
    throw PreconditionError("split needs a product ambient");
  }
  const auto [x, y] = ambient_->product_index().object_parts[idx(a.base)];
  return {MonMor{x, left_->canonical(project_component(a.path, 0))},
          MonMor{y, right_->canonical(project_component(a.path, 1))}};
}

MonMor MonGroupoid::join(const MonMor& left, const MonMor& right) const {
  if (!ambient_->is_product()) {
    throw PreconditionError("join needs a product ambient");
  }
  const auto& P = ambient_->product_index();
  EdgePath out;
  for (Mor v : left.path.vertices) {
    out.vertices.push_back(P.pair(v, right.path.start()));
  }
  for (std::size_t i = 1; i < right.path.vertices.size(); ++i) {
    out.vertices.push_back(P.pair(left.path.end(), right.path.vertices[i]));
  }
  return MonMor{P.pair(left.base, right.base), canonical(out)};
}

const MonGroupoid& MonGroupoid::factor(std::size_t i) const {
  if (!ambient_->is_product()) {
    throw PreconditionError("ambient is not a product");
  }
  return i == 0 ? *left_ : *right_;
}

StarredMorphism identity_morphism(const StarredGroupoid& sg) {
  const Groupoid& G = sg.groupoid();
  return StarredMorphism{G.objects(), G.morphisms()};
}

StarredMorphism compose_morphisms(const StarredMorphism& first,
                                  const StarredMorphism& second) {
  StarredMorphism out;
  for (Obj x : first.objects) {
    out.objects.push_back(second.objects[idx(x)]);
  }
  for (Mor g : first.morphisms) {
    out.morphisms.push_back(second.morphisms[idx(g)]);
  }
  return out;
}

Report validate_starred_morphism(const StarredGroupoid& src,
                                 const StarredGroupoid& dst,
                                 const StarredMorphism& f) {
  Report r;
  const Groupoid& G = src.groupoid();
  const Groupoid& H = dst.groupoid();
  if (f.objects.size() != G.num_objects() ||
      f.morphisms.size() != G.num_morphisms()) {
    r.add("morphism-shape", "map must be defined on every object and morphism");
    return r;
  }
  for (Obj x : G.objects()) {
    if (f.morphisms[idx(G.identity(x))] != H.identity(f.objects[idx(x)])) {
      r.add("preserves-identities", "f(identity) is not an identity",
            {G.name(x)});
    }
  }
  for (Mor g : G.morphisms()) {
    const Mor fg = f.morphisms[idx(g)];
    if (H.source(fg) != f.objects[idx(G.source(g))] ||
        H.target(fg) != f.objects[idx(G.target(g))]) {
      r.add("preserves-endpoints", "f does not commute with source/target",
            {G.name(g)});
      continue;
    }
    for (Mor h : G.star(G.target(g))) {
      const Mor fh = f.morphisms[idx(h)];
      if (H.target(fg) != H.source(fh)) {
        continue;
      }
      if (f.morphisms[idx(G.compose(g, h))] != H.compose(fg, fh)) {
        r.add("preserves-composition", "f(g∘h) != f(g)∘f(h)",
              {G.name(g), G.name(h)});
      }
    }
    for (Mor v : src.neighbors(g)) {
      const Mor fv = f.morphisms[idx(v)];
      if (fv != fg && !dst.adjacent(fg, fv)) {
        r.add("star-graph-map", "edge is sent to a non-edge",
              {G.name(g) + "-" + G.name(v)});
      }
    }
  }
  const GroupStructure* S = src.group();
  const GroupStructure* T = dst.group();
  if (S != nullptr && T != nullptr) {
    for (Mor g : G.morphisms()) {
      for (Mor h : G.morphisms()) {
        if (f.morphisms[idx(S->multiply(g, h))] !=
            T->multiply(f.morphisms[idx(g)], f.morphisms[idx(h)])) {
          r.add("preserves-product", "f(gh) != f(g)f(h)",
                {G.name(g), G.name(h)});
        }
      }
    }
  }
  return r;
}

MonMor mon_map(const MonGroupoid& source, const MonGroupoid& target,
               const StarredMorphism& f, const MonMor& a) {
  const StarredGroupoid& dst = target.ambient();
  const Groupoid& G = source.ambient().groupoid();
  EdgePath image;
  for (Mor v : a.path.vertices) {
    const Mor fv = f.morphisms[idx(v)];
    if (!image.vertices.empty() && image.vertices.back() != fv &&
        !dst.adjacent(image.vertices.back(), fv)) {
      throw PreconditionError("map is not compatible with the star graphs at " +
                              G.name(v));
    }
    if (image.vertices.empty() || image.vertices.back() != fv) {
      image.vertices.push_back(fv);
    }
  }
  return MonMor{f.objects[idx(a.base)], target.canonical(image)};
}

Report check_product_split(const MonGroupoid& product, std::size_t max_len) {
  const StarredGroupoid& sg = product.ambient();
  if (!sg.is_product()) {
    throw PreconditionError("check_product_split needs a product ambient");
  }
  const Groupoid& G = sg.groupoid();
  const MonGroupoid& L = product.factor(0);
  const MonGroupoid& R = product.factor(1);
  const auto& parts = sg.product_index().object_parts;
  Report r;
  auto label = [&](const MonMor& a) {
    std::string out = G.name(a.base) + ":";
    for (Mor v : a.path.vertices) {
      out += " " + G.name(v);
    }
    return out;
  };

  // Bounded canonical forms per object, from walks of total length 2L.
  std::vector<std::vector<MonMor>> elements(G.num_objects());
  std::size_t total = 0;
  for (Obj z : G.objects()) {
    for (MonMor& a : product.enumerate(z, 2 * max_len)) {
      const auto [left, right] = product.split(a);
      if (left.path.length() <= max_len && right.path.length() <= max_len) {
        elements[idx(z)].push_back(std::move(a));
      }
    }
    std::set<std::pair<MonMor, MonMor>> images;
    for (const MonMor& a : elements[idx(z)]) {
      const auto pair = product.split(a);
      if (!images.insert(pair).second) {
        r.add("split-injective", "two elements share a split", {label(a)});
      }
      if (product.join(pair.first, pair.second) != a) {
        r.add("join-split", "join(split(a)) != a", {label(a)});
      }
    }
    const auto [x, y] = parts[idx(z)];
    std::set<std::pair<MonMor, MonMor>> expected;
    for (const MonMor& a : L.enumerate(x, max_len)) {
      for (const MonMor& b : R.enumerate(y, max_len)) {
        expected.insert({a, b});
      }
    }
    if (images != expected) {
      r.add("split-surjective",
            "split image differs from the pairs of factor elements",
            {G.name(z), std::to_string(images.size()),
             std::to_string(expected.size())});
    }
    total += elements[idx(z)].size();
  }

  std::size_t composable = 0;
  std::size_t products = 0;
  const bool grouped = sg.group() != nullptr;
  for (Obj z : G.objects()) {
    for (const MonMor& a : elements[idx(z)]) {
      const auto [a1, a2] = product.split(a);
      const auto inv = product.split(product.inverse(a));
      if (inv.first != L.inverse(a1) || inv.second != R.inverse(a2)) {
        r.add("preserves-inverse", "split(a^-1) != split(a)^-1", {label(a)});
      }
      for (const MonMor& b : elements[idx(product.target(a))]) {
        ++composable;
        const auto [b1, b2] = product.split(b);
        const auto ab = product.split(product.compose(a, b));
        if (ab.first != L.compose(a1, b1) || ab.second != R.compose(a2, b2)) {
          r.add("preserves-composition", "split(a•b) != split(a)•split(b)",
                {label(a), label(b)});
        }
      }
      if (!grouped) {
        continue;
      }
      for (Obj w : G.objects()) {
        for (const MonMor& b : elements[idx(w)]) {
          ++products;
          const auto [b1, b2] = product.split(b);
          const auto ab = product.split(product.group_multiply(a, b));
          if (ab.first != L.group_multiply(a1, b1) ||
              ab.second != R.group_multiply(a2, b2)) {
            r.add("preserves-product", "split(ab) != split(a)split(b)",
                  {label(a), label(b)});
          }
        }
      }
    }
  }
  r.note(std::to_string(total) + " elements, " + std::to_string(composable) +
         " composable pairs, " + std::to_string(products) + " product pairs");
  return r;
}

}  // namespace ggd
