#include "ggd/principle.hpp"

#include <algorithm>
#include <deque>

namespace ggd {

LocalMorphism::LocalMorphism(const StarredGroupoid& source, MorphismSet domain,
                             const StarredGroupoid& target,
                             std::vector<Mor> values)
    : source_(&source),
      target_(&target),
      domain_(std::move(domain)),
      values_(std::move(values)) {
  const Groupoid& G = source.groupoid();
  if (values_.size() != G.num_morphisms()) {
    throw PreconditionError("local morphism table has the wrong size");
  }
  for (Obj x : G.objects()) {
    objects_.push_back(target.groupoid().find_object(G.name(x)).value_or(kNoObj));
  }
}

LocalMorphism LocalMorphism::from_names(
    const StarredGroupoid& source, MorphismSet domain,
    const StarredGroupoid& target,
    std::span<const std::pair<std::string, std::string>> pairs) {
  const Groupoid& G = source.groupoid();
  const Groupoid& H = target.groupoid();
  std::vector<Mor> values(G.num_morphisms(), kNoMor);
  for (const auto& [u, v] : pairs) {
    const Mor gu = G.morphism(u);
    if (values[idx(gu)] != kNoMor) {
      throw PreconditionError("local morphism defined twice at " + u);
    }
    values[idx(gu)] = H.morphism(v);
  }
  return LocalMorphism(source, std::move(domain), target, std::move(values));
}

Report validate_local_morphism(const LocalMorphism& f) {
  const Groupoid& G = f.source().groupoid();
  const Groupoid& H = f.target().groupoid();
  const MorphismSet& W = f.domain();
  Report r;
  bool objects_ok = true;
  for (Obj x : G.objects()) {
    if (f.object_image(x) == kNoObj) {
      r.add("objects", "target has no object named " + G.name(x),
            {G.name(x)});
      objects_ok = false;
    }
  }
  for (Mor u : G.morphisms()) {
    if (W.contains(u) && f(u) == kNoMor) {
      r.add("domain", "f is undefined on a member of W", {G.name(u)});
    } else if (!W.contains(u) && f(u) != kNoMor) {
      r.add("domain", "f is defined outside W", {G.name(u)});
    }
  }
  if (!objects_ok || !r.ok()) {
    return r;
  }
  for (Obj x : G.objects()) {
    const Mor e = G.identity(x);
    if (W.contains(e) && f(e) != H.identity(f.object_image(x))) {
      r.add("identities", "f(identity) is not the identity in H",
            {G.name(e)});
    }
  }
  bool endpoints_ok = true;
  for (Mor u : W.members()) {
    if (H.source(f(u)) != f.object_image(G.source(u)) ||
        H.target(f(u)) != f.object_image(G.target(u))) {
      r.add("endpoints", "f does not preserve source and target",
            {G.name(u), H.name(f(u))});
      endpoints_ok = false;
    }
  }
  if (!endpoints_ok) {
    return r;
  }
  for (Mor u : W.members()) {
    for (Mor v : G.star(G.target(u))) {
      if (!W.contains(v)) {
        continue;
      }
      const Mor uv = G.compose(u, v);
      if (W.contains(uv) && f(uv) != H.compose(f(u), f(v))) {
        r.add("composition", "f(u∘v) != f(u)∘f(v)", {G.name(u), G.name(v)});
      }
    }
  }
  const GroupStructure* S = f.source().group();
  const GroupStructure* T = f.target().group();
  if (S != nullptr && T != nullptr) {
    for (Mor u : W.members()) {
      for (Mor v : W.members()) {
        const Mor uv = S->multiply(u, v);
        if (W.contains(uv) && f(uv) != T->multiply(f(u), f(v))) {
          r.add("product", "f(uv) != f(u)f(v)", {G.name(u), G.name(v)});
        }
      }
    }
  }
  return r;
}

namespace {

const LocalMorphism& checked(const LocalMorphism& f) {
  Report r = validate_local_morphism(f);
  if (!r.ok()) {
    throw ValidationError("not a local morphism", std::move(r));
  }
  return f;
}

}  // namespace

Extension::Extension(const LocalMorphism& f, std::optional<MorphismSet> cover)
    : f_(&checked(f)),
      presentation_(f.source(), f.domain(), std::move(cover)) {}

Mor Extension::on_word(const Word& w) const {
  const Groupoid& H = f_->target().groupoid();
  Mor acc = H.identity(f_->object_image(w.source));
  for (Mor u : w.letters) {
    acc = H.compose(acc, (*f_)(u));
  }
  return acc;
}

Word Extension::factorize(Mor g, TieBreak order) const {
  const StarredGroupoid& sg = f_->source();
  const Groupoid& G = sg.groupoid();
  const auto trees = star_is_tree(sg);
  for (Obj x : G.objects()) {
    if (!trees[idx(x)]) {
      throw PreconditionError("strong extension needs star simply connected "
                              "G: the star of " +
                              G.name(x) + " is not a connected tree");
    }
  }
  const MorphismSet& W = f_->domain();
  const Obj x = G.source(g);
  std::vector<Mor> letters;
  for (Mor u : W.members()) {
    if (!G.is_identity(u)) {
      letters.push_back(u);
    }
  }
  if (order == TieBreak::reverse_lexicographic) {
    std::reverse(letters.begin(), letters.end());
  }

  std::vector<std::pair<Mor, Mor>> parent(G.num_morphisms(), {kNoMor, kNoMor});
  std::vector<bool> seen(G.num_morphisms(), false);
  std::deque<Mor> queue{G.identity(x)};
  seen[idx(G.identity(x))] = true;
  while (!queue.empty() && !seen[idx(g)]) {
    const Mor h = queue.front();
    queue.pop_front();
    for (Mor u : letters) {
      if (G.source(u) != G.target(h)) {
        continue;
      }
      const Mor next = G.compose(h, u);
      if (!seen[idx(next)]) {
        seen[idx(next)] = true;
        parent[idx(next)] = {h, u};
        queue.push_back(next);
      }
    }
  }
  if (!seen[idx(g)]) {
    throw PreconditionError("W does not generate " + G.name(g));
  }
  Word w{x, {}};
  for (Mor at = g; at != G.identity(x); at = parent[idx(at)].first) {
    w.letters.push_back(parent[idx(at)].second);
  }
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

Mor Extension::on_morphism(Mor g, TieBreak order) const {
  return on_word(factorize(g, order));
}

Word product_word(const Groupoid& g, const GroupStructure& s,
                  const MorphismSet& w, const Word& a, const Word& b) {
  const std::size_t n = a.letters.size();
  const std::size_t m = b.letters.size();
  const Obj end_a = word_target(g, a);
  const Obj end_b = word_target(g, b);
  std::vector<Mor> letters;
  for (std::size_t i = 0; i < std::max(n, m); ++i) {
    const Mor u = i < n ? a.letters[i] : g.identity(end_a);
    const Mor v = i < m ? b.letters[i] : g.identity(end_b);
    letters.push_back(s.multiply(u, v));
  }
  return make_word(g, w, s.multiply(a.source, b.source), letters);
}

Report check_group_morphism(const Extension& ext,
                            std::span<const Word> samples) {
  const LocalMorphism& f = ext.local();
  const GroupStructure* S = f.source().group();
  const GroupStructure* T = f.target().group();
  if (S == nullptr || T == nullptr) {
    throw PreconditionError(
        "group morphism check needs group-groupoids on both sides");
  }
  const Groupoid& G = f.source().groupoid();
  const MorphismSet& W = f.domain();
  for (Mor u : W.members()) {
    for (Mor v : W.members()) {
      if (!W.contains(S->multiply(u, v))) {
        throw PreconditionError("W is not a subgroup: " + G.name(u) + "·" +
                                G.name(v) + " = " +
                                G.name(S->multiply(u, v)) + " is not in W");
      }
    }
    if (!W.contains(S->group_inverse(u))) {
      throw PreconditionError("W is not a subgroup: the group inverse of " +
                              G.name(u) + " is not in W");
    }
  }

  Report r;
  std::size_t checked = 0;
  for (const Word& a : samples) {
    for (const Word& b : samples) {
      const Word ab = product_word(G, *S, W, a, b);
      const Mor left = ext.on_word(ab);
      const Mor right = T->multiply(ext.on_word(a), ext.on_word(b));
      ++checked;
      if (left != right) {
        const Groupoid& H = f.target().groupoid();
        r.add("group-morphism", "f~(ab) != f~(a)f~(b)",
              {H.name(left), H.name(right)});
      }
    }
  }
  r.note("checked " + std::to_string(checked) + " pairs");
  return r;
}

Agreement uniqueness_check(const LocalMorphism& f, const WordMap& first,
                           const WordMap& second, std::size_t max_len) {
  const Groupoid& G = f.source().groupoid();
  for (Mor u : f.domain().members()) {
    if (G.is_identity(u)) {
      continue;
    }
    const Word single{G.source(u), {u}};
    if (first(single) != f(u) || second(single) != f(u)) {
      throw PreconditionError("extension disagrees with f on " + G.name(u));
    }
  }
  for (const Word& w : enumerate_words(G, f.domain(), max_len)) {
    if (first(w) != second(w)) {
      return Agreement{false, w};
    }
  }
  return Agreement{};
}

}  // namespace ggd
