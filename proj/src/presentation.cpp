#include "ggd/presentation.hpp"

#include <algorithm>
#include <deque>

namespace ggd {

MorphismSet::MorphismSet(std::span<const Mor> members, std::size_t universe)
    : mask_(universe, false) {
  for (Mor g : members) {
    if (idx(g) >= universe) {
      throw PreconditionError("morphism index out of range");
    }
    mask_[idx(g)] = true;
  }
  for (std::size_t i = 0; i < universe; ++i) {
    if (mask_[i]) {
      members_.push_back(Mor{static_cast<std::uint32_t>(i)});
    }
  }
}

MorphismSet MorphismSet::all(const Groupoid& g) {
  const auto m = g.morphisms();
  return MorphismSet(m, g.num_morphisms());
}

MorphismSet MorphismSet::identities(const Groupoid& g) {
  std::vector<Mor> ids;
  for (Obj x : g.objects()) {
    ids.push_back(g.identity(x));
  }
  return MorphismSet(ids, g.num_morphisms());
}

MorphismSet square(const Groupoid& g, const MorphismSet& w) {
  std::vector<Mor> out;
  for (Mor u : w.members()) {
    for (Mor v : g.star(g.target(u))) {
      if (w.contains(v)) {
        out.push_back(g.compose(u, v));
      }
    }
  }
  return MorphismSet(out, g.num_morphisms());
}

Word make_word(const Groupoid& g, const MorphismSet& w, Obj source,
               std::span<const Mor> letters) {
  Word out{source, {}};
  Obj at = source;
  for (Mor u : letters) {
    if (!w.contains(u)) {
      throw PreconditionError("letter " + g.name(u) + " is not in W");
    }
    if (g.source(u) != at) {
      throw PreconditionError("letter " + g.name(u) + " starts at " +
                              g.name(g.source(u)) + ", expected " +
                              g.name(at));
    }
    if (!g.is_identity(u)) {
      out.letters.push_back(u);
    }
    at = g.target(u);
  }
  return out;
}

Obj word_target(const Groupoid& g, const Word& w) {
  return w.letters.empty() ? w.source : g.target(w.letters.back());
}

Mor evaluate(const Groupoid& g, const Word& w) {
  Mor acc = g.identity(w.source);
  for (Mor u : w.letters) {
    acc = g.compose(acc, u);
  }
  return acc;
}

Word concatenate(const Groupoid& g, const Word& a, const Word& b) {
  if (word_target(g, a) != b.source) {
    throw PreconditionError("words are not composable");
  }
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Word invert(const Groupoid& g, const Word& w) {
  Word out{word_target(g, w), {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(g.inverse(*it));
  }
  return out;
}

Word free_reduce(const Groupoid& g, const Word& w) {
  Word out{w.source, {}};
  for (Mor u : w.letters) {
    if (g.is_identity(u)) {
      continue;
    }
    if (!out.letters.empty() && g.inverse(out.letters.back()) == u) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(u);
    }
  }
  return out;
}

Word fold(const Groupoid& g, const MorphismSet& w, const Word& word) {
  std::vector<Mor> stack;
  for (Mor next : word.letters) {
    Mor u = next;
    while (!stack.empty() && !g.is_identity(u)) {
      const Mor merged = g.compose(stack.back(), u);
      if (!w.contains(merged)) {
        break;
      }
      stack.pop_back();
      u = merged;
    }
    if (!g.is_identity(u)) {
      stack.push_back(u);
    }
  }
  return free_reduce(g, Word{word.source, std::move(stack)});
}

std::vector<Word> enumerate_words(const Groupoid& g, const MorphismSet& w,
                                  std::size_t max_len) {
  std::vector<Word> out;
  for (Obj x : g.objects()) {
    Word current{x, {}};
    auto visit = [&](auto&& self, Obj at) -> void {
      out.push_back(current);
      if (current.letters.size() == max_len) {
        return;
      }
      for (Mor u : g.star(at)) {
        if (!w.contains(u) || g.is_identity(u)) {
          continue;
        }
        current.letters.push_back(u);
        self(self, g.target(u));
        current.letters.pop_back();
      }
    };
    visit(visit, x);
  }
  return out;
}

Report check_hypotheses(const StarredGroupoid& sg, const MorphismSet& w,
                        const std::optional<MorphismSet>& v) {
  if (sg.is_product()) {
    throw PreconditionError(
        "M(G,W) hypotheses need materialized star graphs, not a product");
  }
  const Groupoid& G = sg.groupoid();
  Report r;
  if (w.mask().size() != G.num_morphisms()) {
    throw PreconditionError("W belongs to a different groupoid");
  }

  const auto connected = star_connected(sg);
  for (Obj x : G.objects()) {
    if (!connected[idx(x)]) {
      r.add("star-connected", "star graph is not connected", {G.name(x)});
    }
    if (!w.contains(G.identity(x))) {
      r.add("W-identities", "W misses the identity of " + G.name(x),
            {G.name(G.identity(x))});
    }
  }
  for (Mor u : w.members()) {
    if (!w.contains(G.inverse(u))) {
      r.add("W-inverse-closed", "W contains u but not its inverse",
            {G.name(u), G.name(G.inverse(u))});
    }
  }
  for (Obj x : G.objects()) {
    const auto shape = induced_subgraph_shape(sg, x, w.mask());
    if (!shape.contains_base || !shape.connected) {
      r.add("W-star-connected",
            "W does not meet the star of " + G.name(x) +
                " in a connected subgraph through the identity",
            {G.name(x)});
    }
  }
  const Closure closure = subgroupoid_generated(G, w.members());
  if (!closure.generates) {
    for (Mor g : G.morphisms()) {
      if (!closure.contains(g)) {
        r.add("W-generates", "W does not generate G", {G.name(g)});
        break;
      }
    }
  }

  const MorphismSet w2 = square(G, w);
  std::vector<Mor> needed = w.members();
  needed.insert(needed.end(), w2.members().begin(), w2.members().end());
  const MorphismSet lower(needed, G.num_morphisms());
  const MorphismSet& cover = v ? *v : lower;
  if (v) {
    if (v->mask().size() != G.num_morphisms()) {
      throw PreconditionError("V belongs to a different groupoid");
    }
    for (Mor g : lower.members()) {
      if (!v->contains(g)) {
        r.add("V-contains-W-squared", "W ∪ W² is not contained in V",
              {G.name(g)});
      }
    }
  }
  for (Obj x : G.objects()) {
    const auto shape = induced_subgraph_shape(sg, x, cover.mask());
    if (!shape.contains_base || !shape.connected) {
      r.add("V-liftable",
            "V meets the star of " + G.name(x) +
                " in a disconnected subgraph or misses the identity",
            {G.name(x)});
    } else if (shape.cycle) {
      std::vector<std::string> cyc;
      for (Mor c : shape.cycle->vertices) {
        cyc.push_back(G.name(c));
      }
      r.add("V-liftable", "V meets the star of " + G.name(x) +
                              " in a subgraph with a cycle",
            std::move(cyc));
    }
  }
  return r;
}

namespace {

MorphismSet default_cover(const Groupoid& g, const MorphismSet& w,
                          const std::optional<MorphismSet>& v) {
  if (v) {
    return *v;
  }
  std::vector<Mor> m = w.members();
  const MorphismSet w2 = square(g, w);
  m.insert(m.end(), w2.members().begin(), w2.members().end());
  return MorphismSet(m, g.num_morphisms());
}

const StarredGroupoid& checked(const StarredGroupoid& sg, const MorphismSet& w,
                               const std::optional<MorphismSet>& v) {
  Report r = check_hypotheses(sg, w, v);
  if (!r.ok()) {
    throw ValidationError("hypotheses for M(G,W) ≅ Mon(G) fail", std::move(r));
  }
  return sg;
}

}  // namespace

Presentation::Presentation(const StarredGroupoid& sg, MorphismSet w,
                           std::optional<MorphismSet> v)
    : sg_(&checked(sg, w, v)),
      w_(std::move(w)),
      v_(default_cover(sg.groupoid(), w_, v)),
      mon_(sg),
      tree_parent_(sg.groupoid().num_morphisms(), kNoMor) {
  const Groupoid& G = sg.groupoid();
  for (Obj x : G.objects()) {
    const Mor root = G.identity(x);
    std::deque<Mor> queue{root};
    std::vector<bool> seen(G.num_morphisms(), false);
    seen[idx(root)] = true;
    while (!queue.empty()) {
      const Mor u = queue.front();
      queue.pop_front();
      for (Mor n : sg.neighbors(u)) {
        if (v_.contains(n) && !seen[idx(n)]) {
          seen[idx(n)] = true;
          tree_parent_[idx(n)] = u;
          queue.push_back(n);
        }
      }
    }
  }
}

MonMor Presentation::lift(Mor u) const {
  const Groupoid& G = groupoid();
  if (!v_.contains(u)) {
    throw PreconditionError(G.name(u) + " is not in V");
  }
  std::vector<Mor> rev{u};
  while (!G.is_identity(rev.back())) {
    rev.push_back(tree_parent_[idx(rev.back())]);
  }
  return MonMor{G.source(u), EdgePath{{rev.rbegin(), rev.rend()}}};
}

MonMor Presentation::to_mon(const Word& w) const {
  MonMor acc = mon_.identity(w.source);
  for (Mor u : w.letters) {
    acc = mon_.compose(acc, lift(u));
  }
  return acc;
}

bool Presentation::equal(const Word& a, const Word& b) const {
  return to_mon(a) == to_mon(b);
}

}  // namespace ggd
