#include "ggd/groupoid.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

namespace ggd {

namespace {

bool valid_token(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  return std::none_of(s.begin(), s.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '#';
  });
}

template <typename Id>
std::vector<std::string> sorted_unique_names(
    const std::vector<std::string>& names, const char* kind, Report& bad) {
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (!valid_token(sorted[i])) {
      bad.add("malformed", std::string("invalid ") + kind + " name",
              {"'" + sorted[i] + "'"});
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      bad.add("malformed", std::string("duplicate ") + kind + " name",
              {sorted[i]});
    }
  }
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return sorted;
}

}  // namespace

void GroupoidTable::canonicalize() {
  std::sort(objects.begin(), objects.end());
  std::sort(morphisms.begin(), morphisms.end(),
            [](const Morphism& a, const Morphism& b) {
              return a.name < b.name;
            });
  std::sort(identities.begin(), identities.end(),
            [](const Identity& a, const Identity& b) {
              return a.object < b.object ||
                     (a.object == b.object && a.morphism < b.morphism);
            });
  std::sort(compose.begin(), compose.end());
}

Groupoid::Groupoid(const GroupoidTable& table) {
  Report bad;
  object_names_ = sorted_unique_names<Obj>(table.objects, "object", bad);
  std::vector<std::string> mor_names;
  mor_names.reserve(table.morphisms.size());
  for (const auto& m : table.morphisms) {
    mor_names.push_back(m.name);
  }
  morphism_names_ = sorted_unique_names<Mor>(mor_names, "morphism", bad);

  for (std::size_t i = 0; i < object_names_.size(); ++i) {
    object_index_.emplace(object_names_[i],
                          Obj{static_cast<std::uint32_t>(i)});
  }
  for (std::size_t i = 0; i < morphism_names_.size(); ++i) {
    morphism_index_.emplace(morphism_names_[i],
                            Mor{static_cast<std::uint32_t>(i)});
  }

  const std::size_t n = morphism_names_.size();
  source_.assign(n, kNoObj);
  target_.assign(n, kNoObj);
  for (const auto& m : table.morphisms) {
    const Mor g = morphism_index_.at(m.name);
    auto s = find_object(m.source);
    auto t = find_object(m.target);
    if (!s) {
      bad.add("malformed", "unknown source object", {m.name, m.source});
    }
    if (!t) {
      bad.add("malformed", "unknown target object", {m.name, m.target});
    }
    source_[idx(g)] = s.value_or(kNoObj);
    target_[idx(g)] = t.value_or(kNoObj);
  }

  identity_.assign(object_names_.size(), kNoMor);
  identity_of_.assign(n, kNoObj);
  for (const auto& id : table.identities) {
    auto g = find_morphism(id.morphism);
    auto x = find_object(id.object);
    if (!g || !x) {
      bad.add("malformed", "identity entry references unknown name",
              {id.morphism, id.object});
      continue;
    }
    if (identity_[idx(*x)] != kNoMor) {
      bad.add("malformed", "object has two identities",
              {id.object, name(identity_[idx(*x)]), id.morphism});
      continue;
    }
    if (identity_of_[idx(*g)] != kNoObj) {
      bad.add("malformed", "morphism is the identity of two objects",
              {id.morphism});
      continue;
    }
    identity_[idx(*x)] = *g;
    identity_of_[idx(*g)] = *x;
  }
  for (std::size_t i = 0; i < object_names_.size(); ++i) {
    if (identity_[i] == kNoMor) {
      bad.add("malformed", "object has no identity", {object_names_[i]});
    }
  }

  comp_.assign(n * n, kNoMor);
  for (const auto& [gn, hn, kn] : table.compose) {
    auto g = find_morphism(gn);
    auto h = find_morphism(hn);
    auto k = find_morphism(kn);
    if (!g || !h || !k) {
      bad.add("malformed", "compose entry references unknown morphism",
              {gn, hn, kn});
      continue;
    }
    Mor& slot = comp_[idx(*g) * n + idx(*h)];
    if (slot != kNoMor) {
      bad.add("malformed", "compose entry given twice", {gn, hn});
      continue;
    }
    slot = *k;
  }

  if (!bad.ok()) {
    throw MalformedError(std::move(bad));
  }

  stars_.assign(object_names_.size(), {});
  for (std::size_t i = 0; i < n; ++i) {
    stars_[idx(source_[i])].push_back(Mor{static_cast<std::uint32_t>(i)});
  }

  inverse_.assign(n, kNoMor);
  for (std::size_t i = 0; i < n; ++i) {
    const Mor g{static_cast<std::uint32_t>(i)};
    const Mor left_unit = identity(source(g));
    const Mor right_unit = identity(target(g));
    for (Mor k : stars_[idx(target(g))]) {
      if (table_entry(g, k) == left_unit && table_entry(k, g) == right_unit) {
        inverse_[i] = k;
        break;
      }
    }
  }
}

std::optional<Obj> Groupoid::find_object(std::string_view n) const {
  auto it = object_index_.find(std::string(n));
  if (it == object_index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<Mor> Groupoid::find_morphism(std::string_view n) const {
  auto it = morphism_index_.find(std::string(n));
  if (it == morphism_index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

Obj Groupoid::object(std::string_view n) const {
  if (auto x = find_object(n)) {
    return *x;
  }
  throw PreconditionError("unknown object '" + std::string(n) + "'");
}

Mor Groupoid::morphism(std::string_view n) const {
  if (auto g = find_morphism(n)) {
    return *g;
  }
  throw PreconditionError("unknown morphism '" + std::string(n) + "'");
}

std::optional<Mor> Groupoid::table_entry(Mor g, Mor h) const {
  const Mor k = comp_[idx(g) * num_morphisms() + idx(h)];
  if (k == kNoMor) {
    return std::nullopt;
  }
  return k;
}

Mor Groupoid::compose(Mor g, Mor h) const {
  if (target(g) != source(h)) {
    throw PreconditionError("cannot compose " + name(g) + " with " + name(h) +
                            ": target " + name(target(g)) + " != source " +
                            name(source(h)));
  }
  if (auto k = table_entry(g, h)) {
    return *k;
  }
  throw PreconditionError("compose table has no entry for " + name(g) + " " +
                          name(h));
}

Mor Groupoid::difference(Mor g, Mor h) const {
  if (source(g) != source(h)) {
    throw PreconditionError("difference needs a common source: " + name(g) +
                            " starts at " + name(source(g)) + ", " + name(h) +
                            " at " + name(source(h)));
  }
  const Mor gi = inverse(g);
  if (gi == kNoMor) {
    throw PreconditionError("no inverse for " + name(g));
  }
  return compose(gi, h);
}

std::vector<Mor> Groupoid::hom(Obj x, Obj y) const {
  std::vector<Mor> out;
  for (Mor g : star(x)) {
    if (target(g) == y) {
      out.push_back(g);
    }
  }
  return out;
}

std::vector<Obj> Groupoid::objects() const {
  std::vector<Obj> out(num_objects());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = Obj{static_cast<std::uint32_t>(i)};
  }
  return out;
}

std::vector<Mor> Groupoid::morphisms() const {
  std::vector<Mor> out(num_morphisms());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = Mor{static_cast<std::uint32_t>(i)};
  }
  return out;
}

GroupoidTable Groupoid::table() const {
  GroupoidTable t;
  t.objects = object_names_;
  for (Mor g : morphisms()) {
    t.morphisms.push_back({name(g), name(source(g)), name(target(g))});
  }
  for (Obj x : objects()) {
    t.identities.push_back({name(identity(x)), name(x)});
  }
  for (Mor g : morphisms()) {
    for (Mor h : morphisms()) {
      if (auto k = table_entry(g, h)) {
        t.compose.push_back({name(g), name(h), name(*k)});
      }
    }
  }
  return t;
}

Report validate_groupoid(const Groupoid& G) {
  Report r;
  for (Obj x : G.objects()) {
    const Mor e = G.identity(x);
    if (G.source(e) != x || G.target(e) != x) {
      r.add("identity-endpoints", "source and target of the identity of " +
                                      G.name(x) + " must be " + G.name(x),
            {G.name(e)});
    }
  }

  const auto all = G.morphisms();
  for (Mor g : all) {
    for (Mor h : all) {
      const auto k = G.table_entry(g, h);
      const bool composable = G.target(g) == G.source(h);
      if (composable && !k) {
        r.add("composition-total", "composable pair has no composite",
              {G.name(g), G.name(h)});
      } else if (!composable && k) {
        r.add("composition-domain",
              "composite given for a pair with target != source",
              {G.name(g), G.name(h), G.name(*k)});
      } else if (k && (G.source(*k) != G.source(g) ||
                       G.target(*k) != G.target(h))) {
        r.add("source-target",
              "composite must run from source(g) to target(h)",
              {G.name(g), G.name(h), G.name(*k)});
      }
    }
  }

  for (Mor g : all) {
    const auto left = G.table_entry(G.identity(G.source(g)), g);
    const auto right = G.table_entry(g, G.identity(G.target(g)));
    if (left != g || right != g) {
      r.add("identity-law", "identities must act trivially", {G.name(g)});
    }
  }

  for (Mor g : all) {
    for (Mor h : G.star(G.target(g))) {
      const auto gh = G.table_entry(g, h);
      if (!gh) {
        continue;
      }
      for (Mor k : G.star(G.target(h))) {
        const auto hk = G.table_entry(h, k);
        if (!hk) {
          continue;
        }
        const auto left = G.table_entry(*gh, k);
        const auto right = G.table_entry(g, *hk);
        if (left != right) {
          r.add("associativity", "(g∘h)∘k != g∘(h∘k)",
                {G.name(g), G.name(h), G.name(k)});
        }
      }
    }
  }

  for (Mor g : all) {
    if (G.inverse(g) == kNoMor) {
      r.add("inverse", "no k with g∘k and k∘g both identities", {G.name(g)});
    }
  }
  return r;
}

Report validate_groupoid(const GroupoidTable& table) {
  try {
    return validate_groupoid(Groupoid(table));
  } catch (const MalformedError& e) {
    return e.report();
  }
}

std::string pair_name(std::string_view a, std::string_view b) {
  std::string out;
  out.reserve(a.size() + b.size() + 3);
  out += '(';
  out += a;
  out += ',';
  out += b;
  out += ')';
  return out;
}

ProductGroupoid product_groupoid(const Groupoid& L, const Groupoid& R) {
  GroupoidTable t;
  for (Obj x : L.objects()) {
    for (Obj y : R.objects()) {
      t.objects.push_back(pair_name(L.name(x), R.name(y)));
      t.identities.push_back({pair_name(L.name(L.identity(x)),
                                        R.name(R.identity(y))),
                              pair_name(L.name(x), R.name(y))});
    }
  }
  for (Mor g : L.morphisms()) {
    for (Mor h : R.morphisms()) {
      t.morphisms.push_back({pair_name(L.name(g), R.name(h)),
                             pair_name(L.name(L.source(g)),
                                       R.name(R.source(h))),
                             pair_name(L.name(L.target(g)),
                                       R.name(R.target(h)))});
    }
  }
  for (Mor g : L.morphisms()) {
    for (Mor g2 : L.star(L.target(g))) {
      const Mor gg = L.compose(g, g2);
      for (Mor h : R.morphisms()) {
        for (Mor h2 : R.star(R.target(h))) {
          const Mor hh = R.compose(h, h2);
          t.compose.push_back({pair_name(L.name(g), R.name(h)),
                               pair_name(L.name(g2), R.name(h2)),
                               pair_name(L.name(gg), R.name(hh))});
        }
      }
    }
  }

  ProductGroupoid p{Groupoid(t), {}, {}, R.num_objects(), R.num_morphisms(),
                    {}, {}};
  const Groupoid& P = p.groupoid;
  p.object_parts.resize(P.num_objects());
  p.object_of.resize(L.num_objects() * R.num_objects());
  for (Obj x : L.objects()) {
    for (Obj y : R.objects()) {
      const Obj xy = P.object(pair_name(L.name(x), R.name(y)));
      p.object_parts[idx(xy)] = {x, y};
      p.object_of[idx(x) * R.num_objects() + idx(y)] = xy;
    }
  }
  p.morphism_parts.resize(P.num_morphisms());
  p.morphism_of.resize(L.num_morphisms() * R.num_morphisms());
  for (Mor g : L.morphisms()) {
    for (Mor h : R.morphisms()) {
      const Mor gh = P.morphism(pair_name(L.name(g), R.name(h)));
      p.morphism_parts[idx(gh)] = {g, h};
      p.morphism_of[idx(g) * R.num_morphisms() + idx(h)] = gh;
    }
  }
  return p;
}

bool Closure::contains(Mor g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

Closure subgroupoid_generated(const Groupoid& G, std::span<const Mor> s) {
  std::vector<bool> in(G.num_morphisms(), false);
  std::deque<Mor> work;
  auto add = [&](Mor g) {
    if (!in[idx(g)]) {
      in[idx(g)] = true;
      work.push_back(g);
    }
  };
  for (Obj x : G.objects()) {
    add(G.identity(x));
  }
  for (Mor g : s) {
    add(g);
    add(G.inverse(g));
  }
  while (!work.empty()) {
    const Mor g = work.front();
    work.pop_front();
    add(G.inverse(g));
    for (Mor h : G.star(G.target(g))) {
      if (in[idx(h)]) {
        add(G.compose(g, h));
      }
    }
    for (Mor h : G.morphisms()) {
      if (in[idx(h)] && G.target(h) == G.source(g)) {
        add(G.compose(h, g));
      }
    }
  }
  Closure c;
  for (Mor g : G.morphisms()) {
    if (in[idx(g)]) {
      c.members.push_back(g);
    }
  }
  c.generates = c.members.size() == G.num_morphisms();
  return c;
}

}  // namespace ggd
