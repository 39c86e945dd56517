#include "ggd/star_graph.hpp"

#include <algorithm>
#include <deque>

namespace ggd {

StarredGroupoid::StarredGroupoid(Groupoid groupoid,
                                 std::optional<GroupStructure> group,
                                 std::vector<StarEdge> edges)
    : groupoid_(std::move(groupoid)),
      group_(std::move(group)),
      edges_(std::move(edges)),
      adjacency_(groupoid_.num_morphisms()) {
  const auto in_star = [&](Obj x, Mor v) {
    return idx(v) < groupoid_.num_morphisms() && groupoid_.source(v) == x;
  };
  for (const auto& e : edges_) {
    if (e.a == e.b || !in_star(e.base, e.a) || !in_star(e.base, e.b)) {
      continue;
    }
    adjacency_[idx(e.a)].push_back(e.b);
    adjacency_[idx(e.b)].push_back(e.a);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
}

StarredGroupoid::StarredGroupoid(Groupoid groupoid,
                                 std::optional<GroupStructure> group,
                                 std::shared_ptr<const ProductTag> tag)
    : groupoid_(std::move(groupoid)),
      group_(std::move(group)),
      product_(std::move(tag)) {}

std::shared_ptr<const StarredGroupoid> StarredGroupoid::product(
    std::shared_ptr<const StarredGroupoid> left,
    std::shared_ptr<const StarredGroupoid> right) {
  const Groupoid& L = left->groupoid();
  const Groupoid& R = right->groupoid();
  std::optional<GroupStructure> group;
  ProductGroupoid index = [&] {
    if (left->group() && right->group()) {
      auto pg = product_group_groupoid(L, *left->group(), R, *right->group());
      group.emplace(std::move(pg.group));
      return std::move(pg.product);
    }
    return product_groupoid(L, R);
  }();
  Groupoid g = index.groupoid;
  auto tag = std::make_shared<const ProductTag>(
      ProductTag{std::move(left), std::move(right), std::move(index)});
  return std::shared_ptr<const StarredGroupoid>(
      new StarredGroupoid(std::move(g), std::move(group), std::move(tag)));
}

const StarredGroupoid& StarredGroupoid::factor(std::size_t i) const {
  if (!product_) {
    throw PreconditionError("ambient is not a product");
  }
  return i == 0 ? *product_->left : *product_->right;
}

const ProductGroupoid& StarredGroupoid::product_index() const {
  if (!product_) {
    throw PreconditionError("ambient is not a product");
  }
  return product_->index;
}

bool StarredGroupoid::adjacent(Mor a, Mor b) const {
  if (product_) {
    const auto [g1, h1] = product_->index.morphism_parts[idx(a)];
    const auto [g2, h2] = product_->index.morphism_parts[idx(b)];
    return (g1 == g2 && product_->right->adjacent(h1, h2)) ||
           (h1 == h2 && product_->left->adjacent(g1, g2));
  }
  const auto& nbrs = adjacency_[idx(a)];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::vector<Mor> StarredGroupoid::neighbors(Mor v) const {
  if (!product_) {
    return adjacency_[idx(v)];
  }
  const auto& P = product_->index;
  const auto [g, h] = P.morphism_parts[idx(v)];
  std::vector<Mor> out;
  for (Mor g2 : product_->left->neighbors(g)) {
    out.push_back(P.pair(g2, h));
  }
  for (Mor h2 : product_->right->neighbors(h)) {
    out.push_back(P.pair(g, h2));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_map_preserves(const StarredGroupoid& sg, const char* rule,
                         Mor label, std::span<const Mor> domain,
                         const auto& map, Report& r) {
  const Groupoid& G = sg.groupoid();
  for (std::size_t i = 0; i < domain.size(); ++i) {
    for (std::size_t j = i + 1; j < domain.size(); ++j) {
      const Mor a = domain[i];
      const Mor b = domain[j];
      const bool before = sg.adjacent(a, b);
      const bool after = sg.adjacent(map(a), map(b));
      if (before != after) {
        r.add(rule,
              before ? "edge is not preserved" : "non-edge becomes an edge",
              {G.name(label), G.name(a) + "-" + G.name(b)});
      }
    }
  }
}

}  // namespace

Report validate_star_structure(const StarredGroupoid& sg) {
  Report r;
  if (sg.is_product()) {
    r.merge(validate_star_structure(sg.factor(0)), "left factor: ");
    r.merge(validate_star_structure(sg.factor(1)), "right factor: ");
    return r;
  }
  const Groupoid& G = sg.groupoid();
  std::vector<std::pair<Mor, Mor>> seen;
  for (const auto& e : sg.edges()) {
    const bool ok_a = idx(e.a) < G.num_morphisms() && G.source(e.a) == e.base;
    const bool ok_b = idx(e.b) < G.num_morphisms() && G.source(e.b) == e.base;
    if (!ok_a || !ok_b) {
      r.add("star-edge-endpoint", "edge endpoint is not in the star of " +
                                      G.name(e.base),
            {ok_a ? G.name(e.a) : "?", ok_b ? G.name(e.b) : "?"});
      continue;
    }
    if (e.a == e.b) {
      r.add("star-edge-loop", "self-loop in star of " + G.name(e.base),
            {G.name(e.a)});
      continue;
    }
    const std::pair<Mor, Mor> key{std::min(e.a, e.b), std::max(e.a, e.b)};
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      r.add("star-edge-duplicate", "edge listed twice",
            {G.name(key.first), G.name(key.second)});
    }
    seen.emplace_back(key);
  }

  for (Mor g : G.morphisms()) {
    check_map_preserves(sg, "left-translation", g, G.star(G.target(g)),
                        [&](Mor h) { return G.compose(g, h); }, r);
  }

  if (const GroupStructure* S = sg.group()) {
    for (Mor k : G.morphisms()) {
      for (Obj x : G.objects()) {
        check_map_preserves(sg, "right-multiplication", k, G.star(x),
                            [&](Mor h) { return S->multiply(h, k); }, r);
        check_map_preserves(sg, "left-multiplication", k, G.star(x),
                            [&](Mor h) { return S->multiply(k, h); }, r);
      }
    }
    for (Obj x : G.objects()) {
      check_map_preserves(sg, "group-inversion", G.identity(x), G.star(x),
                          [&](Mor h) { return S->group_inverse(h); }, r);
    }
  }
  return r;
}

bool is_valid_path(const StarredGroupoid& sg, const EdgePath& p) {
  if (p.vertices.empty()) {
    return false;
  }
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (idx(p.vertices[i]) >= sg.groupoid().num_morphisms()) {
      return false;
    }
    if (i > 0 && !sg.adjacent(p.vertices[i - 1], p.vertices[i])) {
      return false;
    }
  }
  return true;
}

EdgePath reduce_path(const EdgePath& p) {
  EdgePath out;
  out.vertices.reserve(p.vertices.size());
  for (Mor v : p.vertices) {
    const std::size_t n = out.vertices.size();
    if (n >= 2 && out.vertices[n - 2] == v) {
      out.vertices.pop_back();
    } else {
      out.vertices.push_back(v);
    }
  }
  return out;
}

EdgePath left_translate_path(const StarredGroupoid& sg, Mor g,
                             const EdgePath& p) {
  const Groupoid& G = sg.groupoid();
  EdgePath out;
  out.vertices.reserve(p.vertices.size());
  for (Mor v : p.vertices) {
    out.vertices.push_back(G.compose(g, v));
  }
  return out;
}

namespace {

std::vector<bool> star_property(const StarredGroupoid& sg, bool want_tree) {
  const Groupoid& G = sg.groupoid();
  std::vector<bool> out(G.num_objects());
  if (sg.is_product()) {
    const auto left = star_property(sg.factor(0), want_tree);
    const auto right = star_property(sg.factor(1), want_tree);
    for (Obj xy : G.objects()) {
      const auto [x, y] = sg.product_index().object_parts[idx(xy)];
      out[idx(xy)] = left[idx(x)] && right[idx(y)];
    }
    return out;
  }
  std::vector<bool> all(G.num_morphisms(), true);
  for (Obj x : G.objects()) {
    const auto shape = induced_subgraph_shape(sg, x, all);
    out[idx(x)] = want_tree ? shape.is_tree() : shape.connected;
  }
  return out;
}

}  // namespace

std::vector<bool> star_connected(const StarredGroupoid& sg) {
  return star_property(sg, false);
}

std::vector<bool> star_is_tree(const StarredGroupoid& sg) {
  return star_property(sg, true);
}

SubgraphShape induced_subgraph_shape(const StarredGroupoid& sg, Obj x,
                                     const std::vector<bool>& member) {
  const Groupoid& G = sg.groupoid();
  SubgraphShape shape;
  std::vector<Mor> verts;
  for (Mor v : G.star(x)) {
    if (member[idx(v)]) {
      verts.push_back(v);
    }
  }
  shape.contains_base = member[idx(G.identity(x))];
  if (verts.empty()) {
    shape.connected = false;
    return shape;
  }

  const std::size_t n = G.num_morphisms();
  std::vector<Mor> parent(n, kNoMor);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> depth(n, 0);
  std::size_t components = 0;

  auto roots = verts;
  if (shape.contains_base) {
    std::erase(roots, G.identity(x));
    roots.insert(roots.begin(), G.identity(x));
  }
  for (Mor root : roots) {
    if (seen[idx(root)]) {
      continue;
    }
    ++components;
    std::deque<Mor> queue{root};
    seen[idx(root)] = true;
    while (!queue.empty()) {
      const Mor u = queue.front();
      queue.pop_front();
      for (Mor v : sg.neighbors(u)) {
        if (!member[idx(v)] || v == parent[idx(u)]) {
          continue;
        }
        if (!seen[idx(v)]) {
          seen[idx(v)] = true;
          parent[idx(v)] = u;
          depth[idx(v)] = depth[idx(u)] + 1;
          queue.push_back(v);
        } else if (!shape.cycle && parent[idx(v)] != u) {
          // Non-tree edge u-v closes a cycle through their common ancestor.
          std::vector<Mor> up_u{u};
          std::vector<Mor> up_v{v};
          Mor a = u;
          Mor b = v;
          while (depth[idx(a)] > depth[idx(b)]) {
            a = parent[idx(a)];
            up_u.push_back(a);
          }
          while (depth[idx(b)] > depth[idx(a)]) {
            b = parent[idx(b)];
            up_v.push_back(b);
          }
          while (a != b) {
            a = parent[idx(a)];
            b = parent[idx(b)];
            up_u.push_back(a);
            up_v.push_back(b);
          }
          EdgePath cycle;
          cycle.vertices.assign(up_u.rbegin(), up_u.rend());
          cycle.vertices.insert(cycle.vertices.end(), up_v.begin(),
                                up_v.end());
          shape.cycle = std::move(cycle);
        }
      }
    }
  }
  shape.connected = components == 1;
  return shape;
}

}  // namespace ggd
