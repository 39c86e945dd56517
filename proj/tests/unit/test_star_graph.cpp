#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "ggd/star_graph.hpp"

using namespace ggd;
using support::fx;

TEST_CASE("fixture star structures validate clean") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    const GgdModel m = fixture(name);
    CHECK_NOTHROW(load(m));
  }
}

TEST_CASE("uniform second-coordinate edges are translation invariant") {
  GgdModel m = pair_groupoid(3);
  for (int x = 0; x < 3; ++x) {
    const std::string o = std::to_string(x);
    m.star_edges.push_back({o, "(" + o + ",0)", "(" + o + ",1)"});
  }
  CHECK_NOTHROW(load(m));
}

TEST_CASE("P3 with the single edge (0,0)-(0,1) breaks left translation") {
  GgdModel m = pair_groupoid(3);
  m.star_edges.push_back({"0", "(0,0)", "(0,1)"});
  const Groupoid g(m.groupoid);
  std::vector<StarEdge> edges;
  for (const auto& e : m.star_edges) {
    edges.push_back({g.object(e[0]), g.morphism(e[1]), g.morphism(e[2])});
  }
  const StarredGroupoid sg(g, std::nullopt, edges);
  const Report r = validate_star_structure(sg);
  REQUIRE(r.has_rule("left-translation"));
  bool named = false;
  for (const auto& v : r.violations()) {
    named = named || (v.rule == "left-translation" && v.witnesses[0] == "(0,2)");
  }
  CHECK(named);
}

TEST_CASE("bad edges are reported") {
  const Groupoid g(pair_groupoid(2).groupoid);
  const Mor a = g.morphism("(0,0)");
  const Mor b = g.morphism("(0,1)");
  const Mor c = g.morphism("(1,0)");
  const StarredGroupoid sg(g, std::nullopt,
                           {{g.object("0"), a, b},
                            {g.object("0"), b, a},
                            {g.object("0"), a, a},
                            {g.object("0"), a, c}});
  const Report r = validate_star_structure(sg);
  CHECK(r.has_rule("star-edge-duplicate"));
  CHECK(r.has_rule("star-edge-loop"));
  CHECK(r.has_rule("star-edge-endpoint"));
}

TEST_CASE("reduce_path examples") {
  const Loaded c3 = fx("C3G");
  const Groupoid& g = c3.groupoid();
  using support::cyclic_path;
  CHECK(reduce_path(cyclic_path(g, {0, 1, 0})) == cyclic_path(g, {0}));
  CHECK(reduce_path(cyclic_path(g, {0, 1, 2})) == cyclic_path(g, {0, 1, 2}));
  CHECK(reduce_path(cyclic_path(g, {0, 1, 2, 1, 2})) ==
        cyclic_path(g, {0, 1, 2}));
  CHECK(reduce_path(cyclic_path(g, {0, 1, 2, 1, 0, 2})) ==
        cyclic_path(g, {0, 2}));
}

TEST_CASE("reduction is confluent under random deletion orders") {
  const Loaded c3 = fx("C3G");
  const Groupoid& g = c3.groupoid();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> walk{0};
    const int len = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < len; ++i) {
      walk.push_back(oracle::mod(walk.back() + (rng() % 2 ? 1 : -1), 3));
    }
    // Delete randomly chosen backtracks until none remain.
    std::vector<int> w = walk;
    for (;;) {
      std::vector<std::size_t> spots;
      for (std::size_t i = 2; i < w.size(); ++i) {
        if (w[i] == w[i - 2]) {
          spots.push_back(i);
        }
      }
      if (spots.empty()) {
        break;
      }
      const std::size_t i = spots[rng() % spots.size()];
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i - 1),
              w.begin() + static_cast<std::ptrdiff_t>(i + 1));
    }
    CHECK(reduce_path(support::cyclic_path(g, walk)) ==
          support::cyclic_path(g, w));
    CHECK(oracle::winding(w, 3) == oracle::winding(walk, 3));
  }
}

TEST_CASE("left translation") {
  const Loaded c3 = fx("C3G");
  const StarredGroupoid& sg = *c3.starred;
  const Groupoid& g = c3.groupoid();
  using support::cyclic_path;
  CHECK(left_translate_path(sg, g.morphism("1"), cyclic_path(g, {0, 1})) ==
        cyclic_path(g, {1, 2}));
  CHECK(left_translate_path(sg, g.morphism("0"), cyclic_path(g, {0, 1, 2})) ==
        cyclic_path(g, {0, 1, 2}));

  const Loaded p6 = fx("P6");
  const Groupoid& h = p6.groupoid();
  const EdgePath p{{h.morphism("(1,1)"), h.morphism("(1,2)")}};
  const EdgePath q{{h.morphism("(0,1)"), h.morphism("(0,2)")}};
  CHECK(left_translate_path(*p6.starred, h.morphism("(0,1)"), p) == q);
}

TEST_CASE("translation commutes with reduction") {
  const Loaded p6 = fx("P6");
  const StarredGroupoid& sg = *p6.starred;
  const Groupoid& g = p6.groupoid();
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Obj y{static_cast<std::uint32_t>(rng() % 6)};
    EdgePath p{{g.identity(y)}};
    for (int i = 0; i < 8; ++i) {
      const auto n = sg.neighbors(p.end());
      p.vertices.push_back(n[rng() % n.size()]);
    }
    const auto into = g.hom(Obj{static_cast<std::uint32_t>(rng() % 6)}, y);
    const Mor t = into.front();
    CHECK(is_valid_path(sg, left_translate_path(sg, t, p)));
    CHECK(reduce_path(left_translate_path(sg, t, p)) ==
          left_translate_path(sg, t, reduce_path(p)));
  }
}

TEST_CASE("connectivity and trees") {
  const Loaded p6 = fx("P6");
  for (bool b : star_connected(*p6.starred)) CHECK(b);
  for (bool b : star_is_tree(*p6.starred)) CHECK_FALSE(b);
  const Loaded l3p = fx("L3P");
  for (bool b : star_connected(*l3p.starred)) CHECK(b);
  for (bool b : star_is_tree(*l3p.starred)) CHECK(b);

  const Groupoid g(pair_groupoid(3).groupoid);
  const StarredGroupoid sparse(
      g, std::nullopt, {{g.object("0"), g.morphism("(0,0)"), g.morphism("(0,1)")}});
  const auto connected = star_connected(sparse);
  CHECK_FALSE(connected[0]);
  CHECK_FALSE(connected[1]);
}

TEST_CASE("induced subgraph shape finds cycles") {
  const Loaded p3 = fx("P3");
  const Groupoid& g = p3.groupoid();
  std::vector<bool> all(g.num_morphisms(), true);
  const auto shape = induced_subgraph_shape(*p3.starred, g.object("0"), all);
  CHECK(shape.connected);
  REQUIRE(shape.cycle);
  CHECK(shape.cycle->start() == shape.cycle->end());
  CHECK(shape.cycle->length() == 3);
  CHECK(is_valid_path(*p3.starred, *shape.cycle));

  std::vector<bool> some(g.num_morphisms(), false);
  some[idx(g.morphism("(0,0)"))] = true;
  some[idx(g.morphism("(0,2)"))] = true;
  const auto path = induced_subgraph_shape(*p3.starred, g.object("0"), some);
  CHECK(path.is_tree());
}

TEST_CASE("product star graphs are cartesian") {
  const Loaded c3 = fx("C3G");
  const auto prod = StarredGroupoid::product(c3.starred, c3.starred);
  const Groupoid& g = prod->groupoid();
  REQUIRE(prod->is_product());
  CHECK(prod->group() != nullptr);
  CHECK(prod->adjacent(g.morphism("(0,0)"), g.morphism("(1,0)")));
  CHECK(prod->adjacent(g.morphism("(0,0)"), g.morphism("(0,2)")));
  CHECK_FALSE(prod->adjacent(g.morphism("(0,0)"), g.morphism("(1,1)")));
  CHECK(prod->neighbors(g.morphism("(0,0)")).size() == 4);
  CHECK(validate_star_structure(*prod).ok());
}
