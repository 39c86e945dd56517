#include <doctest.h>

#include <set>

#include "../support/oracles.hpp"
#include "ggd/monodromy.hpp"

using namespace ggd;
using support::cyclic_path;
using support::fx;

namespace {

// Element of Mon(C_n) with net displacement w.
MonMor winding_element(const MonGroupoid& mon, int n, int w) {
  return mon.element(cyclic_path(mon.ambient().groupoid(),
                                 oracle::cycle_walk(n, w)));
}

int winding_of(const MonGroupoid& mon, int n, const MonMor& a) {
  return oracle::winding(support::labels(mon.ambient().groupoid(), a.path), n);
}

StarredMorphism by_name(const StarredGroupoid& src, const StarredGroupoid& dst,
                        std::string (*f)(const std::string&)) {
  const Groupoid& G = src.groupoid();
  const Groupoid& H = dst.groupoid();
  StarredMorphism m;
  for (Obj x : G.objects()) {
    m.objects.push_back(H.object(G.name(x)));
  }
  for (Mor g : G.morphisms()) {
    m.morphisms.push_back(H.morphism(f(G.name(g))));
  }
  return m;
}

std::string mod3(const std::string& s) { return std::to_string(std::stoi(s) % 3); }
std::string neg3(const std::string& s) {
  return std::to_string((3 - std::stoi(s)) % 3);
}

}  // namespace

TEST_CASE("C3G star matches brute-force reduced walks") {
  const Loaded c3 = fx("C3G");
  const MonGroupoid mon(*c3.starred);
  const Obj o = c3.groupoid().object("o");
  CHECK(mon.enumerate(o, 6).size() == 13);
  CHECK(mon.enumerate(o, 0).size() == 1);
  for (std::size_t L = 0; L <= 7; ++L) {
    std::set<std::vector<int>> ours;
    for (const MonMor& a : mon.enumerate(o, L)) {
      CHECK(mon.is_canonical(a));
      ours.insert(support::labels(c3.groupoid(), a.path));
    }
    CHECK(ours == oracle::reduced_walks(oracle::cycle_graph(3), 0, L));
  }
}

TEST_CASE("tree stars have one element per vertex") {
  const Loaded l3p = fx("L3P");
  const MonGroupoid mon(*l3p.starred);
  for (Obj x : l3p.groupoid().objects()) {
    CHECK(mon.enumerate(x, 10).size() == 3);
    CHECK(mon.enumerate(x, 0).size() == 1);
  }
}

TEST_CASE("Mon of P6 is the fundamental groupoid of the 6-cycle") {
  const Loaded p6 = fx("P6");
  const Groupoid& g = p6.groupoid();
  const MonGroupoid mon(*p6.starred);
  for (Obj x : g.objects()) {
    std::set<std::vector<int>> ours;
    for (const MonMor& a : mon.enumerate(x, 5)) {
      std::vector<int> second;
      for (Mor v : a.path.vertices) {
        second.push_back(g.name(v)[3] - '0');
      }
      ours.insert(second);
    }
    const int base = std::stoi(g.name(x));
    CHECK(ours == oracle::reduced_walks(oracle::cycle_graph(6), base, 5));
  }
}

TEST_CASE("Mon composition and inverse examples on C3G") {
  const Loaded c3 = fx("C3G");
  const MonGroupoid mon(*c3.starred);
  const Groupoid& g = c3.groupoid();
  const MonMor five = mon.compose(winding_element(mon, 3, 2),
                                  winding_element(mon, 3, 3));
  CHECK(five.path.length() == 5);
  CHECK(g.name(mon.project(five)) == "2");
  CHECK(winding_of(mon, 3, five) == 5);

  const MonMor id = mon.identity(g.object("o"));
  CHECK(mon.compose(winding_element(mon, 3, 1), winding_element(mon, 3, -1)) ==
        id);
  CHECK(mon.inverse(id) == id);
  CHECK(mon.inverse(winding_element(mon, 3, 1)).path ==
        cyclic_path(g, {0, 2}));
  CHECK(mon.group_multiply(winding_element(mon, 3, 2),
                           winding_element(mon, 3, 3)) ==
        winding_element(mon, 3, 5));
  const MonMor a = winding_element(mon, 3, 4);
  CHECK(mon.compose(a, mon.identity(mon.target(a))) == a);
}

TEST_CASE("winding addition on C3G and C6G") {
  for (int n : {3, 6}) {
    const Loaded c = fx(n == 3 ? "C3G" : "C6G");
    const MonGroupoid mon(*c.starred);
    for (int i = -3; i <= 3; ++i) {
      const MonMor a = winding_element(mon, n, i);
      CHECK(std::stoi(c.groupoid().name(mon.project(a))) == oracle::mod(i, n));
      for (int j = -3; j <= 3; ++j) {
        const MonMor b = winding_element(mon, n, j);
        CHECK(winding_of(mon, n, mon.compose(a, b)) == i + j);
        CHECK(winding_of(mon, n, mon.group_multiply(a, b)) == i + j);
      }
    }
  }
}

TEST_CASE("P6 group product of one-step paths") {
  const Loaded p6 = fx("P6");
  const Groupoid& g = p6.groupoid();
  const MonGroupoid mon(*p6.starred);
  const GroupStructure& s = *p6.starred->group();
  const MonMor a = mon.element(EdgePath{{g.morphism("(0,0)"), g.morphism("(0,1)")}});
  const MonMor b = mon.element(EdgePath{{g.morphism("(2,2)"), g.morphism("(2,3)")}});
  const MonMor ab = mon.group_multiply(a, b);
  CHECK(ab.path.length() == 2);
  CHECK(mon.project(ab) == s.multiply(mon.project(a), mon.project(b)));
  CHECK(g.name(ab.base) == "2");
}

TEST_CASE("group laws and interchange in Mon(P6)") {
  const Loaded p6 = fx("P6");
  const Groupoid& g = p6.groupoid();
  const MonGroupoid mon(*p6.starred);
  std::vector<MonMor> all;
  for (Obj x : g.objects()) {
    for (MonMor& a : mon.enumerate(x, 2)) {
      all.push_back(std::move(a));
    }
  }
  for (const MonMor& a : all) {
    CHECK(mon.compose(a, mon.inverse(a)) == mon.identity(a.base));
    CHECK(mon.compose(mon.inverse(a), a) == mon.identity(mon.target(a)));
  }
  std::size_t checked = 0;
  for (const MonMor& a : all) {
    for (const MonMor& c : all) {
      if (c.base != mon.target(a)) continue;
      for (const MonMor& b : all) {
        for (const MonMor& d : all) {
          if (d.base != mon.target(b)) continue;
          const MonMor lhs = mon.compose(mon.group_multiply(a, b),
                                         mon.group_multiply(c, d));
          const MonMor rhs = mon.group_multiply(mon.compose(a, c),
                                                mon.compose(b, d));
          CHECK(lhs == rhs);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("covering property: unique lifts and no closed reduced paths") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    const Loaded l = fx(name);
    const MonGroupoid mon(*l.starred);
    for (Obj x : l.groupoid().objects()) {
      CHECK(support::mon_star_is_tree(mon, x, 4));
      for (const MonMor& a : mon.enumerate(x, 4)) {
        for (Mor v : l.starred->neighbors(mon.project(a))) {
          std::size_t hits = 0;
          for (const MonMor& b : mon.lifts(a)) {
            hits += mon.project(b) == v ? 1 : 0;
          }
          CHECK(hits == 1);
        }
      }
    }
  }
}

TEST_CASE("element rejects bad paths") {
  const Loaded c3 = fx("C3G");
  const MonGroupoid mon(*c3.starred);
  const Groupoid& g = c3.groupoid();
  CHECK_THROWS_AS(mon.element(cyclic_path(g, {1, 2})), PreconditionError);
  const Loaded p6 = fx("P6");
  const MonGroupoid m6(*p6.starred);
  const Groupoid& h = p6.groupoid();
  CHECK_THROWS_AS(m6.element(EdgePath{{h.morphism("(0,0)"), h.morphism("(0,2)")}}),
                  PreconditionError);
  CHECK_THROWS_AS(
      m6.compose(m6.identity(h.object("0")), m6.identity(h.object("1"))),
      PreconditionError);
}

TEST_CASE("Mon refuses disconnected stars") {
  const Groupoid g(pair_groupoid(2).groupoid);
  const StarredGroupoid sg(g, std::nullopt, std::vector<StarEdge>{});
  CHECK_THROWS_AS(MonGroupoid{sg}, PreconditionError);
}

TEST_CASE("Mon is a functor") {
  const Loaded c6 = fx("C6G");
  const Loaded c3 = fx("C3G");
  const MonGroupoid m6(*c6.starred);
  const MonGroupoid m3(*c3.starred);
  const StarredMorphism f = by_name(*c6.starred, *c3.starred, mod3);
  const StarredMorphism n = by_name(*c3.starred, *c3.starred, neg3);
  CHECK(validate_starred_morphism(*c6.starred, *c3.starred, f).ok());
  CHECK(validate_starred_morphism(*c3.starred, *c3.starred, n).ok());
  const StarredMorphism id6 = identity_morphism(*c6.starred);
  const StarredMorphism nf = compose_morphisms(f, n);

  // A full turn of C6 maps to two turns of C3.
  CHECK(winding_of(m3, 3, mon_map(m6, m3, f, winding_element(m6, 6, 6))) == 6);

  const Obj o = c6.groupoid().object("o");
  const auto elements = m6.enumerate(o, 3);
  for (const MonMor& a : elements) {
    CHECK(mon_map(m6, m6, id6, a) == a);
    CHECK(mon_map(m6, m3, nf, a) == mon_map(m3, m3, n, mon_map(m6, m3, f, a)));
    for (const MonMor& b : elements) {
      CHECK(mon_map(m6, m3, f, m6.compose(a, b)) ==
            m3.compose(mon_map(m6, m3, f, a), mon_map(m6, m3, f, b)));
    }
  }
}

TEST_CASE("non-graph maps are reported") {
  const Loaded c6 = fx("C6G");
  // Doubling on C6 sends the edge 0-1 to 0-2, which is not an edge.
  auto twice = +[](const std::string& s) {
    return std::to_string(2 * std::stoi(s) % 6);
  };
  const StarredMorphism d = by_name(*c6.starred, *c6.starred, twice);
  CHECK(validate_starred_morphism(*c6.starred, *c6.starred, d)
            .has_rule("star-graph-map"));
  const MonGroupoid m6(*c6.starred);
  CHECK_THROWS_AS(mon_map(m6, m6, d, winding_element(m6, 6, 1)),
                  PreconditionError);
}

TEST_CASE("product split and join") {
  const Loaded c3 = fx("C3G");
  const auto prod = StarredGroupoid::product(c3.starred, c3.starred);
  const MonGroupoid mon(*prod);
  const MonGroupoid& left = mon.factor(0);
  const MonGroupoid& right = mon.factor(1);
  const MonMor a = winding_element(left, 3, 1);
  const MonMor b = winding_element(right, 3, 2);
  const MonMor joined = mon.join(a, b);
  CHECK(mon.is_canonical(joined));
  CHECK(mon.split(joined) == std::pair{a, b});
  const Obj o = prod->groupoid().objects().front();
  CHECK(mon.split(mon.identity(o)) ==
        std::pair{left.identity(a.base), right.identity(b.base)});

  // Interleaving the steps gives the same element.
  const Groupoid& g = prod->groupoid();
  const EdgePath mixed{{g.morphism("(0,0)"), g.morphism("(0,1)"),
                        g.morphism("(1,1)"), g.morphism("(1,2)")}};
  CHECK(mon.element(mixed) == joined);

  CHECK(check_product_split(mon, 3).ok());
  const Loaded p2 = fx("P2");
  const auto prod2 = StarredGroupoid::product(p2.starred, p2.starred);
  CHECK(check_product_split(MonGroupoid(*prod2), 3).ok());
  CHECK_THROWS_AS(check_product_split(left, 2), PreconditionError);
}
