#include <doctest.h>

#include "../support/oracles.hpp"
#include "ggd/presentation.hpp"

using namespace ggd;
using support::fx;

namespace {

Word w_of(const Loaded& l, const std::string& text) {
  return parse_word(l.groupoid(), *l.w, text);
}

}  // namespace

TEST_CASE("hypotheses on P6 and P3") {
  const Loaded p6 = fx("P6");
  CHECK(check_hypotheses(*p6.starred, *p6.w).ok());

  const Loaded p3 = fx("P3");
  const Report r = check_hypotheses(*p3.starred, *p3.w);
  REQUIRE(r.has_rule("V-liftable"));
  for (const auto& v : r.violations()) {
    CHECK(v.rule == "V-liftable");
    CHECK(v.witnesses.size() == 4);
    CHECK(v.witnesses.front() == v.witnesses.back());
  }
  CHECK_THROWS_AS(Presentation(*p3.starred, *p3.w), ValidationError);
}

TEST_CASE("hypothesis failures name the culprit") {
  const Loaded p6 = fx("P6");
  const Groupoid& g = p6.groupoid();
  std::vector<Mor> members = p6.w->members();
  std::erase(members, g.morphism("(2,2)"));
  const Report no_id = check_hypotheses(*p6.starred, MorphismSet(members, g.num_morphisms()));
  REQUIRE(no_id.has_rule("W-identities"));
  CHECK(no_id.violations().front().witnesses == std::vector<std::string>{"(2,2)"});

  std::vector<Mor> lopsided = p6.w->members();
  std::erase(lopsided, g.morphism("(1,0)"));
  CHECK(check_hypotheses(*p6.starred, MorphismSet(lopsided, g.num_morphisms()))
            .has_rule("W-inverse-closed"));

  const MorphismSet ids = MorphismSet::identities(g);
  CHECK(check_hypotheses(*p6.starred, ids).has_rule("W-generates"));

  // A cover V that misses part of W²
  CHECK(check_hypotheses(*p6.starred, *p6.w, *p6.w).has_rule("V-contains-W-squared"));
}

TEST_CASE("free reduction") {
  const Loaded l3p = fx("L3P");
  const Groupoid& g = l3p.groupoid();
  const Word empty{g.object("0"), {}};
  CHECK(free_reduce(g, w_of(l3p, "[(0,1),(1,0)]")) == empty);
  CHECK(free_reduce(g, w_of(l3p, "[(0,1),(1,2),(2,1)]")) ==
        w_of(l3p, "[(0,1)]"));
  const Word reduced = w_of(l3p, "[(0,1),(1,2)]");
  CHECK(free_reduce(g, reduced) == reduced);
}

TEST_CASE("fold") {
  const Loaded l3p = fx("L3P");
  const Word two = w_of(l3p, "[(0,1),(1,2)]");
  CHECK(fold(l3p.groupoid(), *l3p.w, two) == two);

  const Loaded p6 = fx("P6");
  const Groupoid& g = p6.groupoid();
  const Word padded{g.object("0"), {g.morphism("(0,1)"), g.morphism("(1,1)")}};
  CHECK(fold(g, *p6.w, padded) == w_of(p6, "[(0,1)]"));
  CHECK(fold(g, *p6.w, w_of(p6, "[(0,1),(1,0)]")) == Word{g.object("0"), {}});

  const Loaded c6 = fx("C6G");
  CHECK(fold(c6.groupoid(), *c6.w, w_of(c6, "[1,5]")) ==
        Word{c6.groupoid().object("o"), {}});
}

TEST_CASE("word helpers") {
  const Loaded l3p = fx("L3P");
  const Groupoid& g = l3p.groupoid();
  const Word a = w_of(l3p, "[(0,1),(1,2)]");
  CHECK(g.name(word_target(g, a)) == "2");
  CHECK(g.name(evaluate(g, a)) == "(0,2)");
  CHECK(g.name(evaluate(g, Word{g.object("1"), {}})) == "(1,1)");
  const Word back = invert(g, a);
  CHECK(back == w_of(l3p, "[(2,1),(1,0)]"));
  CHECK(free_reduce(g, concatenate(g, a, back)).letters.empty());
  CHECK_THROWS_AS(concatenate(g, a, a), PreconditionError);
  CHECK_THROWS_AS(make_word(g, *l3p.w, g.object("0"),
                            std::vector<Mor>{g.morphism("(0,2)")}),
                  PreconditionError);
  CHECK_THROWS_AS(make_word(g, *l3p.w, g.object("0"),
                            std::vector<Mor>{g.morphism("(1,2)")}),
                  PreconditionError);
  // Identity letters are dropped.
  CHECK(make_word(g, *l3p.w, g.object("0"),
                  std::vector<Mor>{g.morphism("(0,0)"), g.morphism("(0,1)")})
            .letters.size() == 1);
}

TEST_CASE("mu on examples") {
  const Loaded l3p = fx("L3P");
  const Presentation pl(*l3p.starred, *l3p.w);
  const Groupoid& g = l3p.groupoid();
  CHECK(pl.to_mon(Word{g.object("1"), {}}) == pl.mon().identity(g.object("1")));
  const MonMor two = pl.to_mon(w_of(l3p, "[(0,1),(1,2)]"));
  CHECK(two.path == EdgePath{{g.morphism("(0,0)"), g.morphism("(0,1)"),
                              g.morphism("(0,2)")}});

  const Loaded p6 = fx("P6");
  const Presentation pp(*p6.starred, *p6.w);
  const Word loop = w_of(p6, "[(0,1),(1,2),(2,3),(3,4),(4,5),(5,0)]");
  const Word empty{p6.groupoid().object("0"), {}};
  const MonMor wound = pp.to_mon(loop);
  CHECK(wound.path.length() == 6);
  CHECK(p6.groupoid().is_identity(pp.mon().project(wound)));
  CHECK(evaluate(p6.groupoid(), loop) == evaluate(p6.groupoid(), empty));
  CHECK_FALSE(pp.equal(loop, empty));
}

TEST_CASE("mu is a morphism and respects the relations") {
  for (const char* name : {"P6", "L3P", "C6G", "P2"}) {
    CAPTURE(name);
    const Loaded l = fx(name);
    const Groupoid& g = l.groupoid();
    const Presentation pres(*l.starred, *l.w);
    const auto words = enumerate_words(g, *l.w, 3);
    for (const Word& w : words) {
      CHECK(pres.mon().project(pres.to_mon(w)) == evaluate(g, w));
      CHECK(pres.equal(w, fold(g, *l.w, w)));
      CHECK(pres.equal(w, free_reduce(g, w)));
      for (const Word& v : words) {
        if (v.source != word_target(g, w) || v.letters.size() > 1) continue;
        CHECK(pres.to_mon(concatenate(g, w, v)) ==
              pres.mon().compose(pres.to_mon(w), pres.to_mon(v)));
      }
    }
    // [u][v] = [u∘v] whenever u∘v lies in W.
    for (Mor u : l.w->members()) {
      for (Mor v : g.star(g.target(u))) {
        if (!l.w->contains(v) || !l.w->contains(g.compose(u, v))) continue;
        const Word uv = pres.word(g.source(u), std::vector<Mor>{u, v});
        const Word single = pres.word(g.source(u), std::vector<Mor>{g.compose(u, v)});
        CHECK(pres.equal(uv, single));
      }
    }
  }
}

TEST_CASE("M(G,G) is G when stars are trees") {
  for (const char* name : {"L3P", "P2"}) {
    CAPTURE(name);
    const Loaded l = fx(name);
    const Groupoid& g = l.groupoid();
    const MorphismSet all = MorphismSet::all(g);
    const Presentation pres(*l.starred, all);
    for (const Word& a : enumerate_words(g, all, 3)) {
      for (const Word& b : enumerate_words(g, all, 2)) {
        if (a.source != b.source) continue;
        CHECK(pres.equal(a, b) == (evaluate(g, a) == evaluate(g, b)));
      }
    }
  }
}

TEST_CASE("enumerate_words counts") {
  const Loaded c6 = fx("C6G");
  // Letters 1 and 5 only: 2^k words of length k.
  CHECK(enumerate_words(c6.groupoid(), *c6.w, 4).size() == 1 + 2 + 4 + 8 + 16);
}
