#include <doctest.h>

#include <fstream>
#include <sstream>

#include "../support/oracles.hpp"
#include "ggd/ggd_format.hpp"

using namespace ggd;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kTiny = R"(ggd 1
[objects]
a
[morphisms]
e a a
[identities]
e a
[compose]
e e e
[star-edges]
)";

// Replaces the first occurrence of `from`.
std::string patch(std::string text, const std::string& from,
                  const std::string& to) {
  const auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  text.replace(at, from.size(), to);
  return text;
}

}  // namespace

TEST_CASE("emit round-trips every fixture") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    GgdModel m = fixture(name);
    const std::string text = emit(m);
    GgdModel back = parse_model(text);
    m.canonicalize();
    back.canonicalize();
    CHECK(back == m);
    CHECK(emit(back) == text);
    CHECK(slurp(std::string(GGD_DATA_DIR) + "/fixtures/" + name + ".ggd") == text);
  }
}

TEST_CASE("minimal document") {
  const GgdModel m = parse_model(kTiny);
  CHECK(m.groupoid.objects == std::vector<std::string>{"a"});
  CHECK_FALSE(m.group);
  CHECK_FALSE(m.w);
  CHECK(m.star_edges.empty());
  CHECK_NOTHROW(load(m));
}

TEST_CASE("comments and blank lines are ignored") {
  const std::string text = patch(kTiny, "[objects]\n", "# a comment\n\n[objects]   # trailing\n");
  CHECK(parse_model(text) == parse_model(kTiny));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_model(patch(kTiny, "ggd 1", "ggd 2")),
                       doctest::Contains("line 1"), ParseError);
  CHECK_THROWS_WITH_AS(parse_model(patch(kTiny, "[identities]\ne a\n", "")),
                       "line 8: missing required section [identities]",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_model(patch(kTiny, "e a a\n", "e a a\ne a a\n")),
                       "line 6: duplicate morphism name e", ParseError);
  CHECK_THROWS_WITH_AS(parse_model(std::string(kTiny) + "[objects]\n"),
                       "line 11: section [objects] appears twice (first at line 2)",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_model(std::string(kTiny) + "[bogus]\n"),
                       "line 11: unknown section [bogus]", ParseError);
  CHECK_THROWS_WITH_AS(parse_model(patch(kTiny, "e e e", "e e")),
                       doctest::Contains("line 9"), ParseError);
  CHECK_THROWS_WITH_AS(parse_model(patch(kTiny, "e e e", "e x e")),
                       doctest::Contains("line 9"), ParseError);
  CHECK_THROWS_AS(parse_model(patch(kTiny, "[objects]\n", "a\n[objects]\n")),
                  ParseError);
}

TEST_CASE("group sections are all or none") {
  std::string text = emit(fixture("C3G"));
  const auto at = text.find("[morphism-product]");
  const auto end = text.find("\n[", at);
  text.erase(at, end == std::string::npos ? end : end - at);
  CHECK_THROWS_WITH_AS(parse_model(text), doctest::Contains("group"), ParseError);
}

TEST_CASE("local morphism lines accept an arrow") {
  const std::string text = emit(fixture("L3P"));
  const std::string arrowed = patch(text, "(0,1) (0,1)\n(1,0)", "(0,1) -> (0,1)\n(1,0)");
  CHECK(parse_model(arrowed) == parse_model(text));
  CHECK_THROWS_AS(parse_model(patch(text, "[local-morphism P3.ggd]", "[local-morphism]")),
                  ParseError);
}

TEST_CASE("load reports the first failing validator") {
  const GgdModel broken = read_model(std::string(GGD_DATA_DIR) + "/broken.ggd");
  try {
    load(broken);
    FAIL("broken.ggd loaded");
  } catch (const ValidationError& e) {
    CHECK(e.headline() == "groupoid axioms fail");
    CHECK(e.report().has_rule("associativity"));
  }
  CHECK_THROWS_AS(read_model("/nonexistent/x.ggd"), Error);
}

TEST_CASE("word and path literals") {
  const Loaded l3p = support::fx("L3P");
  const Groupoid& g = l3p.groupoid();
  const Word w = parse_word(g, *l3p.w, "[(0,1), (1,2)]");
  CHECK(w.letters.size() == 2);
  CHECK(format_word(g, w) == "[(0,1),(1,2)]");
  const Word e = parse_word(g, *l3p.w, "[@1]");
  CHECK(e.letters.empty());
  CHECK(g.name(e.source) == "1");
  CHECK(format_word(g, e) == "[@1]");
  CHECK_THROWS_AS(parse_word(g, *l3p.w, "[(0,2)]"), LiteralError);
  CHECK_THROWS_AS(parse_word(g, *l3p.w, "(0,1)"), LiteralError);
  CHECK_THROWS_AS(parse_word(g, *l3p.w, "[@9]"), LiteralError);
  CHECK_THROWS_AS(parse_word(g, *l3p.w, "[(0,1),(0,1)]"), LiteralError);

  const EdgePath p = parse_path(g, "[(0,0),(0,1),(0,2)]");
  CHECK(p.length() == 2);
  CHECK(format_path(g, p) == "[(0,0),(0,1),(0,2)]");
  CHECK_THROWS_AS(parse_path(g, "[]"), LiteralError);
  CHECK_THROWS_AS(parse_path(g, "[(0,0),(9,9)]"), LiteralError);
}
