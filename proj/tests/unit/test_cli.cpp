#include <doctest.h>

#include <sstream>

#include "ggd/cli.hpp"

using namespace ggd;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& file) {
  return std::string(GGD_DATA_DIR) + "/" + file;
}

std::string fixture_file(const std::string& name) {
  return data("fixtures/" + name + ".ggd");
}

bool has(const std::string& text, const std::string& piece) {
  return text.find(piece) != std::string::npos;
}

}  // namespace

TEST_CASE("validate") {
  const Run ok = run({"validate", fixture_file("P6")});
  CHECK(ok.code == kExitOk);
  const Run bad = run({"validate", data("broken.ggd")});
  CHECK(bad.code == kExitFalse);
  CHECK(has(bad.out, "associativity"));
  CHECK(run({"validate", "/nonexistent.ggd"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
}

TEST_CASE("mon") {
  const Run r = run({"mon", fixture_file("C3G"), "--object", "o", "--max-len", "6"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "13 elements"));
  CHECK(run({"mon", fixture_file("C3G"), "--object", "zz", "--max-len", "2"}).code ==
        kExitUsage);
}

TEST_CASE("mon-compose") {
  const Run r = run({"mon-compose", fixture_file("C3G"), "--a", "[0,1,2]", "--b",
                     "[0,1,2,0]"});
  CHECK(r.code == kExitOk);
  const Run undefined = run({"mon-compose", fixture_file("P6"), "--a",
                             "[(0,0),(0,1)]", "--b", "[(0,0),(0,1)]"});
  CHECK(undefined.code == kExitFalse);
  CHECK(has(undefined.out, "undefined"));
}

TEST_CASE("mgw-eq") {
  const std::string p6 = fixture_file("P6");
  const Run wound = run({"mgw-eq", p6, "--w1", "[(0,1),(1,2),(2,3),(3,4),(4,5),(5,0)]", "--w2", "[@0]"});
  CHECK(wound.code == kExitFalse);
  CHECK(has(wound.out, "winding"));
  CHECK(run({"mgw-eq", p6, "--w1", "[(0,1),(1,0)]", "--w2", "[@0]"}).code == kExitOk);
  const Run refused = run({"mgw-eq", fixture_file("P3"), "--w1", "[@0]", "--w2", "[@0]"});
  CHECK(refused.code == kExitFalse);
  CHECK(has(refused.out, "refused"));
  CHECK(run({"mgw-eq", p6, "--w1", "[(0,3)]", "--w2", "[@0]"}).code == kExitUsage);
}

TEST_CASE("extend") {
  const Run r = run({"extend", fixture_file("L3P"), "--morphism", "(0,2)"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "(0,2)"));
  const Run sub = run({"extend", fixture_file("L3P"), "--group-check", "2"});
  CHECK(sub.code == kExitFalse);
  CHECK(run({"extend", fixture_file("P2"), "--group-check", "3"}).code == kExitOk);
  CHECK(run({"extend", fixture_file("C3G")}).code == kExitUsage);
}

TEST_CASE("product-check, holonomy, sections, fixture") {
  CHECK(run({"product-check", fixture_file("P2"), fixture_file("P2"), "--max-len",
             "2"}).code == kExitOk);
  const Run h = run({"holonomy", fixture_file("P3")});
  CHECK(h.code == kExitOk);
  CHECK(has(h.out, "holonomy: pass"));
  CHECK(run({"sections", fixture_file("L3P"), "--max-domain", "2"}).code == kExitOk);
  CHECK(run({"fixture", "--list"}).code == kExitOk);
  CHECK(run({"fixture", "nope"}).code == kExitUsage);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"holonomy", fixture_file("P6")};
  CHECK(run(args).out == run(args).out);
}
