#include "ggd/ggd_format.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace ggd {

namespace {

// Grammar order; also the order emit() writes sections in.
const std::vector<std::string> kSections = {
    "objects",          "object-product", "object-unit", "morphisms",
    "identities",       "compose",        "morphism-product",
    "star-edges",       "W",              "V",
    "local-morphism"};

const std::vector<std::string> kRequired = {"objects", "morphisms",
                                            "identities", "compose",
                                            "star-edges"};

const std::vector<std::string> kGroupSections = {
    "object-product", "object-unit", "morphism-product"};

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

void expect_tokens(const DocSection& s, const DocLine& l, std::size_t n,
                   const std::string& shape) {
  if (l.tokens.size() != n) {
    throw ParseError(l.number, "[" + s.name + "] lines have the form '" +
                                   shape + "', got " +
                                   std::to_string(l.tokens.size()) +
                                   " tokens");
  }
}

}  // namespace

const DocSection* Document::find(std::string_view name) const {
  for (const DocSection& s : sections) {
    if (s.name == name) {
      return &s;
    }
  }
  return nullptr;
}

Document parse_document(std::string_view text) {
  Document doc;
  bool header = false;
  std::size_t number = 0;
  std::size_t start = 0;
  std::map<std::string, std::size_t> seen;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++number;
    if (!raw.empty() && raw.back() == '\r') {
      raw.remove_suffix(1);
    }
    const std::string_view body = strip_comment(raw);
    auto tokens = tokenize(body);
    if (tokens.empty()) {
      continue;
    }
    doc.last_line = number;
    if (!header) {
      if (tokens.size() != 2 || tokens[0] != "ggd") {
        throw ParseError(number, "expected header 'ggd 1'");
      }
      if (tokens[1] != "1") {
        throw ParseError(number, "unsupported format version " + tokens[1]);
      }
      header = true;
      continue;
    }
    if (tokens.front().front() == '[') {
      const auto open = body.find('[');
      const auto close = body.find(']', open);
      if (close == std::string_view::npos ||
          !tokenize(body.substr(close + 1)).empty()) {
        throw ParseError(number, "malformed section header");
      }
      auto inside = tokenize(body.substr(open + 1, close - open - 1));
      if (inside.empty()) {
        throw ParseError(number, "empty section header");
      }
      DocSection s{inside[0], "", number, {}};
      if (std::find(kSections.begin(), kSections.end(), s.name) ==
          kSections.end()) {
        throw ParseError(number, "unknown section [" + s.name + "]");
      }
      if (s.name == "local-morphism") {
        if (inside.size() != 2) {
          throw ParseError(number,
                           "[local-morphism H] needs exactly one target path");
        }
        s.argument = inside[1];
      } else if (inside.size() != 1) {
        throw ParseError(number, "section [" + s.name + "] takes no argument");
      }
      if (auto it = seen.find(s.name); it != seen.end()) {
        throw ParseError(number, "section [" + s.name +
                                     "] appears twice (first at line " +
                                     std::to_string(it->second) + ")");
      }
      seen.emplace(s.name, number);
      doc.sections.push_back(std::move(s));
      continue;
    }
    if (doc.sections.empty()) {
      throw ParseError(number, "content before the first section");
    }
    doc.sections.back().lines.push_back(DocLine{number, std::move(tokens)});
  }
  if (!header) {
    throw ParseError(number, "expected header 'ggd 1'");
  }
  return doc;
}

void GgdModel::canonicalize() {
  groupoid.canonicalize();
  if (group) {
    group->canonicalize();
  }
  for (auto& e : star_edges) {
    if (e[2] < e[1]) {
      std::swap(e[1], e[2]);
    }
  }
  std::sort(star_edges.begin(), star_edges.end());
  if (w) {
    std::sort(w->begin(), w->end());
  }
  if (v) {
    std::sort(v->begin(), v->end());
  }
  if (local) {
    std::sort(local->map.begin(), local->map.end());
  }
}

GgdModel to_model(const Document& doc) {
  for (const std::string& name : kRequired) {
    if (doc.find(name) == nullptr) {
      throw ParseError(doc.last_line,
                       "missing required section [" + name + "]");
    }
  }
  GgdModel m;

  std::set<std::string> objects;
  const DocSection& os = *doc.find("objects");
  for (const DocLine& l : os.lines) {
    expect_tokens(os, l, 1, "name");
    if (!objects.insert(l.tokens[0]).second) {
      throw ParseError(l.number, "duplicate object name " + l.tokens[0]);
    }
    m.groupoid.objects.push_back(l.tokens[0]);
  }
  auto need_object = [&](const DocLine& l, const std::string& name) {
    if (!objects.contains(name)) {
      throw ParseError(l.number, "unknown object " + name);
    }
  };

  std::set<std::string> morphisms;
  const DocSection& ms = *doc.find("morphisms");
  for (const DocLine& l : ms.lines) {
    expect_tokens(ms, l, 3, "name src tgt");
    if (!morphisms.insert(l.tokens[0]).second) {
      throw ParseError(l.number, "duplicate morphism name " + l.tokens[0]);
    }
    need_object(l, l.tokens[1]);
    need_object(l, l.tokens[2]);
    m.groupoid.morphisms.push_back({l.tokens[0], l.tokens[1], l.tokens[2]});
  }
  auto need_morphism = [&](const DocLine& l, const std::string& name) {
    if (!morphisms.contains(name)) {
      throw ParseError(l.number, "unknown morphism " + name);
    }
  };

  const DocSection& is = *doc.find("identities");
  std::set<std::string> with_identity;
  std::set<std::string> identity_morphisms;
  for (const DocLine& l : is.lines) {
    expect_tokens(is, l, 2, "name obj");
    need_morphism(l, l.tokens[0]);
    need_object(l, l.tokens[1]);
    if (!with_identity.insert(l.tokens[1]).second) {
      throw ParseError(l.number, "object " + l.tokens[1] +
                                     " already has an identity");
    }
    if (!identity_morphisms.insert(l.tokens[0]).second) {
      throw ParseError(l.number, "morphism " + l.tokens[0] +
                                     " is already an identity");
    }
    m.groupoid.identities.push_back({l.tokens[0], l.tokens[1]});
  }
  for (const std::string& x : objects) {
    if (!with_identity.contains(x)) {
      throw ParseError(is.line, "object " + x + " has no identity");
    }
  }

  auto read_triples = [&](const DocSection& s, bool of_objects) {
    std::vector<std::array<std::string, 3>> out;
    std::set<std::pair<std::string, std::string>> keys;
    for (const DocLine& l : s.lines) {
      expect_tokens(s, l, 3, of_objects ? "x y z" : "g h k");
      for (const std::string& t : l.tokens) {
        of_objects ? need_object(l, t) : need_morphism(l, t);
      }
      if (!keys.insert({l.tokens[0], l.tokens[1]}).second) {
        throw ParseError(l.number, "duplicate entry for " + l.tokens[0] +
                                       " " + l.tokens[1]);
      }
      out.push_back({l.tokens[0], l.tokens[1], l.tokens[2]});
    }
    return out;
  };
  m.groupoid.compose = read_triples(*doc.find("compose"), false);

  const DocSection* first_group = nullptr;
  for (const std::string& name : kGroupSections) {
    const DocSection* s = doc.find(name);
    if (s != nullptr && (first_group == nullptr || s->line < first_group->line)) {
      first_group = s;
    }
  }
  if (first_group != nullptr) {
    for (const std::string& name : kGroupSections) {
      if (doc.find(name) == nullptr) {
        throw ParseError(first_group->line,
                         "group sections are all-or-none: missing [" + name +
                             "]");
      }
    }
    GroupTables t;
    t.object_product = read_triples(*doc.find("object-product"), true);
    const DocSection& us = *doc.find("object-unit");
    if (us.lines.size() != 1) {
      throw ParseError(us.line, "[object-unit] must hold exactly one name");
    }
    expect_tokens(us, us.lines[0], 1, "name");
    need_object(us.lines[0], us.lines[0].tokens[0]);
    t.object_unit = us.lines[0].tokens[0];
    t.morphism_product = read_triples(*doc.find("morphism-product"), false);
    m.group = std::move(t);
  }

  const DocSection& es = *doc.find("star-edges");
  for (const DocLine& l : es.lines) {
    expect_tokens(es, l, 3, "obj g h");
    need_object(l, l.tokens[0]);
    need_morphism(l, l.tokens[1]);
    need_morphism(l, l.tokens[2]);
    m.star_edges.push_back({l.tokens[0], l.tokens[1], l.tokens[2]});
  }

  auto read_names = [&](const char* name) {
    std::optional<std::vector<std::string>> out;
    if (const DocSection* s = doc.find(name)) {
      out.emplace();
      std::set<std::string> seen;
      for (const DocLine& l : s->lines) {
        expect_tokens(*s, l, 1, "name");
        need_morphism(l, l.tokens[0]);
        if (!seen.insert(l.tokens[0]).second) {
          throw ParseError(l.number, "duplicate member " + l.tokens[0]);
        }
        out->push_back(l.tokens[0]);
      }
    }
    return out;
  };
  m.w = read_names("W");
  m.v = read_names("V");

  if (const DocSection* s = doc.find("local-morphism")) {
    LocalMorphismSpec spec{s->argument, {}};
    std::set<std::string> seen;
    for (DocLine l : s->lines) {
      // `u -> v` is accepted as a spelling of `u v`.
      if (l.tokens.size() == 3 && l.tokens[1] == "->") {
        l.tokens.erase(l.tokens.begin() + 1);
      }
      expect_tokens(*s, l, 2, "u v");
      need_morphism(l, l.tokens[0]);
      if (!seen.insert(l.tokens[0]).second) {
        throw ParseError(l.number, "f(" + l.tokens[0] + ") defined twice");
      }
      spec.map.emplace_back(l.tokens[0], l.tokens[1]);
    }
    m.local = std::move(spec);
  }
  return m;
}

GgdModel parse_model(std::string_view text) {
  return to_model(parse_document(text));
}

std::string emit(GgdModel m) {
  m.canonicalize();
  std::ostringstream out;
  out << "ggd 1\n";
  auto header = [&](const std::string& name) { out << "\n[" << name << "]\n"; };
  auto triples = [&](const auto& rows) {
    for (const auto& r : rows) {
      out << r[0] << ' ' << r[1] << ' ' << r[2] << '\n';
    }
  };
  header("objects");
  for (const auto& x : m.groupoid.objects) {
    out << x << '\n';
  }
  if (m.group) {
    header("object-product");
    triples(m.group->object_product);
    header("object-unit");
    out << m.group->object_unit << '\n';
  }
  header("morphisms");
  for (const auto& g : m.groupoid.morphisms) {
    out << g.name << ' ' << g.source << ' ' << g.target << '\n';
  }
  header("identities");
  for (const auto& e : m.groupoid.identities) {
    out << e.morphism << ' ' << e.object << '\n';
  }
  header("compose");
  triples(m.groupoid.compose);
  if (m.group) {
    header("morphism-product");
    triples(m.group->morphism_product);
  }
  header("star-edges");
  triples(m.star_edges);
  for (const auto& [name, list] : {std::pair{"W", &m.w}, std::pair{"V", &m.v}}) {
    if (*list) {
      header(name);
      for (const auto& g : **list) {
        out << g << '\n';
      }
    }
  }
  if (m.local) {
    header("local-morphism " + m.local->target);
    for (const auto& [u, v] : m.local->map) {
      out << u << ' ' << v << '\n';
    }
  }
  return out.str();
}

namespace {

MorphismSet name_set(const Groupoid& g, const std::vector<std::string>& names) {
  std::vector<Mor> members;
  for (const auto& n : names) {
    members.push_back(g.morphism(n));
  }
  return MorphismSet(members, g.num_morphisms());
}

}  // namespace

Loaded load(const GgdModel& model) {
  Groupoid g(model.groupoid);
  Report r = validate_groupoid(g);
  if (!r.ok()) {
    throw ValidationError("groupoid axioms fail", std::move(r));
  }
  std::optional<GroupStructure> s;
  if (model.group) {
    s.emplace(g, *model.group);
    Report gr = validate_group_groupoid(g, *s);
    if (!gr.ok()) {
      throw ValidationError("group-groupoid axioms fail", std::move(gr));
    }
  }
  std::vector<StarEdge> edges;
  for (const auto& e : model.star_edges) {
    edges.push_back(StarEdge{g.object(e[0]), g.morphism(e[1]), g.morphism(e[2])});
  }
  auto sg = std::make_shared<const StarredGroupoid>(g, std::move(s),
                                                    std::move(edges));
  Report sr = validate_star_structure(*sg);
  if (!sr.ok()) {
    throw ValidationError("star structure fails", std::move(sr));
  }
  Loaded out{model, sg, std::nullopt, std::nullopt};
  if (model.w) {
    out.w = name_set(sg->groupoid(), *model.w);
  }
  if (model.v) {
    out.v = name_set(sg->groupoid(), *model.v);
  }
  return out;
}

GgdModel read_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(path + ": cannot open file");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_model(text.str());
}

namespace {

std::vector<std::string> split_literal(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos || text[first] != '[' ||
      text[last] != ']') {
    throw LiteralError("literal must be written in brackets: " +
                       std::string(text));
  }
  const std::string_view body = text.substr(first + 1, last - first - 1);
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : body) {
    if (c == ' ' || c == '\t') {
      continue;
    }
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      --depth;
    }
    if (c == ',' && depth == 0) {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (depth != 0) {
    throw LiteralError("unbalanced parentheses in " + std::string(text));
  }
  out.push_back(current);
  for (const auto& tok : out) {
    if (tok.empty()) {
      throw LiteralError("empty entry in " + std::string(text));
    }
  }
  return out;
}

Mor literal_morphism(const Groupoid& g, const std::string& name) {
  if (auto m = g.find_morphism(name)) {
    return *m;
  }
  throw LiteralError("unknown morphism " + name);
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out = "[";
  for (std::size_t i = 0; i < names.size(); ++i) {
    out += (i ? "," : "") + names[i];
  }
  return out + "]";
}

}  // namespace

Word parse_word(const Groupoid& g, const MorphismSet& w,
                std::string_view text) {
  const auto tokens = split_literal(text);
  if (tokens.size() == 1 && tokens[0].front() == '@') {
    const auto x = g.find_object(tokens[0].substr(1));
    if (!x) {
      throw LiteralError("unknown object " + tokens[0].substr(1));
    }
    return Word{*x, {}};
  }
  std::vector<Mor> letters;
  for (const auto& t : tokens) {
    letters.push_back(literal_morphism(g, t));
  }
  try {
    return make_word(g, w, g.source(letters.front()), letters);
  } catch (const PreconditionError& e) {
    throw LiteralError(e.what());
  }
}

std::string format_word(const Groupoid& g, const Word& w) {
  if (w.letters.empty()) {
    return "[@" + g.name(w.source) + "]";
  }
  std::vector<std::string> names;
  for (Mor u : w.letters) {
    names.push_back(g.name(u));
  }
  return join_names(names);
}

EdgePath parse_path(const Groupoid& g, std::string_view text) {
  EdgePath p;
  for (const auto& t : split_literal(text)) {
    p.vertices.push_back(literal_morphism(g, t));
  }
  return p;
}

std::string format_path(const Groupoid& g, const EdgePath& p) {
  std::vector<std::string> names;
  for (Mor v : p.vertices) {
    names.push_back(g.name(v));
  }
  return join_names(names);
}

}  // namespace ggd
