#include "ggd/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>

#include "ggd/fixtures.hpp"
#include "ggd/ggd_format.hpp"
#include "ggd/principle.hpp"
#include "ggd/sections.hpp"

namespace ggd {

namespace {

// Exit 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Exit 1, with a report printed to stdout.
class Refusal : public Error {
 public:
  Refusal(const std::string& what, Report report)
      : Error(what), report(std::move(report)) {}
  Report report;
};

Loaded load_file(const std::string& path) {
  GgdModel model;
  try {
    model = read_model(path);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  try {
    return load(model);
  } catch (const ValidationError& e) {
    throw Refusal(path + ": invalid: " + e.headline(), e.report());
  } catch (const MalformedError& e) {
    throw Refusal(path + ": invalid: malformed tables", e.report());
  }
}

const MorphismSet& require_w(const Loaded& l, const std::string& path) {
  if (!l.w) {
    throw UsageError(path + ": file has no [W] section");
  }
  return *l.w;
}

Obj require_object(const Groupoid& g, const std::string& name) {
  if (auto x = g.find_object(name)) {
    return *x;
  }
  throw UsageError("unknown object " + name);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::size_t count_true(const std::vector<bool>& v) {
  return static_cast<std::size_t>(std::count(v.begin(), v.end(), true));
}

MonMor mon_literal(const MonGroupoid& mon, const std::string& text) {
  const Groupoid& G = mon.ambient().groupoid();
  try {
    return mon.element(parse_path(G, text));
  } catch (const PreconditionError& e) {
    throw UsageError(text + ": " + e.what());
  }
}

std::string describe(const MonGroupoid& mon, const MonMor& a) {
  const Groupoid& G = mon.ambient().groupoid();
  return format_path(G, a.path) + " (source " + G.name(mon.source(a)) +
         ", target " + G.name(mon.target(a)) + ", projects to " +
         G.name(mon.project(a)) + ")";
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const Loaded l = load_file(path);
  const Groupoid& G = l.groupoid();
  const StarredGroupoid& sg = *l.starred;
  out << path << ": valid\n";
  out << "objects: " << G.num_objects() << '\n';
  out << "morphisms: " << G.num_morphisms() << '\n';
  out << "group-groupoid: " << yes_no(sg.group() != nullptr) << '\n';
  if (sg.group() != nullptr) {
    const Report gr = validate_group_groupoid(G, *sg.group());
    for (const auto& n : gr.notes()) {
      out << "note: " << n << '\n';
    }
  }
  out << "star edges: " << sg.edges().size() << '\n';
  out << "connected stars: " << count_true(star_connected(sg)) << "/"
      << G.num_objects() << '\n';
  out << "tree stars: " << count_true(star_is_tree(sg)) << "/"
      << G.num_objects() << '\n';
  if (l.w) {
    const Report h = check_hypotheses(sg, *l.w, l.v);
    out << "W: " << l.w->size() << " morphisms\n";
    if (l.v) {
      out << "V: " << l.v->size() << " morphisms\n";
    }
    out << "M(G,W) hypotheses: " << (h.ok() ? "pass" : "fail") << '\n'
        << h.str();
  } else {
    out << "W: none\n";
  }
  if (l.model.local) {
    out << "local morphism: " << l.model.local->map.size()
        << " entries into " << l.model.local->target << '\n';
  }
  return kExitOk;
}

int cmd_emit(const std::string& path, std::ostream& out) {
  const Loaded l = load_file(path);
  out << emit(l.model);
  return kExitOk;
}

int cmd_mon(const std::string& path, const std::string& object,
            std::size_t max_len, std::ostream& out) {
  const Loaded l = load_file(path);
  const MonGroupoid mon(*l.starred);
  const Obj x = require_object(l.groupoid(), object);
  const auto elements = mon.enumerate(x, max_len);
  out << "Mon star of " << object << " up to length " << max_len << ": "
      << elements.size() << " elements\n";
  for (const MonMor& a : elements) {
    out << format_path(l.groupoid(), a.path) << '\n';
  }
  return kExitOk;
}

int cmd_mon_compose(const std::string& path, const std::string& a_text,
                    const std::string& b_text, std::ostream& out) {
  const Loaded l = load_file(path);
  const Groupoid& G = l.groupoid();
  const MonGroupoid mon(*l.starred);
  const MonMor a = mon_literal(mon, a_text);
  const MonMor b = mon_literal(mon, b_text);
  out << "a = " << describe(mon, a) << '\n';
  out << "b = " << describe(mon, b) << '\n';
  int code = kExitOk;
  if (mon.target(a) != mon.source(b)) {
    out << "a•b: undefined, target(a) = " << G.name(mon.target(a))
        << " but source(b) = " << G.name(mon.source(b)) << '\n';
    code = kExitFalse;
  } else {
    out << "a•b = " << describe(mon, mon.compose(a, b)) << '\n';
  }
  out << "a^-1 = " << describe(mon, mon.inverse(a)) << '\n';
  if (l.starred->group() != nullptr) {
    out << "a·b = " << describe(mon, mon.group_multiply(a, b)) << '\n';
  }
  return code;
}

int cmd_mgw_eq(const std::string& path, const std::string& w1_text,
               const std::string& w2_text, std::ostream& out) {
  const Loaded l = load_file(path);
  const Groupoid& G = l.groupoid();
  const MorphismSet& W = require_w(l, path);
  std::optional<Presentation> pres;
  try {
    pres.emplace(*l.starred, W, l.v);
  } catch (const ValidationError& e) {
    throw Refusal("refused: " + e.headline(), e.report());
  }
  Word words[2];
  const std::string* texts[2] = {&w1_text, &w2_text};
  for (int i = 0; i < 2; ++i) {
    try {
      words[i] = parse_word(G, W, *texts[i]);
    } catch (const LiteralError& e) {
      throw UsageError(*texts[i] + ": " + e.what());
    }
    out << "w" << i + 1 << " = " << format_word(G, words[i])
        << ": evaluates to " << G.name(evaluate(G, words[i]))
        << ", lifts to " << format_path(G, pres->to_mon(words[i]).path)
        << '\n';
  }
  if (pres->equal(words[0], words[1])) {
    out << "equal\n";
    return kExitOk;
  }
  if (evaluate(G, words[0]) == evaluate(G, words[1])) {
    out << "distinct: winding detected\n";
  } else {
    out << "distinct: different morphisms of G\n";
  }
  return kExitFalse;
}

struct ExtendArgs {
  std::string file;
  std::string target;
  std::string word;
  std::string morphism;
  std::size_t group_check = 0;
};

int cmd_extend(const ExtendArgs& args, std::ostream& out) {
  const Loaded l = load_file(args.file);
  const Groupoid& G = l.groupoid();
  const MorphismSet& W = require_w(l, args.file);
  if (!l.model.local) {
    throw UsageError(args.file + ": file has no [local-morphism H] section");
  }
  std::string target = args.target;
  if (target.empty()) {
    target = (std::filesystem::path(args.file).parent_path() /
              l.model.local->target)
                 .string();
  }
  const Loaded h = load_file(target);
  std::optional<LocalMorphism> f;
  try {
    f.emplace(LocalMorphism::from_names(*l.starred, W, *h.starred,
                                        l.model.local->map));
  } catch (const Error& e) {
    throw UsageError(args.file + ": [local-morphism]: " + e.what());
  }
  std::optional<Extension> ext;
  try {
    ext.emplace(*f);
  } catch (const ValidationError& e) {
    throw Refusal("refused: " + e.headline(), e.report());
  }
  const Groupoid& H = h.groupoid();
  out << "local morphism: " << l.model.local->map.size() << " entries, valid\n";
  int code = kExitOk;
  if (!args.word.empty()) {
    Word w;
    try {
      w = parse_word(G, W, args.word);
    } catch (const LiteralError& e) {
      throw UsageError(args.word + ": " + e.what());
    }
    out << "f~(" << format_word(G, w) << ") = " << H.name(ext->on_word(w))
        << '\n';
  }
  if (!args.morphism.empty()) {
    const auto g = G.find_morphism(args.morphism);
    if (!g) {
      throw UsageError("unknown morphism " + args.morphism);
    }
    Mor values[2];
    const TieBreak orders[2] = {TieBreak::lexicographic,
                                TieBreak::reverse_lexicographic};
    const char* labels[2] = {"lexicographic", "reverse"};
    for (int i = 0; i < 2; ++i) {
      try {
        const Word w = ext->factorize(*g, orders[i]);
        values[i] = ext->on_word(w);
        out << "factorization (" << labels[i] << "): " << format_word(G, w)
            << " -> " << H.name(values[i]) << '\n';
      } catch (const PreconditionError& e) {
        throw Refusal(std::string("refused: ") + e.what(), Report{});
      }
    }
    if (values[0] == values[1]) {
      out << "f~(" << G.name(*g) << ") = " << H.name(values[0]) << '\n';
    } else {
      out << "tie-breaks disagree\n";
      code = kExitFalse;
    }
  }
  if (args.group_check > 0) {
    const auto samples = enumerate_words(G, W, args.group_check);
    Report r;
    try {
      r = check_group_morphism(*ext, samples);
    } catch (const PreconditionError& e) {
      throw Refusal(std::string("refused: ") + e.what(), Report{});
    }
    out << "group morphism on words of length <= " << args.group_check << ": "
        << (r.ok() ? "pass" : "fail") << '\n'
        << r.str();
    if (!r.ok()) {
      code = kExitFalse;
    }
  }
  return code;
}

int cmd_product_check(const std::string& left, const std::string& right,
                      std::size_t max_len, std::ostream& out) {
  const Loaded a = load_file(left);
  const Loaded b = load_file(right);
  const auto product = StarredGroupoid::product(a.starred, b.starred);
  const MonGroupoid mon(*product);
  const Report r = check_product_split(mon, max_len);
  out << "product of " << left << " and " << right << ": "
      << product->groupoid().num_objects() << " objects, "
      << product->groupoid().num_morphisms() << " morphisms, group-groupoid: "
      << yes_no(product->group() != nullptr) << '\n';
  out << "component length <= " << max_len << '\n' << r.str();
  out << "product-check: " << (r.ok() ? "pass" : "fail") << '\n';
  return r.ok() ? kExitOk : kExitFalse;
}

int cmd_holonomy(const std::string& path, std::ostream& out) {
  const Loaded l = load_file(path);
  const Groupoid& G = l.groupoid();
  const MorphismSet W = l.w ? *l.w : MorphismSet::all(G);
  out << "W: " << W.size() << " morphisms ("
      << (l.w ? "from [W]" : "all of G") << ")\n";
  Holonomy h = [&] {
    try {
      return holonomy(G, W);
    } catch (const PreconditionError& e) {
      throw Refusal(std::string("refused: ") + e.what(), Report{});
    }
  }();
  const Extendibility e = check_extendibility(G, W);
  out << "W generates G: " << yes_no(h.generates) << '\n';
  out << "germs: " << h.germs.size() << '\n';
  out << "J0: " << h.kernel.size()
      << " germs, normal: " << yes_no(h.kernel_normal) << '\n';
  out << "Hol: " << h.groupoid.num_objects() << " objects, "
      << h.groupoid.num_morphisms() << " morphisms\n";
  out << h.report.str();
  out << "extendibility (products of length <= 3):\n" << e.report.str();
  const bool ok = h.report.ok() && e.report.ok();
  out << "holonomy: " << (ok ? "pass" : "fail") << '\n';
  return ok ? kExitOk : kExitFalse;
}

int cmd_sections(const std::string& path, std::size_t max_domain,
                 std::ostream& out) {
  const Loaded l = load_file(path);
  const auto family = enumerate_sections(l.groupoid(), max_domain);
  const Report r = check_inverse_semigroup(l.groupoid(), family);
  out << "sections with |domain| <= " << max_domain << ": " << family.size()
      << '\n'
      << r.str();
  out << "inverse semigroup laws: " << (r.ok() ? "pass" : "fail") << '\n';
  return r.ok() ? kExitOk : kExitFalse;
}

int cmd_fixture(const std::string& name, bool list, std::ostream& out) {
  if (list || name.empty()) {
    for (const auto& n : fixture_names()) {
      out << n << '\n';
    }
    return kExitOk;
  }
  try {
    out << emit(fixture(name));
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Finite groupoid and monodromy toolkit", "ggd"};
  app.require_subcommand(1);

  std::string file;
  std::string file2;
  std::string object;
  std::string a_text;
  std::string b_text;
  std::size_t max_len = 0;
  std::size_t max_domain = 0;
  std::string fixture_name;
  bool fixture_list = false;
  ExtendArgs ext;

  auto* validate = app.add_subcommand("validate", "Load a file and run every validator");
  validate->add_option("FILE", file)->required();

  auto* emit_cmd = app.add_subcommand("emit", "Print a file in canonical form");
  emit_cmd->add_option("FILE", file)->required();

  auto* mon = app.add_subcommand("mon", "Enumerate a star of Mon(G)");
  mon->add_option("FILE", file)->required();
  mon->add_option("--object", object, "Object name")->required();
  mon->add_option("--max-len", max_len, "Path length bound")->required();

  auto* mon_compose = app.add_subcommand("mon-compose", "Compose two elements of Mon(G)");
  mon_compose->add_option("FILE", file)->required();
  mon_compose->add_option("--a", a_text, "Edge path [v0,v1,...]")->required();
  mon_compose->add_option("--b", b_text, "Edge path [v0,v1,...]")->required();

  auto* mgw = app.add_subcommand("mgw-eq", "Decide equality of two words in M(G,W)");
  mgw->add_option("FILE", file)->required();
  mgw->add_option("--w1", a_text, "Word [u1,...] or [@x]")->required();
  mgw->add_option("--w2", b_text, "Word [u1,...] or [@x]")->required();

  auto* extend = app.add_subcommand("extend", "Globalize the file's local morphism");
  extend->add_option("FILE", ext.file)->required();
  extend->add_option("--target", ext.target, "Target file; defaults to the path named in [local-morphism H]");
  extend->add_option("--word", ext.word, "Evaluate the weak extension on a word");
  extend->add_option("--morphism", ext.morphism, "Evaluate the strong extension on a morphism");
  extend->add_option("--group-check", ext.group_check, "Check f~ is a group morphism on words up to this length");

  auto* product = app.add_subcommand("product-check", "Check Mon(G×H) against Mon(G)×Mon(H)");
  product->add_option("LEFT", file)->required();
  product->add_option("RIGHT", file2)->required();
  product->add_option("--max-len", max_len, "Component length bound")->required();

  auto* hol = app.add_subcommand("holonomy", "Build Hol(G,W) and compare it with <W>");
  hol->add_option("FILE", file)->required();

  auto* sections = app.add_subcommand("sections", "Check the inverse semigroup of local sections");
  sections->add_option("FILE", file)->required();
  sections->add_option("--max-domain", max_domain, "Domain size bound")->required();

  auto* fixture_cmd = app.add_subcommand("fixture", "Print a built-in fixture");
  fixture_cmd->add_option("NAME", fixture_name);
  fixture_cmd->add_flag("--list", fixture_list, "List fixture names");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (app.get_subcommands().empty()) {
      err << app.help();
    }
    return kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(file, out);
    if (*emit_cmd) return cmd_emit(file, out);
    if (*mon) return cmd_mon(file, object, max_len, out);
    if (*mon_compose) return cmd_mon_compose(file, a_text, b_text, out);
    if (*mgw) return cmd_mgw_eq(file, a_text, b_text, out);
    if (*extend) return cmd_extend(ext, out);
    if (*product) return cmd_product_check(file, file2, max_len, out);
    if (*hol) return cmd_holonomy(file, out);
    if (*sections) return cmd_sections(file, max_domain, out);
    if (*fixture_cmd) return cmd_fixture(fixture_name, fixture_list, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Refusal& e) {
    out << e.what() << '\n' << e.report.str();
    return kExitFalse;
  } catch (const PreconditionError& e) {
    out << "refused: " << e.what() << '\n';
    return kExitFalse;
  } catch (const Error& e) {
    out << "error: " << e.what() << '\n';
    return kExitFalse;
  }
  return kExitUsage;
}

}  // namespace ggd
