#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ggd/presentation.hpp"

namespace ggd {

/// One non-blank line of a GGD document, comment stripped and tokenized.
struct DocLine {
  std::size_t number;
  std::vector<std::string> tokens;
};

struct DocSection {
  std::string name;
  /// Only `[local-morphism H]` carries an argument.
  std::string argument;
  std::size_t line;
  std::vector<DocLine> lines;
};

struct Document {
  int version = 1;
  std::vector<DocSection> sections;
  /// Number of the last line of the text, used for end-of-file errors.
  std::size_t last_line = 0;

  const DocSection* find(std::string_view name) const;
};

/// Header, section names and section uniqueness. Throws ParseError.
Document parse_document(std::string_view text);

struct LocalMorphismSpec {
  std::string target;
  std::vector<std::pair<std::string, std::string>> map;
  bool operator==(const LocalMorphismSpec&) const = default;
};

/// Everything a GGD file says, by name.
struct GgdModel {
  GroupoidTable groupoid;
  std::optional<GroupTables> group;
  std::vector<std::array<std::string, 3>> star_edges;
  std::optional<std::vector<std::string>> w;
  std::optional<std::vector<std::string>> v;
  std::optional<LocalMorphismSpec> local;

  /// Sorts every list; star edges get their two vertices in name order.
  void canonicalize();
  bool operator==(const GgdModel&) const = default;
};

/// Required sections, token counts, duplicate and unknown names, and the
/// all-or-none rule for the group sections. Throws ParseError with the
/// offending line.
GgdModel to_model(const Document& doc);
GgdModel parse_model(std::string_view text);

/// Canonical text; parse_model(emit(m)) equals m after canonicalize().
std::string emit(GgdModel m);

/// A model turned into checked structures.
struct Loaded {
  GgdModel model;
  std::shared_ptr<const StarredGroupoid> starred;
  std::optional<MorphismSet> w;
  std::optional<MorphismSet> v;

  const Groupoid& groupoid() const { return starred->groupoid(); }
};

/// Runs the groupoid, group-groupoid and star validators in that order and
/// throws ValidationError carrying the first failing report.
Loaded load(const GgdModel& model);
/// Reads and parses a file. Throws Error when it cannot be opened.
GgdModel read_model(const std::string& path);

/// A malformed word or path literal.
class LiteralError : public Error {
 public:
  using Error::Error;
};

/// `[u1,u2,...]` with letters in W, or `[@x]` for the empty word at x.
Word parse_word(const Groupoid& g, const MorphismSet& w,
                std::string_view text);
std::string format_word(const Groupoid& g, const Word& w);

/// `[v0,v1,...]`, the vertices of an edge path in one star.
EdgePath parse_path(const Groupoid& g, std::string_view text);
std::string format_path(const Groupoid& g, const EdgePath& p);

}  // namespace ggd
