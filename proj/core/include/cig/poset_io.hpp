#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cig/poset.hpp"

namespace cig {

/// Poset file grammar, line oriented:
///   # comment
///   poset NAME            (optional, before elements)
///   elements: a b c
///   covers: a<b, b<c      (order generators; bare "covers:" = antichain)
/// Labels match [A-Za-z0-9_]+. Blank lines separate blocks in multi-poset
/// streams.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct ParsedPoset {
  std::optional<std::string> name;
  Poset poset;
  std::vector<std::string> warnings;  // non-cover generator pairs
};

ParsedPoset parse_poset_file(std::string_view text, BuildMode mode = BuildMode::Lenient);
std::vector<ParsedPoset> parse_poset_stream(std::string_view text,
                                            BuildMode mode = BuildMode::Lenient);

/// Canonical serialization; parse(serialize(p)) reproduces p byte-stably.
std::string serialize_poset(const Poset& p, std::optional<std::string_view> name = {});

enum class DotKind { Hasse, Ci };

/// Hasse: directed graph with an edge u -> v per cover pair u ≺ v.
/// Ci: undirected C-I graph. Node order = label order; deterministic bytes.
std::string export_dot(const Poset& p, DotKind kind);

}  // namespace cig
