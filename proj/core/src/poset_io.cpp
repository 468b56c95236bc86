#include "cig/poset_io.hpp"

#include <algorithm>
#include <cctype>

#include "cig/ci_graph.hpp"

namespace cig {

namespace {

bool label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int column = 1;

  bool at_end() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++pos;
  }

  void skip_spaces() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) advance();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line, column, message);
  }

  std::string read_label() {
    skip_spaces();
    if (at_end() || !label_char(peek())) fail("expected a label ([A-Za-z0-9_]+)");
    std::string out;
    while (!at_end() && label_char(peek())) {
      out.push_back(peek());
      advance();
    }
    return out;
  }

  void expect_line_end() {
    skip_spaces();
    if (!at_end() && peek() != '\n') fail("unexpected trailing characters");
    if (!at_end()) advance();
  }

  bool consume_keyword(std::string_view word) {
    if (text.substr(pos, word.size()) != word) return false;
    for (std::size_t i = 0; i < word.size(); ++i) advance();
    return true;
  }

  void skip_rest_of_line() {
    while (!at_end() && peek() != '\n') advance();
    if (!at_end()) advance();
  }
};

struct Block {
  std::optional<std::string> name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  bool has_elements = false;
  bool has_covers = false;
};

ParsedPoset finish_block(Block& block, const Cursor& cursor, BuildMode mode) {
  if (!block.has_elements) {
    throw ParseError(cursor.line, cursor.column, "poset block has no 'elements:' line");
  }
  if (!block.has_covers) {
    throw ParseError(cursor.line, cursor.column, "poset block has no 'covers:' line");
  }
  BuildReport report = build_poset(block.elements, block.covers, mode);
  return ParsedPoset{block.name, std::move(report.poset), std::move(report.warnings)};
}

std::vector<ParsedPoset> parse_blocks(std::string_view text, BuildMode mode) {
  Cursor cursor{text};
  std::vector<ParsedPoset> out;
  Block block;
  bool block_open = false;

  while (!cursor.at_end()) {
    cursor.skip_spaces();
    if (cursor.at_end()) break;
    char c = cursor.peek();
    if (c == '\n') {
      cursor.advance();
      if (block_open && block.has_covers) {
        out.push_back(finish_block(block, cursor, mode));
        block = Block{};
        block_open = false;
      }
      continue;
    }
    if (c == '#') {
      cursor.skip_rest_of_line();
      continue;
    }
    if (cursor.consume_keyword("poset")) {
      if (block_open) cursor.fail("unexpected 'poset' inside a block");
      cursor.skip_spaces();
      block.name = cursor.read_label();
      cursor.expect_line_end();
      block_open = true;
      continue;
    }
    if (cursor.consume_keyword("elements:")) {
      if (block.has_elements) cursor.fail("duplicate 'elements:' line");
      block_open = true;
      block.has_elements = true;
      cursor.skip_spaces();
      while (!cursor.at_end() && cursor.peek() != '\n') {
        block.elements.push_back(cursor.read_label());
        cursor.skip_spaces();
      }
      if (!cursor.at_end()) cursor.advance();
      continue;
    }
    if (cursor.consume_keyword("covers:")) {
      if (!block.has_elements) cursor.fail("'covers:' before 'elements:'");
      if (block.has_covers) cursor.fail("duplicate 'covers:' line");
      block.has_covers = true;
      cursor.skip_spaces();
      if (!cursor.at_end() && cursor.peek() != '\n') {
        for (;;) {
          std::string lo = cursor.read_label();
          cursor.skip_spaces();
          if (cursor.at_end() || cursor.peek() != '<') cursor.fail("expected '<'");
          cursor.advance();
          std::string hi = cursor.read_label();
          block.covers.emplace_back(std::move(lo), std::move(hi));
          cursor.skip_spaces();
          if (cursor.at_end() || cursor.peek() == '\n') break;
          if (cursor.peek() != ',') cursor.fail("expected ',' between cover pairs");
          cursor.advance();
        }
      }
      if (!cursor.at_end()) cursor.advance();
      continue;
    }
    cursor.fail("expected 'poset', 'elements:', 'covers:', or a comment");
  }
  if (block_open) {
    out.push_back(finish_block(block, cursor, mode));
  }
  return out;
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

ParsedPoset parse_poset_file(std::string_view text, BuildMode mode) {
  auto blocks = parse_blocks(text, mode);
  if (blocks.empty()) throw ParseError(1, 1, "no poset found");
  if (blocks.size() > 1) throw ParseError(1, 1, "expected a single poset block");
  return std::move(blocks.front());
}

std::vector<ParsedPoset> parse_poset_stream(std::string_view text, BuildMode mode) {
  return parse_blocks(text, mode);
}

std::string serialize_poset(const Poset& p, std::optional<std::string_view> name) {
  std::string out;
  if (name) {
    out += "poset ";
    out += *name;
    out += "\n";
  }
  out += "elements:";
  for (const auto& label : p.labels()) {
    out += " ";
    out += label;
  }
  out += "\ncovers:";
  bool first = true;
  for (auto [u, v] : p.cover_pairs()) {
    out += first ? " " : ", ";
    out += p.label(u) + "<" + p.label(v);
    first = false;
  }
  out += "\n";
  return out;
}

std::string export_dot(const Poset& p, DotKind kind) {
  std::string out;
  if (kind == DotKind::Hasse) {
    out += "digraph hasse {\n";
    for (const auto& label : p.labels()) {
      out += "  \"" + label + "\";\n";
    }
    for (auto [u, v] : p.cover_pairs()) {
      out += "  \"" + p.label(u) + "\" -> \"" + p.label(v) + "\";\n";
    }
  } else {
    out += "graph ci {\n";
    const CIGraph g = ci_graph(p);
    for (const auto& label : g.labels()) {
      out += "  \"" + label + "\";\n";
    }
    for (auto [u, v] : g.edges()) {
      out += "  \"" + g.label(u) + "\" -- \"" + g.label(v) + "\";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace cig
