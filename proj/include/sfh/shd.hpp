#pragma once

// The `.shd` diagram text format.
//
//   shd 1
//   name <free text>
//   expect <key> <value>
//   vertex <id> crossing|marker
//   edge <id> alpha <i>|beta <j>|bd <c> <tail> <head>
//   region <id> genus <g> cycle <±edge>... [cycle <±edge>...]
//
// `#` starts a comment. The canonical form written by serialize() lists
// statements by kind then id with single spaces and LF line endings, and
// carries a few generated `#` summary lines that parsing ignores.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sfh/diagram.hpp"

namespace sfh {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lexes and resolves references; does not check diagram invariants.
RawDiagram parse_raw(std::string_view text);

/// parse_raw followed by validate(); throws ParseError or DiagramError.
Diagram parse(std::string_view text);

std::string serialize(const Diagram& diagram);

/// serialize(parse(text)).
std::string canonicalize(std::string_view text);

/// Reads a file ("-" reads standard input). Throws IoError when unreadable.
std::string read_text(const std::filesystem::path& path);

Diagram load_diagram(const std::filesystem::path& path);

}  // namespace sfh
