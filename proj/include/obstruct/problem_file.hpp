#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "obstruct/obstruction.hpp"

namespace obstruct {

// Line-oriented problem files. Grammar (one item per line, single spaces,
// two-space indentation steps):
//
//   file      := "ring " RING NL { entry }
//   entry     := comment | blank | complex | map | square | command
//   comment   := "#" TEXT NL
//   complex   := "complex " NAME NL { "  degree " INT " rank " INT NL { "    " row NL } } "end" NL
//   map       := "map " NAME " : " NAME " -> " NAME " degree " INT NL
//                { "  component " INT NL { "    " row NL } } "end" NL
//   square    := "square " NAME " : " NAME " " NAME " " NAME " " NAME NL
//   command   := "command " WORD { " " WORD } NL
//   row       := SCALAR { " " SCALAR }
//
// Complex degrees are listed in descending order; the rows under degree n
// are the rows of d_n (rank(n-1) rows of rank(n) entries). Map components
// hold target.rank(n + degree) rows of source.rank(n) entries; components
// that are zero may be omitted and are omitted on output.

enum class ParseErrorKind { Syntax, UnresolvedReference, PredicateFailure };

class ParseError : public Error {
 public:
  ParseError(int line, ParseErrorKind kind, const std::string& message);
  int line() const { return line_; }
  ParseErrorKind kind() const { return kind_; }

 private:
  int line_;
  ParseErrorKind kind_;
};

struct CommentLine {
  std::string text;  // verbatim, empty for a blank line
};

struct NamedComplex {
  std::string name;
  ChainComplex complex;
};

struct NamedMap {
  std::string name;
  std::string source;
  std::string target;
  ChainMap map;
};

struct NamedSquare {
  std::string name;
  std::string i;
  std::string p;
  std::string top;
  std::string bottom;
};

struct Command {
  std::vector<std::string> words;
};

using Entry = std::variant<CommentLine, NamedComplex, NamedMap, NamedSquare, Command>;

struct ProblemFile {
  Ring ring;
  std::vector<Entry> entries;

  const ChainComplex* find_complex(const std::string& name) const;
  const ChainMap* find_map(const std::string& name) const;
  const NamedSquare* find_square_entry(const std::string& name) const;
  std::optional<LiftingSquare> find_square(const std::string& name) const;
  std::vector<Command> commands() const;
};

/// Throws ParseError. With `ring_override` the file's ring declaration is
/// replaced and every entry is read in that ring.
ProblemFile parse_problem(std::string_view text, std::optional<Ring> ring_override = std::nullopt);
std::string serialize_problem(const ProblemFile& file);

/// Splits and validates a command line ("homology C 0", ...) against the
/// file's objects. Throws ParseError with the given line number.
Command parse_command(const ProblemFile& file, std::string_view text, int line = 0);

struct RunResult {
  std::string report;
  /// 0: every verdict positive, 1: some obstruction or missing lift, 2: error.
  int exit_code = 0;
};

RunResult run_command(const ProblemFile& file, const Command& command);
/// Runs every command of the file in order; the exit code is the maximum.
RunResult run_problem(const ProblemFile& file);

/// Random problem with one square and obstruction/lift commands.
ProblemFile demo_problem(const Ring& ring, std::uint64_t seed);

}  // namespace obstruct
