#include "obstruct/problem_file.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "obstruct/oracle.hpp"
#include "obstruct/random.hpp"
#include "obstruct/simplicial.hpp"

namespace obstruct {

namespace {

std::string kind_label(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Syntax:
      return "syntax error";
    case ParseErrorKind::UnresolvedReference:
      return "unresolved reference";
    case ParseErrorKind::PredicateFailure:
      return "predicate failure";
  }
  return "error";
}

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
    std::size_t start = k;
    while (k < line.size() && line[k] != ' ' && line[k] != '\t') ++k;
    if (k > start) out.emplace_back(line.substr(start, k - start));
  }
  return out;
}

std::optional<int> to_int(const std::string& word) {
  int value = 0;
  const char* end = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

bool is_name(const std::string& word) {
  if (word.empty() || !(std::isalpha(static_cast<unsigned char>(word[0])) || word[0] == '_')) return false;
  return std::all_of(word.begin(), word.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'' || ch == '-';
  });
}

struct Line {
  int number;
  std::string text;
};

class Parser {
 public:
  Parser(std::string_view text, std::optional<Ring> ring_override)
      : override_(std::move(ring_override)) {
    int number = 1;
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      lines_.push_back(Line{number++, std::string(text.substr(start, end - start))});
      start = end + 1;
    }
  }

  ProblemFile parse() {
    if (lines_.empty()) fail(1, ParseErrorKind::Syntax, "empty file; expected 'ring Z|Q|Z/p'");
    const auto head = split_words(lines_[0].text);
    if (head.size() != 2 || head[0] != "ring") fail(1, ParseErrorKind::Syntax, "expected 'ring Z|Q|Z/p'");
    Ring ring = Ring::integers();
    try {
      ring = Ring::parse(head[1]);
    } catch (const Error& e) {
      fail(1, ParseErrorKind::Syntax, e.what());
    }
    ProblemFile file{override_ ? *override_ : ring, {}};
    pos_ = 1;
    while (pos_ < lines_.size()) {
      const Line& line = lines_[pos_];
      const auto words = split_words(line.text);
      if (words.empty()) {
        if (!line.text.empty()) fail(line.number, ParseErrorKind::Syntax, "whitespace-only line");
        file.entries.push_back(CommentLine{""});
        ++pos_;
      } else if (line.text[0] == '#') {
        file.entries.push_back(CommentLine{line.text});
        ++pos_;
      } else if (words[0] == "complex") {
        file.entries.push_back(parse_complex(file));
      } else if (words[0] == "map") {
        file.entries.push_back(parse_map(file));
      } else if (words[0] == "square") {
        file.entries.push_back(parse_square(file, line, words));
        ++pos_;
      } else if (words[0] == "command") {
        file.entries.push_back(parse_command(file, line.text.substr(line.text.find("command") + 7),
                                             line.number));
        ++pos_;
      } else {
        fail(line.number, ParseErrorKind::Syntax, "unknown declaration '" + words[0] + "'");
      }
    }
    return file;
  }

 private:
  [[noreturn]] static void fail(int line, ParseErrorKind kind, const std::string& message) {
    throw ParseError(line, kind, message);
  }

  void claim_name(int line, const std::string& name) {
    if (!is_name(name)) fail(line, ParseErrorKind::Syntax, "invalid name '" + name + "'");
    if (!names_.insert(name).second) fail(line, ParseErrorKind::Syntax, "duplicate name '" + name + "'");
  }

  std::vector<Scalar> parse_row(const Ring& ring, const Line& line) {
    std::vector<Scalar> row;
    for (const std::string& word : split_words(line.text)) {
      try {
        row.push_back(ring.parse_scalar(word));
      } catch (const Error& e) {
        fail(line.number, ParseErrorKind::Syntax, e.what());
      }
    }
    return row;
  }

  // Reads "  <keyword> n ..." headers and their rows up to "end".
  struct Block {
    int line;
    std::vector<std::string> header;
    std::vector<std::pair<int, std::vector<Scalar>>> rows;
  };

  std::vector<Block> read_blocks(const Ring& ring, const std::string& keyword, int open_line) {
    std::vector<Block> blocks;
    ++pos_;
    while (true) {
      if (pos_ >= lines_.size()) fail(open_line, ParseErrorKind::Syntax, "missing 'end'");
      const Line& line = lines_[pos_++];
      const auto words = split_words(line.text);
      if (words.empty()) fail(line.number, ParseErrorKind::Syntax, "blank line inside block");
      if (words.size() == 1 && words[0] == "end") break;
      if (words[0] == keyword) {
        blocks.push_back(Block{line.number, words, {}});
        continue;
      }
      if (blocks.empty()) fail(line.number, ParseErrorKind::Syntax, "matrix row before '" + keyword + "'");
      blocks.back().rows.emplace_back(line.number, parse_row(ring, line));
    }
    return blocks;
  }

  static Matrix assemble(const Ring& ring, const Block& block, std::size_t rows, std::size_t cols,
                         const std::string& what) {
    if (block.rows.size() != rows) {
      fail(block.line, ParseErrorKind::Syntax,
           what + " needs " + std::to_string(rows) + " rows, found " + std::to_string(block.rows.size()));
    }
    Matrix m(ring, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      const auto& [number, row] = block.rows[r];
      if (row.size() != cols) {
        fail(number, ParseErrorKind::Syntax,
             what + " row needs " + std::to_string(cols) + " entries, found " + std::to_string(row.size()));
      }
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, row[c]);
    }
    return m;
  }

  NamedComplex parse_complex(const ProblemFile& file) {
    const Line& open = lines_[pos_];
    const auto words = split_words(open.text);
    if (words.size() != 2) fail(open.number, ParseErrorKind::Syntax, "expected 'complex NAME'");
    claim_name(open.number, words[1]);
    const Ring& ring = file.ring;
    const auto blocks = read_blocks(ring, "degree", open.number);

    std::map<int, std::size_t> ranks;
    std::optional<int> previous;
    for (const Block& b : blocks) {
      const auto& h = b.header;
      std::optional<int> n = h.size() == 4 ? to_int(h[1]) : std::nullopt;
      std::optional<int> r = h.size() == 4 && h[2] == "rank" ? to_int(h[3]) : std::nullopt;
      if (!n || !r) fail(b.line, ParseErrorKind::Syntax, "expected 'degree N rank R'");
      if (*r <= 0) fail(b.line, ParseErrorKind::Syntax, "rank must be positive");
      if (previous && *n >= *previous) fail(b.line, ParseErrorKind::Syntax, "degrees must be strictly descending");
      previous = n;
      ranks[*n] = static_cast<std::size_t>(*r);
    }
    std::map<int, Matrix> ds;
    for (const Block& b : blocks) {
      const int n = *to_int(b.header[1]);
      auto below = ranks.find(n - 1);
      const std::size_t rows = below == ranks.end() ? 0 : below->second;
      ds.emplace(n, assemble(ring, b, rows, ranks[n], "d_" + std::to_string(n)));
    }
    ChainComplex c(ring, ranks, std::move(ds));
    if (auto bad = first_nonzero_square(c)) {
      fail(open.number, ParseErrorKind::PredicateFailure,
           "complex " + words[1] + ": d_" + std::to_string(*bad - 1) + " d_" + std::to_string(*bad) +
               " != 0 at degree " + std::to_string(*bad));
    }
    return NamedComplex{words[1], std::move(c)};
  }

  NamedMap parse_map(const ProblemFile& file) {
    const Line& open = lines_[pos_];
    const auto words = split_words(open.text);
    std::optional<int> degree = words.size() == 8 ? to_int(words[7]) : std::nullopt;
    if (words.size() != 8 || words[2] != ":" || words[4] != "->" || words[6] != "degree" || !degree) {
      fail(open.number, ParseErrorKind::Syntax, "expected 'map NAME : SOURCE -> TARGET degree K'");
    }
    claim_name(open.number, words[1]);
    const ChainComplex* source = file.find_complex(words[3]);
    const ChainComplex* target = file.find_complex(words[5]);
    if (!source) fail(open.number, ParseErrorKind::UnresolvedReference, "no complex named '" + words[3] + "'");
    if (!target) fail(open.number, ParseErrorKind::UnresolvedReference, "no complex named '" + words[5] + "'");
    const auto blocks = read_blocks(file.ring, "component", open.number);

    ChainMap f(*source, *target, *degree);
    std::set<int> seen;
    for (const Block& b : blocks) {
      std::optional<int> n = b.header.size() == 2 ? to_int(b.header[1]) : std::nullopt;
      if (!n) fail(b.line, ParseErrorKind::Syntax, "expected 'component N'");
      if (!seen.insert(*n).second) fail(b.line, ParseErrorKind::Syntax, "duplicate component");
      const std::size_t rows = target->rank(*n + *degree);
      const std::size_t cols = source->rank(*n);
      if (rows == 0 || cols == 0) {
        fail(b.line, ParseErrorKind::Syntax, "component " + std::to_string(*n) + " has no entries");
      }
      f.set_component(*n, assemble(file.ring, b, rows, cols, "component " + std::to_string(*n)));
    }
    if (!is_chain_map(f)) {
      fail(open.number, ParseErrorKind::PredicateFailure, "map " + words[1] + " is not a chain map");
    }
    return NamedMap{words[1], words[3], words[5], std::move(f)};
  }

  NamedSquare parse_square(const ProblemFile& file, const Line& line, const std::vector<std::string>& words) {
    if (words.size() != 7 || words[2] != ":") {
      fail(line.number, ParseErrorKind::Syntax, "expected 'square NAME : I P TOP BOTTOM'");
    }
    claim_name(line.number, words[1]);
    for (std::size_t k = 3; k < 7; ++k) {
      if (!file.find_map(words[k])) {
        fail(line.number, ParseErrorKind::UnresolvedReference, "no map named '" + words[k] + "'");
      }
    }
    NamedSquare sq{words[1], words[3], words[4], words[5], words[6]};
    try {
      check_square(LiftingSquare{*file.find_map(sq.i), *file.find_map(sq.p), *file.find_map(sq.top),
                                 *file.find_map(sq.bottom)});
    } catch (const Error& e) {
      fail(line.number, ParseErrorKind::PredicateFailure, "square " + sq.name + ": " + e.what());
    }
    return sq;
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::set<std::string> names_;
  std::optional<Ring> override_;
};

// ---- serialization ---------------------------------------------------------------

void write_rows(std::ostream& os, const Ring& ring, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "    ";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << ring.format(m.at(r, c));
    os << '\n';
  }
}

// ---- reports ----------------------------------------------------------------------

std::string rank_list(const ChainComplex& c) {
  if (c.is_zero()) return "zero";
  std::ostringstream os;
  const auto support = c.support();
  for (auto it = support.rbegin(); it != support.rend(); ++it) {
    os << (it == support.rbegin() ? "" : " ") << *it << ':' << c.rank(*it);
  }
  return os.str();
}

void write_map(std::ostream& os, const std::string& label, const ChainMap& f) {
  const auto degrees = f.active_degrees();
  bool any = false;
  for (auto it = degrees.rbegin(); it != degrees.rend(); ++it) {
    const Matrix m = f.component(*it);
    if (m.is_zero()) continue;
    any = true;
    os << "  " << label << " degree " << *it << ":\n";
    write_rows(os, f.ring(), m);
  }
  if (!any) os << "  " << label << ": zero\n";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct CommandError : Error {
  using Error::Error;
};

const ChainMap& need_map(const ProblemFile& file, const std::string& name) {
  const ChainMap* m = file.find_map(name);
  if (!m) throw CommandError("no map named '" + name + "'");
  return *m;
}

LiftingSquare need_square(const ProblemFile& file, const std::string& name) {
  auto sq = file.find_square(name);
  if (!sq) throw CommandError("no square named '" + name + "'");
  return *sq;
}

int run_homology(const ProblemFile& file, const Command& cmd, std::ostream& os) {
  const ChainComplex* c = file.find_complex(cmd.words[1]);
  const int n = *to_int(cmd.words[2]);
  os << "  H_" << n << ": " << homology(*c, n).to_string() << '\n';
  return 0;
}

int run_obstruction(const ProblemFile& file, const Command& cmd, std::ostream& os) {
  const LiftingSquare sq = need_square(file, cmd.words[1]);
  const ObstructionClass alpha = obstruction(sq);
  os << "  W ranks: " << rank_list(alpha.w) << '\n';
  os << "  F ranks: " << rank_list(alpha.f) << '\n';
  write_map(os, "theta", alpha.theta);
  const bool vanishes = obstruction_vanishes(alpha);
  os << "  class: " << (vanishes ? "VANISHES" : "NONZERO") << '\n';
  return vanishes ? 0 : 1;
}

int run_lift(const ProblemFile& file, const Command& cmd, std::ostream& os) {
  const LiftingSquare sq = need_square(file, cmd.words[1]);
  const auto lift = lift_via_obstruction(sq);
  const OracleVerdict oracle = brute_lift(sq);
  if (lift.has_value() != oracle.lift.has_value()) {
    throw CommandError("obstruction engine and oracle disagree");
  }
  if (lift) {
    write_map(os, "lift", lift->ell);
    os << "  verified: " << yes_no(is_lift(sq, lift->ell)) << '\n';
    return 0;
  }
  const InconsistencyCertificate& cert = *oracle.certificate;
  const Ring& ring = file.ring;
  os << "  NO LIFT\n";
  os << "  certificate: " << oracle.equations << " equations in " << oracle.unknowns
     << " unknowns; reduced row " << cert.row << " reads " << ring.format(cert.factor)
     << " * y = " << ring.format(cert.value) << '\n';
  return 1;
}

void describe_factorization(std::ostream& os, const std::string& title, const Factorization& fac,
                            const ChainMap& f) {
  os << "  " << title << ": middle ranks " << rank_list(fac.middle) << '\n';
  os << "    first: cofibration " << yes_no(is_cofibration(fac.first)) << ", weak equivalence "
     << yes_no(is_weak_equivalence(fac.first)) << '\n';
  os << "    second: fibration " << yes_no(is_fibration(fac.second)) << ", weak equivalence "
     << yes_no(is_weak_equivalence(fac.second)) << '\n';
  os << "    composite equals map: " << yes_no(compose(fac.second, fac.first) == f) << '\n';
}

int run_factor(const ProblemFile& file, const Command& cmd, std::ostream& os) {
  const ChainMap& f = need_map(file, cmd.words[1]);
  if (f.degree() != 0) throw CommandError("factor needs a degree-0 map");
  describe_factorization(os, "acyclic cofibration then fibration", factor_acyclic_cof_then_fib(f), f);
  describe_factorization(os, "cofibration then acyclic fibration", factor_cof_then_acyclic_fib(f), f);
  return 0;
}

int run_suspend(const ProblemFile& file, const Command& cmd, std::ostream& os) {
  const LiftingSquare sq = need_square(file, cmd.words[1]);
  const int k = cmd.words.size() > 2 ? *to_int(cmd.words[2]) : 1;
  const bool base = obstruction_vanishes(obstruction(sq));
  const ObstructionClass moved = obstruction(shift(sq, k));
  const bool shifted = obstruction_vanishes(moved);
  os << "  original: " << (base ? "VANISHES" : "NONZERO") << '\n';
  os << "  shifted by " << k << ": " << (shifted ? "VANISHES" : "NONZERO") << '\n';
  os << "  shifted W ranks: " << rank_list(moved.w) << '\n';
  os << "  shifted F ranks: " << rank_list(moved.f) << '\n';
  if (base != shifted) throw CommandError("verdict changed under shift");
  return shifted ? 0 : 1;
}

int run_rlp_check(const ProblemFile& file, const Command& cmd, std::ostream& os) {
  const ChainMap& p = need_map(file, cmd.words[1]);
  const GeneratorKind kind = cmd.words[2] == "sphere" ? GeneratorKind::SphereDisk : GeneratorKind::SimplexBoundary;
  const int n = *to_int(cmd.words[3]);
  const RlpVerdict verdict = rlp_equivalence_check(p, GeneratingCofibration{kind, n});
  os << "  H_" << (n - 1) << "(F): " << verdict.obstruction_group.to_string() << '\n';
  os << "  spanning squares: " << verdict.spanning_squares.size() << '\n';
  os << "  rlp: " << (verdict.rlp ? "YES" : "NO") << '\n';
  if (verdict.witness) {
    write_map(os, "witness top", verdict.witness->top);
    write_map(os, "witness bottom", verdict.witness->bottom);
  }
  return verdict.rlp ? 0 : 1;
}

int run_classify(const ProblemFile& file, const Command& cmd, std::ostream& os) {
  const ChainMap& f = need_map(file, cmd.words[1]);
  if (f.degree() != 0) throw CommandError("classify needs a degree-0 map");
  os << "  cofibration: " << yes_no(is_cofibration(f)) << '\n';
  os << "  fibration: " << yes_no(is_fibration(f)) << '\n';
  os << "  weak equivalence: " << yes_no(is_weak_equivalence(f)) << '\n';
  return 0;
}

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (std::size_t k = 0; k < words.size(); ++k) out += (k ? " " : "") + words[k];
  return out;
}

}  // namespace

ParseError::ParseError(int line, ParseErrorKind kind, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + kind_label(kind) + ": " + message),
      line_(line),
      kind_(kind) {}

const ChainComplex* ProblemFile::find_complex(const std::string& name) const {
  for (const Entry& e : entries)
    if (auto* c = std::get_if<NamedComplex>(&e); c && c->name == name) return &c->complex;
  return nullptr;
}

const ChainMap* ProblemFile::find_map(const std::string& name) const {
  for (const Entry& e : entries)
    if (auto* m = std::get_if<NamedMap>(&e); m && m->name == name) return &m->map;
  return nullptr;
}

const NamedSquare* ProblemFile::find_square_entry(const std::string& name) const {
  for (const Entry& e : entries)
    if (auto* s = std::get_if<NamedSquare>(&e); s && s->name == name) return s;
  return nullptr;
}

std::optional<LiftingSquare> ProblemFile::find_square(const std::string& name) const {
  const NamedSquare* s = find_square_entry(name);
  if (!s) return std::nullopt;
  return LiftingSquare{*find_map(s->i), *find_map(s->p), *find_map(s->top), *find_map(s->bottom)};
}

std::vector<Command> ProblemFile::commands() const {
  std::vector<Command> out;
  for (const Entry& e : entries)
    if (auto* c = std::get_if<Command>(&e)) out.push_back(*c);
  return out;
}

ProblemFile parse_problem(std::string_view text, std::optional<Ring> ring_override) {
  return Parser(text, std::move(ring_override)).parse();
}

Command parse_command(const ProblemFile& file, std::string_view text, int line) {
  const auto words = split_words(text);
  auto syntax = [&](const std::string& message) {
    throw ParseError(line, ParseErrorKind::Syntax, message);
  };
  auto unresolved = [&](const std::string& message) {
    throw ParseError(line, ParseErrorKind::UnresolvedReference, message);
  };
  if (words.empty()) syntax("empty command");
  const std::string& verb = words[0];
  if (verb == "homology") {
    if (words.size() != 3 || !to_int(words[2])) syntax("expected 'homology COMPLEX N'");
    if (!file.find_complex(words[1])) unresolved("no complex named '" + words[1] + "'");
  } else if (verb == "obstruction" || verb == "lift") {
    if (words.size() != 2) syntax("expected '" + verb + " SQUARE'");
    if (!file.find_square_entry(words[1])) unresolved("no square named '" + words[1] + "'");
  } else if (verb == "suspend") {
    if (words.size() < 2 || words.size() > 3 || (words.size() == 3 && !to_int(words[2]))) {
      syntax("expected 'suspend SQUARE [K]'");
    }
    if (!file.find_square_entry(words[1])) unresolved("no square named '" + words[1] + "'");
  } else if (verb == "factor" || verb == "classify") {
    if (words.size() != 2) syntax("expected '" + verb + " MAP'");
    if (!file.find_map(words[1])) unresolved("no map named '" + words[1] + "'");
  } else if (verb == "rlp-check") {
    if (words.size() != 4 || (words[2] != "sphere" && words[2] != "simplex") || !to_int(words[3])) {
      syntax("expected 'rlp-check MAP sphere|simplex N'");
    }
    if (!file.find_map(words[1])) unresolved("no map named '" + words[1] + "'");
  } else {
    syntax("unknown command '" + verb + "'");
  }
  return Command{words};
}

std::string serialize_problem(const ProblemFile& file) {
  std::ostringstream os;
  const Ring& ring = file.ring;
  os << "ring " << ring.name() << '\n';
  for (const Entry& entry : file.entries) {
    if (auto* c = std::get_if<CommentLine>(&entry)) {
      os << c->text << '\n';
    } else if (auto* nc = std::get_if<NamedComplex>(&entry)) {
      os << "complex " << nc->name << '\n';
      const auto support = nc->complex.support();
      for (auto it = support.rbegin(); it != support.rend(); ++it) {
        os << "  degree " << *it << " rank " << nc->complex.rank(*it) << '\n';
        write_rows(os, ring, nc->complex.differential(*it));
      }
      os << "end\n";
    } else if (auto* nm = std::get_if<NamedMap>(&entry)) {
      os << "map " << nm->name << " : " << nm->source << " -> " << nm->target << " degree "
         << nm->map.degree() << '\n';
      const auto degrees = nm->map.active_degrees();
      for (auto it = degrees.rbegin(); it != degrees.rend(); ++it) {
        const Matrix m = nm->map.component(*it);
        if (m.is_zero()) continue;
        os << "  component " << *it << '\n';
        write_rows(os, ring, m);
      }
      os << "end\n";
    } else if (auto* ns = std::get_if<NamedSquare>(&entry)) {
      os << "square " << ns->name << " : " << ns->i << ' ' << ns->p << ' ' << ns->top << ' '
         << ns->bottom << '\n';
    } else if (auto* cmd = std::get_if<Command>(&entry)) {
      os << "command " << join(cmd->words) << '\n';
    }
  }
  return os.str();
}

RunResult run_command(const ProblemFile& file, const Command& cmd) {
  std::ostringstream os;
  os << "> " << join(cmd.words) << '\n';
  int code = 2;
  std::ostringstream body;
  try {
    const std::string& verb = cmd.words.at(0);
    if (verb == "homology") code = run_homology(file, cmd, body);
    else if (verb == "obstruction") code = run_obstruction(file, cmd, body);
    else if (verb == "lift") code = run_lift(file, cmd, body);
    else if (verb == "factor") code = run_factor(file, cmd, body);
    else if (verb == "suspend") code = run_suspend(file, cmd, body);
    else if (verb == "rlp-check") code = run_rlp_check(file, cmd, body);
    else if (verb == "classify") code = run_classify(file, cmd, body);
    else throw CommandError("unknown command '" + verb + "'");
    os << body.str();
  } catch (const std::exception& e) {
    os << body.str() << "  error: " << e.what() << '\n';
    code = 2;
  }
  return RunResult{os.str(), code};
}

RunResult run_problem(const ProblemFile& file) {
  RunResult total;
  for (const Command& cmd : file.commands()) {
    RunResult r = run_command(file, cmd);
    total.report += r.report;
    total.exit_code = std::max(total.exit_code, r.exit_code);
  }
  return total;
}

ProblemFile demo_problem(const Ring& ring, std::uint64_t seed) {
  InstanceGenerator gen(ring, seed);
  const LiftingSquare sq = gen.square();
  ProblemFile file{ring, {}};
  file.entries.push_back(CommentLine{"# random square, seed " + std::to_string(seed)});
  file.entries.push_back(NamedComplex{"A", sq.i.source()});
  file.entries.push_back(NamedComplex{"B", sq.i.target()});
  file.entries.push_back(NamedComplex{"X", sq.p.source()});
  file.entries.push_back(NamedComplex{"Y", sq.p.target()});
  file.entries.push_back(NamedMap{"i", "A", "B", sq.i});
  file.entries.push_back(NamedMap{"p", "X", "Y", sq.p});
  file.entries.push_back(NamedMap{"top", "A", "X", sq.top});
  file.entries.push_back(NamedMap{"bottom", "B", "Y", sq.bottom});
  file.entries.push_back(NamedSquare{"sq", "i", "p", "top", "bottom"});
  file.entries.push_back(Command{{"obstruction", "sq"}});
  file.entries.push_back(Command{{"lift", "sq"}});
  return file;
}

}  // namespace obstruct
