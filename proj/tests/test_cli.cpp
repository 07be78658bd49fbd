#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "obstruct/problem_file.hpp"

using namespace obstruct;

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::filesystem::path(OBSTRUCT_FIXTURE_DIR) / name);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ParseErrorKind error_kind(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("expected a parse error");
  return ParseErrorKind::Syntax;
}

}  // namespace

TEST_CASE("minimal sphere file round-trips") {
  const std::string text = "ring Z\ncomplex S0\n  degree 0 rank 1\nend\n";
  const ProblemFile file = parse_problem(text);
  CHECK(serialize_problem(file) == text);
  CHECK(*file.find_complex("S0") == ChainComplex(Ring::integers(), {{0, 1}}));
}

TEST_CASE("homology command") {
  const ProblemFile file = parse_problem("ring Z\ncomplex S0\n  degree 0 rank 1\nend\n");
  const RunResult r = run_command(file, parse_command(file, "homology S0 0"));
  CHECK(r.report == "> homology S0 0\n  H_0: free rank 1\n");
  CHECK(r.exit_code == 0);
}

TEST_CASE("d squared error names the degree") {
  const std::string text = read_fixture("bad_square_differential.obs");
  try {
    parse_problem(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseErrorKind::PredicateFailure);
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("at degree 2") != std::string::npos);
  }
}

TEST_CASE("error kinds are distinct") {
  CHECK(error_kind(read_fixture("bad_syntax.obs")) == ParseErrorKind::Syntax);
  CHECK(error_kind(read_fixture("bad_unresolved.obs")) == ParseErrorKind::UnresolvedReference);
  CHECK(error_kind(read_fixture("bad_not_fibration.obs")) == ParseErrorKind::PredicateFailure);
  CHECK(error_kind("ring Z\ncomplex C\n  degree 0 rank 1\n") == ParseErrorKind::Syntax);
  CHECK(error_kind("ring Z/4\n") == ParseErrorKind::Syntax);
  CHECK(error_kind("ring Z\ncommand lift nowhere\n") == ParseErrorKind::UnresolvedReference);
  CHECK(error_kind("ring Z\ncommand frobnicate\n") == ParseErrorKind::Syntax);
  CHECK(error_kind("ring Z\ncomplex C\nend\ncomplex C\nend\n") == ParseErrorKind::Syntax);
  CHECK(error_kind("ring Z\ncomplex C\n  degree 0 rank 1\n  degree 1 rank 1\nend\n") ==
        ParseErrorKind::Syntax);
  CHECK(error_kind("ring Z\ncomplex C\n  degree 1 rank 1\n    1/2\n  degree 0 rank 1\nend\n") ==
        ParseErrorKind::Syntax);
}

TEST_CASE("worked disk/sphere fixtures") {
  SUBCASE("a = 0, c = 1") {
    const ProblemFile file = parse_problem(read_fixture("disk_sphere_a0_c1.obs"));
    const RunResult r = run_command(file, parse_command(file, "obstruction sq"));
    CHECK(r.exit_code == 1);
    CHECK(r.report.find("  theta degree 0:\n    1\n  class: NONZERO\n") != std::string::npos);
    const RunResult l = run_command(file, parse_command(file, "lift sq"));
    CHECK(l.exit_code == 1);
    CHECK(l.report.find("NO LIFT") != std::string::npos);
  }
  SUBCASE("a = 1, c = 1") {
    const ProblemFile file = parse_problem(read_fixture("disk_sphere_a1_c1.obs"));
    const RunResult r = run_command(file, parse_command(file, "obstruction sq"));
    CHECK(r.exit_code == 0);
    CHECK(r.report.find("class: VANISHES") != std::string::npos);
    const RunResult l = run_command(file, parse_command(file, "lift sq"));
    CHECK(l.report == "> lift sq\n  lift degree 1:\n    1\n  lift degree 0:\n    1\n  verified: yes\n");
  }
}

TEST_CASE("ring override rereads entries") {
  const std::string text = read_fixture("torsion_fibre.obs");
  const ProblemFile over_q = parse_problem(text, Ring::rationals());
  CHECK(over_q.ring == Ring::rationals());
  CHECK(run_problem(over_q).exit_code == 0);
  CHECK(run_problem(parse_problem(text)).exit_code == 1);
  CHECK_THROWS_AS(parse_problem("ring Q\ncomplex C\n  degree 1 rank 1\n    1/2\n  degree 0 rank 1\nend\n",
                                Ring::integers()),
                  ParseError);
}

TEST_CASE("rationals and residues serialize canonically") {
  const std::string q = "ring Q\ncomplex C\n  degree 1 rank 1\n    -3/2\n  degree 0 rank 1\nend\n";
  CHECK(serialize_problem(parse_problem(q)) == q);
  const std::string p = "ring Z/5\ncomplex C\n  degree 1 rank 1\n    4\n  degree 0 rank 1\nend\n";
  CHECK(serialize_problem(parse_problem(p)) == p);
  const std::string negative = "ring Z/5\ncomplex C\n  degree 1 rank 1\n    -1\n  degree 0 rank 1\nend\n";
  CHECK(serialize_problem(parse_problem(negative)) == p);
}

TEST_CASE("demo problems round-trip and re-verify") {
  for (const Ring& ring : {Ring::integers(), Ring::rationals(), Ring::prime_field(2)}) {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      const ProblemFile file = demo_problem(ring, seed);
      const std::string text = serialize_problem(file);
      const ProblemFile again = parse_problem(text);
      CHECK(serialize_problem(again) == text);
      const RunResult first = run_problem(again);
      CHECK(first.exit_code != 2);
      CHECK(run_problem(parse_problem(text)).report == first.report);
      // obstruction and lift commands agree on the verdict
      const bool vanishes = first.report.find("VANISHES") != std::string::npos;
      const bool lifted = first.report.find("verified: yes") != std::string::npos;
      CHECK(vanishes == lifted);
    }
  }
}

TEST_CASE("command errors are reported with exit code 2") {
  const ProblemFile file = parse_problem(read_fixture("rlp_disk_sphere.obs"));
  // multiplication by 2 over Z is not a fibration
  const ProblemFile bad = parse_problem(
      "ring Z\ncomplex S0\n  degree 0 rank 1\nend\nmap two : S0 -> S0 degree 0\n  component 0\n    2\nend\n"
      "command rlp-check two sphere 1\n");
  const RunResult r = run_problem(bad);
  CHECK(r.exit_code == 2);
  CHECK(r.report.find("  error: ") != std::string::npos);
  CHECK(run_problem(file).exit_code == 1);
}
